#pragma once

#include <cstdint>
#include <span>

#include "kodaira/params.hpp"
#include "kodaira/rational.hpp"

namespace kodaira {

struct PSummand;

// Numerical divisor classes. Everything lives modulo numerical equivalence;
// a class pulled back from C is recorded only by its degree, and D in |L| is
// identified with l*N.

/// A class e*E + pi^*(c) on the ruled surface P = P(E) with deg c = base_deg.
/// (E.E) = deg L, (E.fiber) = 1, (fiber.fiber) = 0.
struct DivClassP {
  std::int64_t e_coeff = 0;
  Rational base_deg{0};

  bool operator==(const DivClassP&) const = default;
};

/// A class t*Et + phi^*(c) on the cover X, with Et the reduced preimage of E.
/// (Et.Et) = deg N, (Et.fiber) = 1, (fiber.fiber) = 0.
struct DivClassX {
  Rational et_coeff{0};
  Rational base_deg{0};

  bool operator==(const DivClassX&) const = default;
};

/// n_exp*N + k_coeff*K_C on the base curve.
struct CurveClass {
  Rational n_exp{0};
  std::int64_t k_coeff = 0;

  Rational degree(const ConstructionParams& params) const;
  bool operator==(const CurveClass&) const = default;
};

namespace classes {
DivClassP section_P();                                   // E
DivClassP fiber_P();                                     // pi^*(point)
DivClassP pullback_P(const Rational& deg);               // pi^*(c), deg c given
DivClassX section_X();                                   // Et
DivClassX fiber_X();                                     // phi^*(point)
DivClassX pullback_X(const Rational& deg);               // phi^*(c)
DivClassP of(const PSummand& s, const ConstructionParams& params);
}  // namespace classes

Rational intersect_P(const DivClassP& a, const DivClassP& b, const ConstructionParams& params);
Rational intersect_X(const DivClassX& a, const DivClassX& b, const ConstructionParams& params);

/// psi^*: E pulls back to l*Et, pi^*(c) to phi^*(c).
DivClassX pullback_to_X(const DivClassP& a, const ConstructionParams& params);

/// K_X = (p-m-1)l*Et + phi^*(K_C - ((pl-p-l)/l) D).
DivClassX canonical_X(const ConstructionParams& params);
/// The base part K_C - (pl-p-l)N of canonical_X as a curve class.
CurveClass canonical_X_base(const ConstructionParams& params);

/// (K_X . fiber). Reported, never reconciled against a fiber arithmetic
/// genus.
Rational canonical_dot_fiber(const ConstructionParams& params);

/// Z_{a,b} = O_X(a Et) (x) phi^*N^b. Throws NonPositiveCoefficient unless
/// a, b >= 1.
DivClassX z_ab_class(std::int64_t a, std::int64_t b, const ConstructionParams& params);

/// Z_{a,b}^k (x) omega_X^-1 = k*Z_{a,b} - K_X.
DivClassX adjunction_twist(std::int64_t a, std::int64_t b, std::int64_t k,
                           const ConstructionParams& params);
/// The base part k*b*N - (K_C - (pl-p-l)N) of adjunction_twist.
CurveClass adjunction_twist_base(std::int64_t a, std::int64_t b, std::int64_t k,
                                 const ConstructionParams& params);

/// Positivity of (c.c), (c.Et) and (c.fiber): the fiber-and-section check
/// used for ampleness in the construction. Not a full Nakai-Moishezon test
/// over every curve on X.
bool is_ample_by_intersections(const DivClassX& c, const ConstructionParams& params);

/// chi(O_{kEt}) on X (on_cover) or chi(O_{kE}) on P:
///   k(1-g) - k(k-1)(g-1)/(pl)   resp.   k(1-g) - k(k-1)(g-1)/p.
/// Requires k >= 1; the result is always an integer.
Rational euler_char_thickening(std::int64_t k, bool on_cover, const ConstructionParams& params);

/// chi(P, O_P(t) (x) pi^*N^e) by Riemann-Roch on P with
/// K_P = -2E + pi^*(K_C + L) and chi(O_P) = 1 - g.
Rational euler_char_P(const PSummand& s, const ConstructionParams& params);
Rational euler_char_P(std::span<const PSummand> summands, const ConstructionParams& params);

/// chi(O_X) = sum_{i<l} chi(P, M^i), from psi_*O_X = (+) M^i.
Rational euler_char_structure_X(const ConstructionParams& params);

/// chi(X, O_X(D)) = chi(O_X) + D.(D - K_X)/2 by Riemann-Roch on X.
Rational euler_char_X(const DivClassX& d, const ConstructionParams& params);

}  // namespace kodaira
