#include "kodaira/picard.hpp"

#include <string>

#include "kodaira/error.hpp"
#include "kodaira/pushforward.hpp"

namespace kodaira {

Rational CurveClass::degree(const ConstructionParams& params) const {
  return n_exp * params.deg_N + Rational(k_coeff * (2 * params.g - 2));
}

namespace classes {
DivClassP section_P() { return {1, Rational(0)}; }
DivClassP fiber_P() { return {0, Rational(1)}; }
DivClassP pullback_P(const Rational& deg) { return {0, deg}; }
DivClassX section_X() { return {Rational(1), Rational(0)}; }
DivClassX fiber_X() { return {Rational(0), Rational(1)}; }
DivClassX pullback_X(const Rational& deg) { return {Rational(0), deg}; }
DivClassP of(const PSummand& s, const ConstructionParams& params) {
  return {s.op_deg, Rational(s.n_exp * params.deg_N)};
}
}  // namespace classes

Rational intersect_P(const DivClassP& a, const DivClassP& b, const ConstructionParams& params) {
  return Rational(a.e_coeff * b.e_coeff * params.deg_L) + Rational(a.e_coeff) * b.base_deg +
         Rational(b.e_coeff) * a.base_deg;
}

Rational intersect_X(const DivClassX& a, const DivClassX& b, const ConstructionParams& params) {
  return a.et_coeff * b.et_coeff * params.deg_N + a.et_coeff * b.base_deg + b.et_coeff * a.base_deg;
}

DivClassX pullback_to_X(const DivClassP& a, const ConstructionParams& params) {
  return {Rational(a.e_coeff * params.l), a.base_deg};
}

CurveClass canonical_X_base(const ConstructionParams& params) {
  const std::int64_t p = params.p, l = params.l;
  return {Rational(-(p * l - p - l)), 1};
}

DivClassX canonical_X(const ConstructionParams& params) {
  return {Rational((params.p - params.m - 1) * params.l), canonical_X_base(params).degree(params)};
}

Rational canonical_dot_fiber(const ConstructionParams& params) {
  return intersect_X(canonical_X(params), classes::fiber_X(), params);
}

DivClassX z_ab_class(std::int64_t a, std::int64_t b, const ConstructionParams& params) {
  if (a < 1 || b < 1) {
    throw Error(ErrorKind::NonPositiveCoefficient,
                "Z_{a,b} needs a, b >= 1, got a=" + std::to_string(a) + ", b=" + std::to_string(b));
  }
  return {Rational(a), Rational(b * params.deg_N)};
}

DivClassX adjunction_twist(std::int64_t a, std::int64_t b, std::int64_t k,
                           const ConstructionParams& params) {
  if (k < 1) throw Error(ErrorKind::NonPositiveMultiple, "twist power k must be >= 1");
  const DivClassX z = z_ab_class(a, b, params);
  const DivClassX kx = canonical_X(params);
  return {z.et_coeff * k - kx.et_coeff, z.base_deg * k - kx.base_deg};
}

CurveClass adjunction_twist_base(std::int64_t a, std::int64_t b, std::int64_t k,
                                 const ConstructionParams& params) {
  z_ab_class(a, b, params);  // precondition check
  if (k < 1) throw Error(ErrorKind::NonPositiveMultiple, "twist power k must be >= 1");
  const CurveClass kc = canonical_X_base(params);
  return {Rational(k * b) - kc.n_exp, -kc.k_coeff};
}

bool is_ample_by_intersections(const DivClassX& c, const ConstructionParams& params) {
  return intersect_X(c, c, params) > 0 && intersect_X(c, classes::section_X(), params) > 0 &&
         intersect_X(c, classes::fiber_X(), params) > 0;
}

Rational euler_char_thickening(std::int64_t k, bool on_cover, const ConstructionParams& params) {
  if (k < 1) throw Error(ErrorKind::NonPositiveMultiple, "thickening order k must be >= 1");
  const std::int64_t denom = on_cover ? params.p * params.l : params.p;
  const Rational chi = Rational(k * (1 - params.g)) - Rational(k * (k - 1) * (params.g - 1), denom);
  to_integer(chi);
  return chi;
}

Rational euler_char_P(const PSummand& s, const ConstructionParams& params) {
  const DivClassP d = classes::of(s, params);
  const DivClassP canonical{-2, Rational(2 * params.g - 2 + params.deg_L)};
  const DivClassP d_minus_k{d.e_coeff - canonical.e_coeff, d.base_deg - canonical.base_deg};
  const Rational chi = Rational(1 - params.g) + intersect_P(d, d_minus_k, params) / 2;
  to_integer(chi);
  return chi;
}

Rational euler_char_P(std::span<const PSummand> summands, const ConstructionParams& params) {
  Rational total(0);
  for (const auto& s : summands) total += euler_char_P(s, params);
  return total;
}

Rational euler_char_structure_X(const ConstructionParams& params) {
  return euler_char_P(pushforward_structure(params).summands, params);
}

Rational euler_char_X(const DivClassX& d, const ConstructionParams& params) {
  const DivClassX kx = canonical_X(params);
  const DivClassX d_minus_k{d.et_coeff - kx.et_coeff, d.base_deg - kx.base_deg};
  const Rational chi = euler_char_structure_X(params) + intersect_X(d, d_minus_k, params) / 2;
  to_integer(chi);
  return chi;
}

}  // namespace kodaira
