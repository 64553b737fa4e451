#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kodaira/params.hpp"
#include "kodaira/picard.hpp"
#include "kodaira/pushforward.hpp"
#include "kodaira/rational.hpp"

namespace kodaira {

/// Sym^a(E) or Sym^a(E)^dual, twisted by N^e, on the base curve C.
/// Zero bundles are never represented: sym_deg is always >= 0.
struct CurveBundle {
  std::int64_t sym_deg = 0;
  bool dualized = false;
  std::int64_t n_exp = 0;
  std::int64_t rank = 1;
  Rational degree{0};

  bool operator==(const CurveBundle&) const = default;
};

/// Builds a CurveBundle with rank a+1 and degree
/// +-(a(a+1)/2) deg L + rank * e * deg N.
CurveBundle make_curve_bundle(std::int64_t sym_deg, bool dualized, std::int64_t n_exp,
                              const ConstructionParams& params);

/// A summand of a direct-image decomposition, tagged with its index i.
struct IndexedBundle {
  std::int64_t index = 0;
  CurveBundle bundle;

  bool operator==(const IndexedBundle&) const = default;
};

enum class WitnessRule { exact_match, rr_positivity };

std::string_view rule_name(WitnessRule rule);

/// Witness for a nonzero H^0 of a curve bundle. The identity record is
/// lhs = l * sym_deg against rhs = n_exp; they are equal for exact-match
/// witnesses.
struct Witness {
  std::int64_t index = 0;
  CurveBundle bundle;
  std::int64_t identity_lhs = 0;
  std::int64_t identity_rhs = 0;
  std::int64_t h_lower_bound = 0;
  WitnessRule rule = WitnessRule::exact_match;
  bool proven = true;  // false for hits outside the theorem ranges

  bool operator==(const Witness&) const = default;
};

/// pi_*: O_P(a) (x) N^e -> Sym^a(E) (x) N^e for a >= 0, zero otherwise.
std::optional<CurveBundle> pi_lower(const PSummand& s, const ConstructionParams& params);

/// R^1 pi_*: O_P(-t) (x) N^e -> Sym^{t-2}(E)^dual (x) N^{e-l} for t >= 2,
/// zero otherwise. The -l shift is det(E)^-1 = L^-1 = N^-l.
std::optional<CurveBundle> r1_pi_lower(const PSummand& s, const ConstructionParams& params);

/// Twists every summand of `d` by N^shift.
Decomposition twist(const Decomposition& d, std::int64_t shift);

/// phi_* Z^-n, summand by summand (zero summands dropped). Empty for n >= 1.
std::vector<IndexedBundle> phi_lower_z_neg(std::int64_t n, const ConstructionParams& params);

/// R^1 phi_* Z^-n = R^1 pi_*(psi_* O_X(-n Et)) (x) N^-n, zero summands
/// dropped. The index is the i of the summand M^i it came from.
std::vector<IndexedBundle> r1_phi_lower_z_neg(std::int64_t n, const ConstructionParams& params);

/// H^1(X, Z^-n) = H^0(C, R^1 phi_* Z^-n). Returns the bundles whose global
/// sections compute H^1; throws LerayObstruction if phi_* Z^-n is nonzero.
std::vector<IndexedBundle> leray_h1(std::int64_t n, const ConstructionParams& params);

/// Sufficient conditions for H^0(C, b) != 0. Exact match: b is
/// Sym^a(E)^dual (x) N^{l a}, which has a section from dualizing the
/// determinant quotient Sym^a(E) -> L^a. Otherwise Riemann-Roch positivity
/// deg + rank(1-g) > 0. The bound is a lower bound on h^0, never exact.
std::optional<Witness> has_section(const IndexedBundle& b, const ConstructionParams& params);

/// All summands of `bundles` that has_section certifies.
std::vector<Witness> scan_witnesses(const std::vector<IndexedBundle>& bundles,
                                    const ConstructionParams& params, bool proven);

/// H^1(X, Z^-n) != 0 for 1 <= n <= floor(l/2): the exact-match witness at
/// index l-n, where l((l-n)m - 2) = (l-n)p - n - l. Throws OutOfProvenRange
/// outside that range.
Witness theorem_nonvan1(std::int64_t n, const ConstructionParams& params);

/// H^1(X, Z_{a,b}^-1) for 1 <= a <= l-1, 1 <= b <= l-a: the summand at index
/// l-b of R^1 phi_* Z_{a,b}^-1. Throws OutOfProvenRange outside the
/// rectangle, and NoCertificate when that summand vanishes (this happens for
/// (a, b) = (1, l-1) when m = 1, where the symmetric degree would be -1).
Witness theorem_nonvan2(std::int64_t a, std::int64_t b, const ConstructionParams& params);

/// R^1 phi_* Z_{a,b}^-1 with zero summands dropped (any a, b >= 1).
std::vector<IndexedBundle> r1_phi_lower_z_ab(std::int64_t a, std::int64_t b,
                                             const ConstructionParams& params);

/// The formal summand at index l-b of R^1 phi_* Z_{a,b}^-1 before the
/// zero-dropping rule: symmetric degree (l-b)m - 2 and twist (l-b)p - b - l.
struct FormalSummand {
  std::int64_t index = 0;
  std::int64_t sym_deg = 0;
  std::int64_t n_exp = 0;
};
FormalSummand nonvan2_formal_summand(std::int64_t a, std::int64_t b,
                                     const ConstructionParams& params);

/// R^1 phi_* Z_{a,b}^-1 computed with the refuted decomposition.
std::vector<IndexedBundle> r1_erroneous_z_ab(std::int64_t a, std::int64_t b,
                                             const ConstructionParams& params);

struct ContradictionReport {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t k = 0;
  DivClassX twist;         // Z_{a,b}^k (x) omega_X^-1
  CurveClass twist_base;
  bool twist_ample = false;
  bool k_is_p_minus_1 = false;
  std::optional<Witness> erroneous_witness;
  /// Ample twist at k = p-1 plus a nonvanishing certificate from the refuted
  /// formula: regularity would follow, while X covers a genus-g ruled surface
  /// so q(X) >= g > 0.
  bool contradiction = false;
  /// At k = p-1 the Et coefficient is ap - a - pl + p + l + 1 and the base is
  /// (bp - b + pl - p - l)N - K_C.
  bool twist_matches_closed_form = false;
  /// Pairs of the proven rectangle where both the Et coefficient and the
  /// base degree of the k = p-1 twist are positive. Expected empty.
  std::vector<std::pair<std::int64_t, std::int64_t>> both_positive;
};

ContradictionReport regularity_contradiction_demo(const ConstructionParams& params,
                                                  std::int64_t a, std::int64_t b,
                                                  std::int64_t k);

}  // namespace kodaira
