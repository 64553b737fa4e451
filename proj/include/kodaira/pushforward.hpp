#pragma once

#include <cstdint>
#include <vector>

#include "kodaira/params.hpp"
#include "kodaira/rational.hpp"

namespace kodaira {

/// The line bundle O_P(op_deg) (x) pi^*N^n_exp on P.
///
/// M^i(-qE) with M = O_P(-m) (x) pi^*N^p is encoded as
/// op_deg = -(i*m + q), n_exp = i*p.
struct PSummand {
  std::int64_t op_deg = 0;
  std::int64_t n_exp = 0;

  auto operator<=>(const PSummand&) const = default;
};

PSummand m_power(std::int64_t i, std::int64_t q, const ConstructionParams& params);

enum class Provenance {
  corrected,   // psi_* of O_X or O_X(-k Et), spread-out multiplicities
  erroneous,   // the refuted single-block formula
  thickening,  // graded pieces of psi_*O_{k Et}, each restricted to E
};

/// An ordered direct-sum decomposition into PSummands. For `thickening`
/// each entry stands for the line bundle obtained by restricting it to
/// E = C, of degree op_deg*deg L + n_exp*deg N.
struct Decomposition {
  std::vector<PSummand> summands;
  Provenance provenance = Provenance::corrected;

  std::size_t rank() const { return summands.size(); }
  bool operator==(const Decomposition&) const = default;
};

/// True iff both decompositions contain the same summands with the same
/// multiplicities, ignoring order.
bool same_multiset(const Decomposition& a, const Decomposition& b);

/// psi_*O_X = (+)_{i=0}^{l-1} M^i.
Decomposition pushforward_structure(const ConstructionParams& params);

/// psi_*O_X(-k Et) for k >= 1. With q = floor(k/l), r = k - q*l the summands
/// are M^i(-(q+1)E) for i < r followed by M^i(-qE) for r <= i < l.
Decomposition pushforward_negative(std::int64_t k, const ConstructionParams& params);

/// Graded pieces of psi_*O_{k Et}: M^i|_{(q+1)E} for i < r and M^i|_{qE} for
/// i >= r, each split along the E-adic filtration into the line bundles
/// M^i(-sE)|_E. Ordered by i, then s. The total rank is exactly k.
Decomposition pushforward_thickening(std::int64_t k, const ConstructionParams& params);

/// The refuted formula O_P(-kE) (+) (+)_{i=1}^{l-1} M^i.
Decomposition pushforward_erroneous(std::int64_t k, const ConstructionParams& params);

/// Sum of chi(O_E(piece)) over a thickening decomposition (curve
/// Riemann-Roch on E = C).
Rational euler_char_thickening_pieces(const Decomposition& d, const ConstructionParams& params);

struct RefutationReport {
  std::int64_t k = 0;
  Rational chi_cover{0};  // chi(O_{k Et})
  Rational chi_base{0};   // chi(O_{kE})
  Decomposition corrected;
  Decomposition erroneous;
  Decomposition thickening;
  Rational sum_chi_corrected{0};  // sum of chi(P, .) over `corrected`
  Rational sum_chi_erroneous{0};
  Rational chi_rr{0};             // chi(X, O_X(-k Et)) by Riemann-Roch on X
  bool decompositions_differ = false;
  bool mismatch = false;

  bool operator==(const RefutationReport&) const = default;
};

/// Compares chi(O_{k Et}) with chi(O_{kE}); the refuted formula forces them
/// to agree. Requires k >= 2; k == 1 throws NoContradiction.
RefutationReport refute_erroneous(std::int64_t k, const ConstructionParams& params);

}  // namespace kodaira
