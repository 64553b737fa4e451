#include "kodaira/pushforward.hpp"

#include <algorithm>
#include <string>

#include "kodaira/error.hpp"
#include "kodaira/picard.hpp"

namespace kodaira {

namespace {

void require_positive(std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::NonPositiveMultiple, "k must be >= 1, got " + std::to_string(k));
}

}  // namespace

PSummand m_power(std::int64_t i, std::int64_t q, const ConstructionParams& params) {
  return {-(i * params.m + q), i * params.p};
}

bool same_multiset(const Decomposition& a, const Decomposition& b) {
  auto x = a.summands;
  auto y = b.summands;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

Decomposition pushforward_structure(const ConstructionParams& params) {
  Decomposition out;
  for (std::int64_t i = 0; i < params.l; ++i) out.summands.push_back(m_power(i, 0, params));
  return out;
}

Decomposition pushforward_negative(std::int64_t k, const ConstructionParams& params) {
  require_positive(k);
  const std::int64_t q = k / params.l;
  const std::int64_t r = k - q * params.l;
  Decomposition out;
  out.summands.reserve(params.l);
  for (std::int64_t i = 0; i < r; ++i) out.summands.push_back(m_power(i, q + 1, params));
  for (std::int64_t i = r; i < params.l; ++i) out.summands.push_back(m_power(i, q, params));
  return out;
}

Decomposition pushforward_thickening(std::int64_t k, const ConstructionParams& params) {
  require_positive(k);
  const std::int64_t q = k / params.l;
  const std::int64_t r = k - q * params.l;
  Decomposition out;
  out.provenance = Provenance::thickening;
  for (std::int64_t i = 0; i < params.l; ++i) {
    const std::int64_t order = i < r ? q + 1 : q;
    for (std::int64_t s = 0; s < order; ++s) out.summands.push_back(m_power(i, s, params));
  }
  if (static_cast<std::int64_t>(out.rank()) != k) {
    throw Error(ErrorKind::RankMismatch, "thickening of order " + std::to_string(k) + " has rank " +
                                             std::to_string(out.rank()));
  }
  return out;
}

Decomposition pushforward_erroneous(std::int64_t k, const ConstructionParams& params) {
  require_positive(k);
  Decomposition out;
  out.provenance = Provenance::erroneous;
  out.summands.push_back({-k, 0});
  for (std::int64_t i = 1; i < params.l; ++i) out.summands.push_back(m_power(i, 0, params));
  return out;
}

Rational euler_char_thickening_pieces(const Decomposition& d, const ConstructionParams& params) {
  Rational total(0);
  for (const auto& s : d.summands) {
    total += Rational(s.op_deg * params.deg_L + s.n_exp * params.deg_N + 1 - params.g);
  }
  return total;
}

RefutationReport refute_erroneous(std::int64_t k, const ConstructionParams& params) {
  require_positive(k);
  if (k == 1) {
    throw Error(ErrorKind::NoContradiction,
                "chi(O_Et) = chi(O_E) = 1-g; the two decompositions agree at k = 1");
  }
  RefutationReport report;
  report.k = k;
  report.chi_cover = euler_char_thickening(k, true, params);
  report.chi_base = euler_char_thickening(k, false, params);
  report.corrected = pushforward_negative(k, params);
  report.erroneous = pushforward_erroneous(k, params);
  report.thickening = pushforward_thickening(k, params);
  report.sum_chi_corrected = euler_char_P(report.corrected.summands, params);
  report.sum_chi_erroneous = euler_char_P(report.erroneous.summands, params);
  report.chi_rr = euler_char_X({Rational(-k), Rational(0)}, params);
  report.decompositions_differ = !same_multiset(report.corrected, report.erroneous);
  report.mismatch = report.chi_cover != report.chi_base;
  return report;
}

}  // namespace kodaira
