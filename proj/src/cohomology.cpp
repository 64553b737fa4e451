#include "kodaira/cohomology.hpp"

#include <stdexcept>
#include <string>

#include "kodaira/error.hpp"

namespace kodaira {

namespace {

std::vector<IndexedBundle> r1_of(const Decomposition& d, const ConstructionParams& params) {
  std::vector<IndexedBundle> out;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    if (auto b = r1_pi_lower(d.summands[i], params)) {
      out.push_back({static_cast<std::int64_t>(i), *b});
    }
  }
  return out;
}

const IndexedBundle* find_index(const std::vector<IndexedBundle>& bundles, std::int64_t index) {
  for (const auto& b : bundles) {
    if (b.index == index) return &b;
  }
  return nullptr;
}

}  // namespace

std::string_view rule_name(WitnessRule rule) {
  return rule == WitnessRule::exact_match ? "exact-match" : "rr-positivity";
}

CurveBundle make_curve_bundle(std::int64_t sym_deg, bool dualized, std::int64_t n_exp,
                              const ConstructionParams& params) {
  if (sym_deg < 0) throw std::logic_error("negative symmetric power is the zero bundle");
  const std::int64_t rank = sym_deg + 1;
  const std::int64_t sym_part = sym_deg * (sym_deg + 1) / 2 * params.deg_L;
  const std::int64_t degree = (dualized ? -sym_part : sym_part) + rank * n_exp * params.deg_N;
  return {sym_deg, dualized, n_exp, rank, Rational(degree)};
}

std::optional<CurveBundle> pi_lower(const PSummand& s, const ConstructionParams& params) {
  if (s.op_deg < 0) return std::nullopt;
  return make_curve_bundle(s.op_deg, false, s.n_exp, params);
}

std::optional<CurveBundle> r1_pi_lower(const PSummand& s, const ConstructionParams& params) {
  if (s.op_deg > -2) return std::nullopt;
  return make_curve_bundle(-s.op_deg - 2, true, s.n_exp - params.l, params);
}

Decomposition twist(const Decomposition& d, std::int64_t shift) {
  Decomposition out = d;
  for (auto& s : out.summands) s.n_exp += shift;
  return out;
}

std::vector<IndexedBundle> phi_lower_z_neg(std::int64_t n, const ConstructionParams& params) {
  const Decomposition d = twist(pushforward_negative(n, params), -n);
  std::vector<IndexedBundle> out;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    if (auto b = pi_lower(d.summands[i], params)) out.push_back({static_cast<std::int64_t>(i), *b});
  }
  return out;
}

std::vector<IndexedBundle> r1_phi_lower_z_neg(std::int64_t n, const ConstructionParams& params) {
  return r1_of(twist(pushforward_negative(n, params), -n), params);
}

std::vector<IndexedBundle> leray_h1(std::int64_t n, const ConstructionParams& params) {
  if (!phi_lower_z_neg(n, params).empty()) {
    throw Error(ErrorKind::LerayObstruction,
                "phi_* Z^-" + std::to_string(n) + " is nonzero; H^1 is not H^0 of R^1");
  }
  return r1_phi_lower_z_neg(n, params);
}

std::optional<Witness> has_section(const IndexedBundle& b, const ConstructionParams& params) {
  const CurveBundle& cb = b.bundle;
  Witness w;
  w.index = b.index;
  w.bundle = cb;
  w.identity_lhs = params.l * cb.sym_deg;
  w.identity_rhs = cb.n_exp;
  if ((cb.dualized || cb.sym_deg == 0) && w.identity_lhs == w.identity_rhs) {
    w.rule = WitnessRule::exact_match;
    w.h_lower_bound = 1;
    return w;
  }
  const Rational chi = cb.degree + Rational(cb.rank * (1 - params.g));
  if (chi > 0) {
    w.rule = WitnessRule::rr_positivity;
    w.h_lower_bound = to_integer(chi);
    return w;
  }
  return std::nullopt;
}

std::vector<Witness> scan_witnesses(const std::vector<IndexedBundle>& bundles,
                                    const ConstructionParams& params, bool proven) {
  std::vector<Witness> out;
  for (const auto& b : bundles) {
    if (auto w = has_section(b, params)) {
      w->proven = proven;
      out.push_back(*w);
    }
  }
  return out;
}

Witness theorem_nonvan1(std::int64_t n, const ConstructionParams& params) {
  const std::int64_t l = params.l;
  if (n < 1 || n > l / 2) {
    throw Error(ErrorKind::OutOfProvenRange,
                "n=" + std::to_string(n) + " outside 1..floor(l/2)=" + std::to_string(l / 2));
  }
  const auto bundles = leray_h1(n, params);
  const IndexedBundle* at = find_index(bundles, l - n);
  if (at == nullptr) {
    throw Error(ErrorKind::NoCertificate, "summand l-n vanishes for n=" + std::to_string(n));
  }
  auto w = has_section(*at, params);
  if (!w || w->rule != WitnessRule::exact_match) {
    throw Error(ErrorKind::NoCertificate, "summand l-n is not an exact match for n=" + std::to_string(n));
  }
  // l((l-n)m - 2) = (l-n)p - n - l
  if (w->bundle.sym_deg != (l - n) * params.m - 2 ||
      w->bundle.n_exp != (l - n) * params.p - n - l) {
    throw std::logic_error("nonvan1 witness disagrees with its closed form");
  }
  return *w;
}

std::vector<IndexedBundle> r1_phi_lower_z_ab(std::int64_t a, std::int64_t b,
                                             const ConstructionParams& params) {
  z_ab_class(a, b, params);
  return r1_of(twist(pushforward_negative(a, params), -b), params);
}

std::vector<IndexedBundle> r1_erroneous_z_ab(std::int64_t a, std::int64_t b,
                                             const ConstructionParams& params) {
  z_ab_class(a, b, params);
  return r1_of(twist(pushforward_erroneous(a, params), -b), params);
}

FormalSummand nonvan2_formal_summand(std::int64_t a, std::int64_t b,
                                     const ConstructionParams& params) {
  const std::int64_t i = params.l - b;
  const PSummand s = twist(pushforward_negative(a, params), -b).summands.at(static_cast<std::size_t>(i));
  return {i, -s.op_deg - 2, s.n_exp - params.l};
}

Witness theorem_nonvan2(std::int64_t a, std::int64_t b, const ConstructionParams& params) {
  const std::int64_t l = params.l;
  if (a < 1 || a > l - 1 || b < 1 || b > l - a) {
    throw Error(ErrorKind::OutOfProvenRange, "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) +
                                                 ") outside a <= l-1, b <= l-a");
  }
  const auto bundles = r1_phi_lower_z_ab(a, b, params);
  const IndexedBundle* at = find_index(bundles, l - b);
  if (at == nullptr) {
    const FormalSummand f = nonvan2_formal_summand(a, b, params);
    throw Error(ErrorKind::NoCertificate,
                "summand l-b=" + std::to_string(l - b) + " is Sym^" + std::to_string(f.sym_deg) +
                    ", i.e. zero, for (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  auto w = has_section(*at, params);
  if (!w || w->rule != WitnessRule::exact_match) {
    throw Error(ErrorKind::NoCertificate, "summand l-b is not an exact match");
  }
  return *w;
}

ContradictionReport regularity_contradiction_demo(const ConstructionParams& params,
                                                  std::int64_t a, std::int64_t b,
                                                  std::int64_t k) {
  const std::int64_t p = params.p, l = params.l;
  ContradictionReport report;
  report.a = a;
  report.b = b;
  report.k = k;
  report.twist = adjunction_twist(a, b, k, params);
  report.twist_base = adjunction_twist_base(a, b, k, params);
  report.twist_ample = is_ample_by_intersections(report.twist, params);
  report.k_is_p_minus_1 = (k == p - 1);

  for (const auto& w : scan_witnesses(r1_erroneous_z_ab(a, b, params), params, false)) {
    if (w.rule == WitnessRule::exact_match) {
      report.erroneous_witness = w;
      break;
    }
  }
  report.contradiction =
      report.k_is_p_minus_1 && report.twist_ample && report.erroneous_witness.has_value();

  const DivClassX at_p1 = adjunction_twist(a, b, p - 1, params);
  const CurveClass base_p1 = adjunction_twist_base(a, b, p - 1, params);
  report.twist_matches_closed_form =
      at_p1.et_coeff == Rational(a * p - a - p * l + p + l + 1) &&
      base_p1 == CurveClass{Rational(b * p - b + p * l - p - l), -1} &&
      base_p1.degree(params) == at_p1.base_deg;

  for (std::int64_t ra = 1; ra <= l - 1; ++ra) {
    for (std::int64_t rb = 1; rb <= l - ra; ++rb) {
      const DivClassX t = adjunction_twist(ra, rb, p - 1, params);
      if (t.et_coeff > 0 && t.base_deg > 0) report.both_positive.emplace_back(ra, rb);
    }
  }
  return report;
}

}  // namespace kodaira
