#include "kodaira/pathology.hpp"

#include <stdexcept>
#include <string>

#include "kodaira/error.hpp"

namespace kodaira {

namespace {

std::string sym(std::int64_t a, std::int64_t e) {
  return "Sym^" + std::to_string(a) + "(E) (x) N^" + std::to_string(e);
}

void require_cover_degree(std::int64_t p, int n) {
  if (p < 2) throw Error(ErrorKind::UnsupportedCharacteristic, "p must be >= 2");
  if (n < 1) throw Error(ErrorKind::NonPositiveMultiple, "cover exponent n must be >= 1");
}

}  // namespace

RelativeDualizingPushforward pushforward_relative_dualizing(std::int64_t k,
                                                            const ConstructionParams& params) {
  if (k < 1) throw Error(ErrorKind::NonPositiveMultiple, "power k must be >= 1");
  const std::int64_t p = params.p, l = params.l, m = params.m;
  RelativeDualizingPushforward out;
  out.k = k;
  out.derived_by_tool = k > 1;
  // omega_{X/C}^k = psi^*O_P(k(p-m-1)E) (x) phi^*N^{-k(pl-p-l)}; push forward
  // with psi_*O_X = (+) M^j and shift the index to i = j + 1.
  for (std::int64_t j = 0; j < l; ++j) {
    const std::int64_t sym_deg = k * (p - m - 1) - j * m;
    if (sym_deg < 0) continue;
    const std::int64_t n_exp = j * p - k * (p * l - p - l);
    out.summands.push_back({j + 1, make_curve_bundle(sym_deg, false, n_exp, params)});
  }
  return out;
}

NefFailureCertificate nef_failure(const ConstructionParams& params, std::int64_t k) {
  const auto pushforward = pushforward_relative_dualizing(k, params);
  if (pushforward.summands.empty() || pushforward.summands.front().index != 1) {
    throw std::logic_error("phi_* omega_{X/C} has no i = 1 summand");
  }
  const std::int64_t p = params.p, l = params.l;
  NefFailureCertificate cert;
  cert.k = k;
  cert.summand_index = 1;
  cert.quotient = pushforward.summands.front().bundle;
  cert.w = {cert.quotient.sym_deg, Rational(cert.quotient.n_exp * params.deg_N)};
  cert.pairing_value = intersect_P(cert.w, classes::section_P(), params);
  // deg L = l deg N turns (W.E) into k deg N (l(p-m-1) + p + l - pl); then
  // l*m = p + 1.
  const std::int64_t reduced = l * p - (p + 1) - l + p + l - p * l;
  cert.symbolic_pairing = Rational(k * params.deg_N * reduced);
  if (cert.pairing_value != cert.symbolic_pairing ||
      cert.pairing_value != Rational(-k * params.deg_N)) {
    throw std::logic_error("nef failure pairing " + to_string(cert.pairing_value) +
                           " disagrees with -k deg N");
  }
  return cert;
}

KollarCertificate kollar_violation(const ConstructionParams& params) {
  const std::int64_t p = params.p, l = params.l, m = params.m;
  KollarCertificate cert;
  cert.twist_exponent = l * (p - m - 1) + p + l - p * l;
  if (cert.twist_exponent != -1) {
    throw std::logic_error("l(p-m-1) + p + l - pl = " + std::to_string(cert.twist_exponent));
  }
  cert.h1_lower_bound = 1;
  cert.quotient_chain = {
      "V = " + sym(p - m - 1, p + l - p * l) + " is a quotient of phi_*omega_{X/C}",
      "Sym^" + std::to_string(p - m - 1) + "(E) -> L^" + std::to_string(p - m - 1) +
          " gives V -> N^" + std::to_string(cert.twist_exponent),
      "V (x) omega_C (x) N -> omega_C, and V (x) omega_C (x) N is a quotient of "
      "phi_*omega_X (x) N",
      "h^1(C, phi_*omega_X (x) N) >= h^1(C, omega_C) = 1",
  };
  return cert;
}

Rational insep_cover_euler(std::int64_t p, int n, const Rational& chi_X, const Rational& L2,
                           const Rational& LK) {
  require_cover_degree(p, n);
  const std::int64_t pn = checked_pow(p, n);
  return chi_X * pn + Rational(pn * (pn - 1), 12) * (L2 * (2 * pn - 1) - LK * 3);
}

std::pair<std::int64_t, std::int64_t> shepherd_barron_ky_coeffs(std::int64_t p, int n) {
  require_cover_degree(p, n);
  return {1, 1 - checked_pow(p, n)};
}

std::vector<std::pair<std::int64_t, std::int64_t>> quasi_elliptic_solutions(
    std::int64_t p, std::int64_t max_n, std::int64_t max_LF) {
  if (p != 2 && p != 3) {
    throw Error(ErrorKind::UnsupportedCharacteristic,
                "quasi-elliptic fibrations need p in {2, 3}, got " + std::to_string(p));
  }
  // (F^2) = 0 and (K_X.F) = 0 on a quasi-elliptic fibration.
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t n = 2; n <= max_n; ++n) {
    for (std::int64_t lf = 1; lf <= max_LF; ++lf) {
      if (-2 <= (1 - p) * n * lf) out.emplace_back(n, lf);
    }
  }
  return out;
}

}  // namespace kodaira
