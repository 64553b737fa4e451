#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kodaira/cohomology.hpp"
#include "kodaira/params.hpp"
#include "kodaira/picard.hpp"
#include "kodaira/rational.hpp"

namespace kodaira {

/// phi_*(omega_{X/C}^k) = (+)_{i=1}^{l} Sym^{k(p-m-1) - (i-1)m}(E) (x)
/// N^{(i-1)p - k(pl-p-l)}. At k = 1 this is Sym^{p-im-1}(E) (x) N^{ip+l-pl}.
/// Summands with negative symmetric degree are dropped. k > 1 goes through
/// the same projection-formula route and is flagged derived_by_tool.
struct RelativeDualizingPushforward {
  std::int64_t k = 1;
  std::vector<IndexedBundle> summands;
  bool derived_by_tool = false;

  bool operator==(const RelativeDualizingPushforward&) const = default;
};

RelativeDualizingPushforward pushforward_relative_dualizing(std::int64_t k,
                                                            const ConstructionParams& params);

/// The i = 1 quotient V of phi_*(omega_{X/C}^k) restricted along the Veronese
/// embedding to W = O_P(k(p-m-1)) (x) pi^*N^{-k(pl-p-l)}, paired with E.
struct NefFailureCertificate {
  std::int64_t k = 1;
  std::int64_t summand_index = 1;
  CurveBundle quotient;
  std::string test_curve = "E";
  DivClassP w;
  Rational pairing_value{0};     // (W.E) by intersection on P
  Rational symbolic_pairing{0};  // k * deg N * (l(p-m-1) + p + l - pl) with ml = p + 1 substituted

  bool operator==(const NefFailureCertificate&) const = default;
};

/// Throws RankMismatch if the two routes disagree or the pairing is not
/// -k deg N.
NefFailureCertificate nef_failure(const ConstructionParams& params, std::int64_t k = 1);

struct KollarCertificate {
  std::int64_t twist_exponent = 0;  // l(p-m-1) + p + l - pl, always -1
  std::int64_t h1_lower_bound = 0;
  std::vector<std::string> quotient_chain;

  bool operator==(const KollarCertificate&) const = default;
};

/// H^1(C, phi_*omega_X (x) N) >= h^1(C, omega_C) = 1.
KollarCertificate kollar_violation(const ConstructionParams& params);

/// chi(O_Y) = p^n chi(O_X) + p^n(p^n - 1)[(2p^n - 1)(L^2) - 3(L.K_X)]/12
/// for a purely inseparable cover Y -> X of degree p^n.
Rational insep_cover_euler(std::int64_t p, int n, const Rational& chi_X, const Rational& L2,
                           const Rational& LK);

/// Coefficients (of K_X, of L) in K_Y = phi^*(K_X + (1 - p^n)L).
std::pair<std::int64_t, std::int64_t> shepherd_barron_ky_coeffs(std::int64_t p, int n);

/// Pairs (n, L.F) with 2 <= n <= max_n, 1 <= L.F <= max_LF satisfying
/// -2 <= (1-p) n (L.F) on a quasi-elliptic fibration (p in {2, 3}).
std::vector<std::pair<std::int64_t, std::int64_t>> quasi_elliptic_solutions(
    std::int64_t p, std::int64_t max_n, std::int64_t max_LF);

}  // namespace kodaira
