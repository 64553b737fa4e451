#include "kodaira/sweep.hpp"

#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kodaira/cohomology.hpp"
#include "kodaira/error.hpp"
#include "kodaira/pathology.hpp"
#include "kodaira/picard.hpp"
#include "kodaira/pushforward.hpp"

namespace kodaira {

std::vector<IndexedBundle> r1_phi_lower_z_neg_case_split(std::int64_t n,
                                                        const ConstructionParams& params) {
  const std::int64_t p = params.p, l = params.l, d = params.m;
  std::vector<IndexedBundle> out;
  auto emit = [&](std::int64_t i, std::int64_t sym_deg) {
    if (sym_deg >= 0) out.push_back({i, make_curve_bundle(sym_deg, true, i * p - n - l, params)});
  };
  if (n <= l) {
    for (std::int64_t i = 1; i <= n - 1; ++i) emit(i, i * d - 1);
    for (std::int64_t i = n; i <= l - 1; ++i) emit(i, i * d - 2);
  } else {
    const std::int64_t q = n / l, r = n % l;
    for (std::int64_t i = 0; i <= r - 1; ++i) emit(i, i * d + q - 1);
    for (std::int64_t i = r; i <= l - 1; ++i) emit(i, i * d + q - 2);
  }
  return out;
}

ConsistencyRecord check_construction(const ConstructionParams& params, const SweepLimits& limits) {
  const std::int64_t p = params.p, l = params.l, m = params.m;
  ConsistencyRecord rec;
  rec.params = params;
  try {
    const Rational chi_ox = euler_char_structure_X(params);
    for (std::int64_t k = 1; k <= limits.max_k; ++k) {
      const Rational rr = euler_char_X({Rational(-k), Rational(0)}, params);
      const Decomposition corrected = pushforward_negative(k, params);
      if (euler_char_P(corrected.summands, params) != rr) ++rec.chi_mismatches;
      if (rec.erroneous_first_failure == 0 &&
          euler_char_P(pushforward_erroneous(k, params).summands, params) != rr) {
        rec.erroneous_first_failure = k;
      }
      const Decomposition thick = pushforward_thickening(k, params);
      const Rational pieces = euler_char_thickening_pieces(thick, params);
      if (chi_ox != rr + pieces || pieces != euler_char_thickening(k, true, params)) {
        ++rec.thickening_mismatches;
      }
      if (static_cast<std::int64_t>(corrected.rank()) != l) ++rec.rank_failures;
    }
    for (std::int64_t k = 1; k <= limits.max_thickening_k; ++k) {
      if (static_cast<std::int64_t>(pushforward_thickening(k, params).rank()) != k) ++rec.rank_failures;
    }

    for (std::int64_t n = 1; n <= l / 2; ++n) {
      ++rec.nonvan1_expected;
      const Witness w = theorem_nonvan1(n, params);
      if (l * ((l - n) * m - 2) == (l - n) * p - n - l && w.index == l - n &&
          w.identity_lhs == w.identity_rhs) {
        ++rec.nonvan1_certified;
      }
    }
    for (std::int64_t a = 1; a <= l - 1; ++a) {
      for (std::int64_t b = 1; b <= l - a; ++b) {
        ++rec.nonvan2_expected;
        try {
          const Witness w = theorem_nonvan2(a, b, params);
          if (w.index == l - b && w.identity_lhs == w.identity_rhs) ++rec.nonvan2_certified;
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::NoCertificate) throw;
          if (nonvan2_formal_summand(a, b, params).sym_deg < 0) ++rec.nonvan2_vanishing;
        }
      }
    }

    for (std::int64_t n = 1; n <= limits.n_factor * l; ++n) {
      if (leray_h1(n, params) != r1_phi_lower_z_neg_case_split(n, params)) ++rec.directimage_mismatches;
    }

    rec.nef_ok = nef_failure(params, 1).pairing_value == Rational(-params.deg_N);
    rec.kollar_ok = kollar_violation(params).h1_lower_bound >= 1;
    bool remark_ok = true;
    for (std::int64_t a = 1; a <= l - 1; ++a) {
      for (std::int64_t b = 1; b <= l - a; ++b) {
        const auto report = regularity_contradiction_demo(params, a, b, p - 1);
        remark_ok = remark_ok && report.twist_matches_closed_form && report.both_positive.empty();
      }
    }
    rec.remark_ok = remark_ok;
  } catch (const Error& err) {
    ++rec.internal_errors;
    rec.first_internal_error = err.what();
  } catch (const std::exception& err) {
    ++rec.internal_errors;
    rec.first_internal_error = err.what();
  }
  return rec;
}

std::vector<ConsistencyRecord> sweep_serial(std::span<const ConstructionParams> params,
                                            const SweepLimits& limits) {
  std::vector<ConsistencyRecord> out;
  out.reserve(params.size());
  for (const auto& pr : params) out.push_back(check_construction(pr, limits));
  return out;
}

std::vector<ConsistencyRecord> sweep_parallel(std::span<const ConstructionParams> params,
                                              const SweepLimits& limits) {
  std::vector<ConsistencyRecord> out(params.size());
  const auto count = static_cast<std::int64_t>(params.size());
  // check_construction never throws; work per triple grows with l, hence
  // the dynamic schedule.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = check_construction(params[static_cast<std::size_t>(i)], limits);
  }
  return out;
}

std::vector<Dossier> dossiers_serial(std::span<const ConstructionParams> params,
                                     const DossierOptions& options) {
  std::vector<Dossier> out;
  out.reserve(params.size());
  for (const auto& pr : params) out.push_back(build_dossier(pr, options));
  return out;
}

std::vector<Dossier> dossiers_parallel(std::span<const ConstructionParams> params,
                                       const DossierOptions& options) {
  std::vector<Dossier> out(params.size());
  std::vector<std::exception_ptr> errors(params.size());
  const auto count = static_cast<std::int64_t>(params.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = build_dossier(params[idx], options);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

int sweep_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace kodaira
