#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kodaira/dossier.hpp"
#include "kodaira/params.hpp"

namespace kodaira {

// Per-parameter consistency kernels. Each parameter triple is checked
// independently, so sweeps parallelize over the triple list with no shared
// state. The serial versions are the reference the parallel ones are tested
// against.

struct SweepLimits {
  std::int64_t max_k = 100;            // chi consistency, k in [1, max_k]
  std::int64_t max_thickening_k = 200;  // rank checks
  std::int64_t n_factor = 3;           // direct-image comparison for n <= n_factor * l
};

struct ConsistencyRecord {
  ConstructionParams params;
  std::int64_t chi_mismatches = 0;         // corrected route vs Riemann-Roch on X
  std::int64_t thickening_mismatches = 0;  // chi(psi_*O_X) = chi(O_X(-kEt)) + chi(O_{kEt})
  std::int64_t erroneous_first_failure = 0;  // smallest k where the refuted formula breaks; 0 = never
  std::int64_t rank_failures = 0;
  std::int64_t nonvan1_certified = 0;
  std::int64_t nonvan1_expected = 0;
  std::int64_t nonvan2_certified = 0;
  std::int64_t nonvan2_expected = 0;
  std::int64_t nonvan2_vanishing = 0;  // theorem index holds a zero summand
  std::int64_t directimage_mismatches = 0;
  bool nef_ok = false;
  bool kollar_ok = false;
  bool remark_ok = false;
  std::int64_t internal_errors = 0;
  std::string first_internal_error;

  bool operator==(const ConsistencyRecord&) const = default;
};

/// Closed-form case split of R^1 phi_* Z^-n, written out per case
/// (n <= l and n > l) rather than through the generic decomposition.
std::vector<IndexedBundle> r1_phi_lower_z_neg_case_split(std::int64_t n,
                                                        const ConstructionParams& params);

ConsistencyRecord check_construction(const ConstructionParams& params, const SweepLimits& limits);

std::vector<ConsistencyRecord> sweep_serial(std::span<const ConstructionParams> params,
                                            const SweepLimits& limits);
std::vector<ConsistencyRecord> sweep_parallel(std::span<const ConstructionParams> params,
                                              const SweepLimits& limits);

std::vector<Dossier> dossiers_serial(std::span<const ConstructionParams> params,
                                     const DossierOptions& options);
std::vector<Dossier> dossiers_parallel(std::span<const ConstructionParams> params,
                                       const DossierOptions& options);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int sweep_threads();

}  // namespace kodaira
