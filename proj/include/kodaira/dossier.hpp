#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kodaira/cohomology.hpp"
#include "kodaira/params.hpp"
#include "kodaira/pathology.hpp"
#include "kodaira/picard.hpp"
#include "kodaira/pushforward.hpp"

namespace kodaira {

struct DossierInvariants {
  std::int64_t deg_L = 0;
  std::int64_t deg_N = 0;
  std::int64_t m = 0;
  std::int64_t fiber_genus = 0;
  bool omega_x_ample = false;
  Rational et_self_intersection{0};
  DivClassX canonical_class;
  CurveClass canonical_base;
  Rational kx_dot_fiber{0};
  Rational chi_OX{0};

  bool operator==(const DossierInvariants&) const = default;
};

enum class WitnessStatus {
  certified,    // exact-match witness at the theorem's index
  fallback,     // theorem index vanished; another summand certified
  uncertified,  // no sufficient condition fired
};

struct NonvanishingEntry {
  std::string kind;  // "nonvan1" | "nonvan2"
  std::int64_t n = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  WitnessStatus status = WitnessStatus::certified;
  std::optional<Witness> witness;

  bool operator==(const NonvanishingEntry&) const = default;
};

struct DossierFlags {
  bool conditional_on_tango_curve = true;
  bool beyond_range = false;

  bool operator==(const DossierFlags&) const = default;
};

struct Dossier {
  ConstructionParams params;
  DossierInvariants invariants;
  std::vector<NonvanishingEntry> nonvanishing;
  std::vector<NonvanishingEntry> beyond_range;  // only filled on request
  NefFailureCertificate nef_failure;
  KollarCertificate kollar;
  RefutationReport refutation;
  DossierFlags flags;

  bool operator==(const Dossier&) const = default;
};

struct DossierOptions {
  bool beyond_range = false;
};

Dossier build_dossier(const ConstructionParams& params, const DossierOptions& options = {});

nlohmann::json to_json(const Dossier& d);
nlohmann::json to_json(const RefutationReport& r);
Dossier dossier_from_json(const nlohmann::json& j);

/// Human-readable report naming the statement each certificate instantiates.
std::string render_text(const Dossier& d);
std::string render_text(const RefutationReport& r);

}  // namespace kodaira
