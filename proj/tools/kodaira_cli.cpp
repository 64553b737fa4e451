#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kodaira/cohomology.hpp"
#include "kodaira/dossier.hpp"
#include "kodaira/error.hpp"
#include "kodaira/params.hpp"
#include "kodaira/pushforward.hpp"
#include "kodaira/sweep.hpp"

using namespace kodaira;
using nlohmann::json;

namespace {

struct Options {
  std::int64_t p = 0, g = 0, l = 0;
  std::optional<std::int64_t> a, b, n;
  std::int64_t k = 2;
  std::int64_t max_p = 0, max_g = 0;
  bool json = false;
  bool beyond_range = false;
};

void add_triple(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "characteristic (prime)")->required();
  cmd->add_option("--g", o.g, "genus of the base curve")->required();
  cmd->add_option("--l", o.l, "degree of the cyclic cover")->required();
}

int cmd_validate(const Options& o) {
  const auto params = validate(o.p, o.g, o.l);
  if (o.json) {
    std::cout << json{{"p", params.p},         {"g", params.g},
                      {"l", params.l},         {"deg_L", params.deg_L},
                      {"deg_N", params.deg_N}, {"m", params.m},
                      {"fiber_genus", fiber_genus(params)},
                      {"omega_x_ample", omega_x_is_ample(params)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "valid: p=" << params.p << " g=" << params.g << " l=" << params.l << "\n"
              << "deg_L=" << params.deg_L << " deg_N=" << params.deg_N << " m=" << params.m
              << " fiber_genus=" << fiber_genus(params)
              << " omega_X_ample=" << (omega_x_is_ample(params) ? "yes" : "no") << "\n";
  }
  return 0;
}

bool selected(const NonvanishingEntry& e, const Options& o) {
  if (o.n) return e.kind == "nonvan1" && e.n == *o.n;
  if (o.a || o.b) return e.kind == "nonvan2" && e.a == o.a.value_or(e.a) && e.b == o.b.value_or(e.b);
  return true;
}

int cmd_report(const Options& o) {
  const auto params = validate(o.p, o.g, o.l);
  if (o.n && (o.a || o.b)) throw CLI::ValidationError("--n cannot be combined with --a/--b");
  Dossier d = build_dossier(params, DossierOptions{o.beyond_range});

  if (o.n || o.a || o.b) {
    std::erase_if(d.nonvanishing, [&](const auto& e) { return !selected(e, o); });
    std::erase_if(d.beyond_range, [&](const auto& e) { return !selected(e, o); });
    if (d.nonvanishing.empty() && !o.beyond_range) {
      // surfaces the precise range error
      if (o.n) theorem_nonvan1(*o.n, params);
      if (o.a && o.b) theorem_nonvan2(*o.a, *o.b, params);
      throw Error(ErrorKind::OutOfProvenRange, "no proven entry matches the selection");
    }
  }

  if (o.json) {
    std::cout << to_json(d).dump(2) << "\n";
  } else {
    std::cout << render_text(d);
  }
  return 0;
}

int cmd_search(const Options& o) {
  if (o.max_p < 2 || o.max_g < 2) throw CLI::ValidationError("--max-p and --max-g must be at least 2");
  const auto params = enumerate_params(o.max_p, o.max_g);
  const auto dossiers = dossiers_parallel(params, DossierOptions{o.beyond_range});
  std::size_t uncertified = 0;
  for (const auto& d : dossiers) {
    for (const auto& e : d.nonvanishing) uncertified += e.status != WitnessStatus::certified;
    if (o.json) {
      std::cout << to_json(d).dump() << "\n";
    } else {
      std::cout << render_text(d) << "\n";
    }
  }
  auto& summary = o.json ? std::cerr : std::cout;
  summary << dossiers.size() << " candidates";
  if (!dossiers.empty()) summary << ", " << uncertified << " nonvanishing entries without a theorem witness";
  summary << "\n";
  return 0;
}

int cmd_refute(const Options& o) {
  const auto params = validate(o.p, o.g, o.l);
  const auto r = refute_erroneous(o.k, params);
  if (o.json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << render_text(r);
  }
  return 0;
}

json record_json(const ConsistencyRecord& r) {
  return json{{"params", {r.params.p, r.params.g, r.params.l}},
              {"chi_mismatches", r.chi_mismatches},
              {"thickening_mismatches", r.thickening_mismatches},
              {"erroneous_first_failure", r.erroneous_first_failure},
              {"rank_failures", r.rank_failures},
              {"nonvan1", {r.nonvan1_certified, r.nonvan1_expected}},
              {"nonvan2", {r.nonvan2_certified, r.nonvan2_expected}},
              {"nonvan2_zero_summand", r.nonvan2_vanishing},
              {"directimage_mismatches", r.directimage_mismatches},
              {"nef_ok", r.nef_ok},
              {"kollar_ok", r.kollar_ok},
              {"remark_ok", r.remark_ok},
              {"internal_errors", r.internal_errors},
              {"first_internal_error", r.first_internal_error}};
}

bool consistent(const ConsistencyRecord& r) {
  return r.internal_errors == 0 && r.chi_mismatches == 0 && r.thickening_mismatches == 0 &&
         r.rank_failures == 0 && r.directimage_mismatches == 0 && r.erroneous_first_failure > 0 && r.nef_ok &&
         r.kollar_ok && r.remark_ok;
}

int cmd_check(const Options& o, bool single) {
  std::vector<ConstructionParams> params;
  if (single) {
    params.push_back(validate(o.p, o.g, o.l));
  } else {
    if (o.max_p < 2 || o.max_g < 2) throw CLI::ValidationError("give --p --g --l or --max-p --max-g");
    params = enumerate_params(o.max_p, o.max_g);
  }
  const auto records = sweep_parallel(params, SweepLimits{});
  std::int64_t bad = 0, n2_cert = 0, n2_total = 0;
  for (const auto& r : records) {
    bad += !consistent(r);
    n2_cert += r.nonvan2_certified;
    n2_total += r.nonvan2_expected;
    if (o.json) {
      std::cout << record_json(r).dump() << "\n";
      continue;
    }
    std::cout << "(" << r.params.p << "," << r.params.g << "," << r.params.l << ") "
              << (consistent(r) ? "ok" : "INCONSISTENT") << "  chi " << r.chi_mismatches
              << "  refuted-at k=" << r.erroneous_first_failure << "  nonvan1 " << r.nonvan1_certified << "/"
              << r.nonvan1_expected << "  nonvan2 " << r.nonvan2_certified << "/" << r.nonvan2_expected;
    if (r.nonvan2_vanishing > 0) std::cout << " (" << r.nonvan2_vanishing << " zero summand)";
    std::cout << "  directimage " << r.directimage_mismatches;
    if (r.internal_errors > 0) std::cout << "  error: " << r.first_internal_error;
    std::cout << "\n";
  }
  auto& summary = o.json ? std::cerr : std::cout;
  summary << records.size() << " checked, " << bad << " inconsistent, nonvan2 certified " << n2_cert << "/"
          << n2_total << "\n";
  return bad == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tango-Raynaud counterexamples to Kodaira vanishing"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "check a parameter triple");
  add_triple(validate_cmd, o);

  auto* report = app.add_subcommand("report", "full dossier for one triple");
  add_triple(report, o);
  report->add_option("--n", o.n, "only the Z^-n certificate");
  report->add_option("--a", o.a, "only Z_{a,b} certificates with this a");
  report->add_option("--b", o.b, "only Z_{a,b} certificates with this b");
  report->add_flag("--beyond-range", o.beyond_range, "also scan for witnesses outside the proven ranges");

  auto* search = app.add_subcommand("search", "dossiers for every valid triple within bounds");
  search->add_option("--max-p", o.max_p)->required();
  search->add_option("--max-g", o.max_g)->required();
  search->add_flag("--beyond-range", o.beyond_range);

  auto* refute = app.add_subcommand("refute", "compare the corrected and refuted pushforward of O_{kEt}");
  add_triple(refute, o);
  refute->add_option("--k", o.k, "thickening order")->capture_default_str();

  auto* check = app.add_subcommand("check", "run every consistency check on one triple or a sweep");
  auto* cp = check->add_option("--p", o.p);
  auto* cg = check->add_option("--g", o.g);
  auto* cl = check->add_option("--l", o.l);
  cp->needs(cg, cl);
  check->add_option("--max-p", o.max_p)->excludes(cp);
  check->add_option("--max-g", o.max_g)->excludes(cp);

  for (auto* cmd : {validate_cmd, report, search, refute, check}) cmd->add_flag("--json", o.json);

  try {
    app.parse(argc, argv);
    if (*validate_cmd) return cmd_validate(o);
    if (*report) return cmd_report(o);
    if (*search) return cmd_search(o);
    if (*refute) return cmd_refute(o);
    return cmd_check(o, cp->count() > 0);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return is_internal(e.kind()) ? 2 : 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
