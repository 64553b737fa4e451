#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "kodaira/dossier.hpp"
#include "kodaira/params.hpp"
#include "kodaira/sweep.hpp"

using namespace kodaira;

TEST_CASE("flagship dossier") {
  const auto d = build_dossier(validate(5, 16, 6));
  CHECK(d.flags.conditional_on_tango_curve);
  CHECK(d.invariants.fiber_genus == 10);
  CHECK(d.invariants.et_self_intersection == 1);
  CHECK(d.invariants.chi_OX == 55);
  const auto n1 = std::count_if(d.nonvanishing.begin(), d.nonvanishing.end(),
                                [](const auto& e) { return e.kind == "nonvan1"; });
  const auto n2 = std::count_if(d.nonvanishing.begin(), d.nonvanishing.end(),
                                [](const auto& e) { return e.kind == "nonvan2"; });
  CHECK(n1 == 3);
  CHECK(n2 == 15);
  const auto uncertified = std::find_if(d.nonvanishing.begin(), d.nonvanishing.end(), [](const auto& e) {
    return e.status != WitnessStatus::certified;
  });
  REQUIRE(uncertified != d.nonvanishing.end());
  CHECK(uncertified->a == 1);
  CHECK(uncertified->b == 5);
  CHECK(uncertified->status == WitnessStatus::uncertified);
  CHECK(d.refutation.chi_cover == -31);
  CHECK(d.nef_failure.pairing_value == -1);
  CHECK(d.kollar.twist_exponent == -1);
}

TEST_CASE("small dossier counts") {
  const auto d = build_dossier(validate(3, 7, 4));
  const auto n1 = std::count_if(d.nonvanishing.begin(), d.nonvanishing.end(),
                                [](const auto& e) { return e.kind == "nonvan1"; });
  CHECK(n1 == 2);
  CHECK(d.nonvanishing.size() == 2 + 6);
}

TEST_CASE("JSON schema keys") {
  const auto j = to_json(build_dossier(validate(5, 16, 6)));
  CHECK(j.at("schema_version") == "1");
  for (const char* key : {"params", "invariants", "nonvanishing", "nef_failure", "kollar", "refutation", "flags"}) {
    CHECK(j.contains(key));
  }
  CHECK_FALSE(j.contains("beyond_range"));
  const auto& w = j.at("nonvanishing").at(0).at("witness");
  for (const char* key : {"index", "sym_deg", "dualized", "n_exp", "identity_lhs", "identity_rhs", "rule",
                          "h1_lower_bound"}) {
    CHECK(w.contains(key));
  }
  CHECK(j.at("nonvanishing").at(3).at("a_b") == nlohmann::json::array({1, 1}));
  CHECK(j.at("refutation").at("chi_cover") == nlohmann::json{{"num", -31}, {"den", 1}});
  CHECK(j.at("flags").at("conditional_on_tango_curve") == true);
}

TEST_CASE("rationals serialize reduced with a positive denominator") {
  Dossier d = build_dossier(validate(3, 7, 4));
  d.invariants.kx_dot_fiber = Rational(6, -4);
  const auto j = to_json(d);
  CHECK(j.at("invariants").at("kx_dot_fiber") == nlohmann::json{{"num", -3}, {"den", 2}});
}

TEST_CASE("JSON round-trips across the sweep") {
  for (const auto& params : enumerate_params(50, 500)) {
    const auto d = build_dossier(params);
    CHECK(dossier_from_json(nlohmann::json::parse(to_json(d).dump())) == d);
  }
  const auto beyond = build_dossier(validate(5, 16, 6), DossierOptions{true});
  CHECK(beyond.flags.beyond_range);
  CHECK(to_json(beyond).contains("beyond_range"));
  CHECK(dossier_from_json(nlohmann::json::parse(to_json(beyond).dump())) == beyond);
}

TEST_CASE("no witness past the proven ranges") {
  // the exact-match index lands on the other branch of the case split
  for (const auto& params : enumerate_params(31, 300)) {
    const auto d = build_dossier(params, DossierOptions{true});
    CHECK(d.beyond_range.empty());
  }
}

TEST_CASE("rendering is deterministic") {
  const auto params = validate(5, 16, 6);
  CHECK(to_json(build_dossier(params)).dump() == to_json(build_dossier(params)).dump());
  const auto text = render_text(build_dossier(params));
  CHECK(text == render_text(build_dossier(params)));
  CHECK(text.find("MISMATCH") != std::string::npos);
  CHECK(text.find("conditional on a Tango curve") != std::string::npos);
}
