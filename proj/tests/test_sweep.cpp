#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kodaira/params.hpp"
#include "kodaira/sweep.hpp"

using namespace kodaira;

TEST_CASE("parallel sweep reproduces the serial reference") {
  const auto params = enumerate_params(23, 200);
  const SweepLimits limits{30, 60, 2};
  const auto serial = sweep_serial(params, limits);
  const auto parallel = sweep_parallel(params, limits);
  REQUIRE(serial.size() == params.size());
  CHECK(serial == parallel);
  for (const auto& r : serial) {
    CHECK(r.internal_errors == 0);
    CHECK(r.chi_mismatches == 0);
    CHECK(r.erroneous_first_failure > 0);
  }
}

TEST_CASE("parallel dossiers keep deterministic order") {
  const auto params = enumerate_params(13, 150);
  const auto serial = dossiers_serial(params, {});
  const auto parallel = dossiers_parallel(params, {});
  REQUIRE(serial.size() == parallel.size());
  CHECK(serial == parallel);
  for (std::size_t i = 0; i < params.size(); ++i) CHECK(parallel[i].params == params[i]);
}

TEST_CASE("flagship consistency record") {
  const auto r = check_construction(validate(5, 16, 6), SweepLimits{});
  CHECK(r.internal_errors == 0);
  CHECK(r.nonvan1_certified == 3);
  CHECK(r.nonvan2_expected == 15);
  CHECK(r.nonvan2_certified == 14);
  CHECK(r.nonvan2_vanishing == 1);
  CHECK(r.directimage_mismatches == 0);
  CHECK(r.nef_ok);
  CHECK(r.kollar_ok);
  CHECK(r.remark_ok);
}

TEST_CASE("empty sweeps") {
  CHECK(sweep_parallel({}, SweepLimits{}).empty());
  CHECK(dossiers_parallel({}, {}).empty());
}
