#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kodaira/error.hpp"
#include "kodaira/params.hpp"
#include "kodaira/picard.hpp"
#include "kodaira/pushforward.hpp"
#include "oracles.hpp"

using namespace kodaira;

namespace {
const ConstructionParams kFlagship = validate(5, 16, 6);
const ConstructionParams kSmall = validate(3, 7, 4);
}  // namespace

TEST_CASE("intersection form on P") {
  const auto e = classes::section_P();
  const auto f = classes::fiber_P();
  const auto n = classes::pullback_P(Rational(kFlagship.deg_N));
  CHECK(intersect_P(e, e, kFlagship) == 6);
  CHECK(intersect_P(e, f, kFlagship) == 1);
  CHECK(intersect_P(f, f, kFlagship) == 0);
  CHECK(intersect_P(n, n, kFlagship) == 0);
}

TEST_CASE("intersection form on X") {
  const auto et = classes::section_X();
  CHECK(intersect_X(et, et, kFlagship) == 1);
  CHECK(intersect_X(et, classes::fiber_X(), kFlagship) == 1);
  CHECK(intersect_X(classes::fiber_X(), classes::fiber_X(), kFlagship) == 0);
  // (Et.fiber) = (1/l)(psi^*E . psi^*fiber)
  const auto pe = pullback_to_X(classes::section_P(), kFlagship);
  const auto pf = pullback_to_X(classes::fiber_P(), kFlagship);
  CHECK(intersect_X(pe, pf, kFlagship) / kFlagship.l == 1);
}

TEST_CASE("pullback multiplies intersections by the cover degree") {
  for (const auto& params : enumerate_params(23, 150)) {
    for (int trial = 0; trial < 20; ++trial) {
      const DivClassP a{oracle::uniform(-30, 30), Rational(oracle::uniform(-50, 50), oracle::uniform(1, 6))};
      const DivClassP b{oracle::uniform(-30, 30), Rational(oracle::uniform(-50, 50), oracle::uniform(1, 6))};
      CHECK(intersect_X(pullback_to_X(a, params), pullback_to_X(b, params), params) ==
            intersect_P(a, b, params) * params.l);
    }
  }
}

TEST_CASE("canonical class of X") {
  const auto k = canonical_X(kFlagship);
  CHECK(k.et_coeff == 18);
  CHECK(k.base_deg == 11);
  const auto ks = canonical_X(kSmall);
  CHECK(ks.et_coeff == 4);
  CHECK(ks.base_deg == 7);
  // (3,7,2): m = 2, deg N = 2, so (p-m-1)l = 0 and 12 - (6-3-2)*2 = 10.
  const auto k2 = canonical_X(validate(3, 7, 2));
  CHECK(k2.et_coeff == 0);
  CHECK(k2.base_deg == 10);
  CHECK(canonical_X_base(kFlagship).degree(kFlagship) == k.base_deg);
  CHECK(canonical_dot_fiber(kFlagship) == 18);
}

TEST_CASE("Z_{a,b} classes") {
  const auto z = z_ab_class(1, 1, kFlagship);
  CHECK(z == DivClassX{Rational(1), Rational(1)});
  const auto z63 = z_ab_class(6, 3, kFlagship);
  CHECK(z63.et_coeff == 6);
  CHECK(z63.base_deg == 3);
  CHECK_THROWS_AS(z_ab_class(0, 1, kFlagship), Error);
  CHECK_THROWS_AS(z_ab_class(1, 0, kFlagship), Error);
}

TEST_CASE("adjunction twist") {
  const auto t = adjunction_twist(6, 3, 4, kFlagship);
  CHECK(t == DivClassX{Rational(6), Rational(1)});
  CHECK(is_ample_by_intersections(t, kFlagship));
  const auto t111 = adjunction_twist(1, 1, 1, kFlagship);
  CHECK(t111.et_coeff == -17);
  CHECK(t111.base_deg == -10);
}

TEST_CASE("adjunction twist at k = p-1 has the closed-form coefficients") {
  for (const auto& params : enumerate_params(31, 200)) {
    const std::int64_t p = params.p, l = params.l;
    for (int trial = 0; trial < 10; ++trial) {
      const std::int64_t a = oracle::uniform(1, 40), b = oracle::uniform(1, 40);
      const auto t = adjunction_twist(a, b, p - 1, params);
      const auto base = adjunction_twist_base(a, b, p - 1, params);
      CHECK(t.et_coeff == a * p - a - p * l + p + l + 1);
      CHECK(base == CurveClass{Rational(b * p - b + p * l - p - l), -1});
      CHECK(base.degree(params) == t.base_deg);
    }
  }
}

TEST_CASE("ampleness criterion") {
  CHECK(is_ample_by_intersections(z_ab_class(6, 3, kFlagship), kFlagship));
  CHECK_FALSE(is_ample_by_intersections(classes::pullback_X(Rational(1)), kFlagship));
  for (std::int64_t a = 1; a <= 20; ++a) {
    for (std::int64_t b = 1; b <= 20; ++b) CHECK(is_ample_by_intersections(z_ab_class(a, b, kFlagship), kFlagship));
  }
}

TEST_CASE("thickening Euler characteristics") {
  CHECK(euler_char_thickening(2, true, kFlagship) == -31);
  CHECK(euler_char_thickening(2, false, kFlagship) == -36);
  CHECK(euler_char_thickening(1, true, kFlagship) == 1 - kFlagship.g);
  CHECK(euler_char_thickening(1, false, kFlagship) == 1 - kFlagship.g);
  CHECK_THROWS_AS(euler_char_thickening(0, true, kFlagship), Error);
}

TEST_CASE("thickening Euler characteristics agree with the filtration oracle and are integral") {
  for (const auto& params : enumerate_params(50, 500)) {
    for (std::int64_t k : {1, 2, 3, 7, 50, 999, 10000}) {
      const auto cover = euler_char_thickening(k, true, params);
      const auto base = euler_char_thickening(k, false, params);
      CHECK(is_integral(cover));
      CHECK(is_integral(base));
      CHECK(cover == oracle::chi_thickening_filtration(k, params.g, params.deg_N));
      CHECK(base == oracle::chi_thickening_filtration(k, params.g, params.deg_L));
    }
  }
}

TEST_CASE("Riemann-Roch on P") {
  CHECK(euler_char_P(PSummand{0, 0}, kFlagship) == 1 - kFlagship.g);
  CHECK(euler_char_P(PSummand{1, 0}, kFlagship) == -24);
  const std::vector<PSummand> sum{{1, 0}, {0, 0}, {-3, 4}};
  CHECK(euler_char_P(sum, kFlagship) ==
        euler_char_P(sum[0], kFlagship) + euler_char_P(sum[1], kFlagship) + euler_char_P(sum[2], kFlagship));
}

TEST_CASE("Riemann-Roch on P agrees with the Leray route") {
  for (const auto& params : enumerate_params(19, 120)) {
    for (std::int64_t t = -12; t <= 12; ++t) {
      for (std::int64_t e = -15; e <= 15; e += 3) {
        CHECK(euler_char_P(PSummand{t, e}, params) ==
              oracle::chi_P_leray(t, e, params.g, params.l, params.deg_L, params.deg_N));
      }
    }
  }
}

TEST_CASE("chi(O_X) and Riemann-Roch on X") {
  CHECK(euler_char_structure_X(kFlagship) == 55);
  CHECK(euler_char_structure_X(kSmall) == 4);
  CHECK(euler_char_structure_X(validate(5, 16, 3)) == 17);
  CHECK(euler_char_X(DivClassX{}, kFlagship) == 55);
  // Serre duality: chi(D) = chi(K - D).
  const auto k = canonical_X(kFlagship);
  const DivClassX d{Rational(3), Rational(-2)};
  CHECK(euler_char_X(d, kFlagship) == euler_char_X({k.et_coeff - 3, k.base_deg + 2}, kFlagship));
}
