// Acceptance gate: one line per criterion, exit status 1 if any fails.
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kodaira/cohomology.hpp"
#include "kodaira/error.hpp"
#include "kodaira/params.hpp"
#include "kodaira/pathology.hpp"
#include "kodaira/picard.hpp"
#include "kodaira/pushforward.hpp"
#include "kodaira/sweep.hpp"
#include "oracles.hpp"

using namespace kodaira;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<ConstructionParams>& all_params() {
  static const auto params = enumerate_params(50, 500);
  return params;
}

const std::vector<ConsistencyRecord>& all_records() {
  static const auto records = sweep_parallel(all_params(), SweepLimits{100, 200, 3});
  return records;
}

std::string triple(const ConstructionParams& p) {
  std::ostringstream os;
  os << "(" << p.p << "," << p.g << "," << p.l << ")";
  return os.str();
}

Outcome flagship() {
  Outcome out;
  const auto p = validate(5, 16, 6);
  out.pass = p.deg_L == 6 && p.deg_N == 1 && p.m == 1 && fiber_genus(p) == 10;
  const DivClassX twist = adjunction_twist(6, 3, 4, p);
  out.pass = out.pass && twist.et_coeff == 6 && twist.base_deg == 1 && is_ample_by_intersections(twist, p);
  out.detail = "twist = (" + to_string(twist.et_coeff) + " Et, " + to_string(twist.base_deg) + ")";
  return out;
}

Outcome refutation() {
  Outcome out;
  const auto p = validate(5, 16, 6);
  const auto r = refute_erroneous(2, p);
  // thickening filtrations: self-intersection deg N upstairs, deg L downstairs
  const auto cover = oracle::chi_thickening_filtration(2, p.g, p.deg_N);
  const auto base = oracle::chi_thickening_filtration(2, p.g, p.deg_L);
  out.pass = r.chi_cover == -31 && r.chi_base == -36 && cover == r.chi_cover && base == r.chi_base &&
             r.decompositions_differ && r.mismatch;
  const bool k1_agree = same_multiset(pushforward_negative(1, p), pushforward_erroneous(1, p));
  bool k1_refused = false;
  try {
    refute_erroneous(1, p);
  } catch (const Error& e) {
    k1_refused = e.kind() == ErrorKind::NoContradiction;
  }
  out.pass = out.pass && k1_agree && k1_refused;
  out.detail = "chi(O_2Et) = " + to_string(r.chi_cover) + ", chi(O_2E) = " + to_string(r.chi_base);
  return out;
}

Outcome chi_consistency() {
  Outcome out;
  std::int64_t never_fails = 0, mismatches = 0, oracle_mismatches = 0;
  for (const auto& rec : all_records()) {
    mismatches += rec.chi_mismatches + rec.thickening_mismatches;
    if (rec.erroneous_first_failure == 0) ++never_fails;
  }
  // Riemann-Roch on X against the ideal-sheaf route
  for (const auto& p : all_params()) {
    const auto chi_ox = oracle::chi_X_negative(0, euler_char_structure_X(p), p.g, p.deg_N);
    for (std::int64_t k = 1; k <= 100; ++k) {
      if (euler_char_X({Rational(-k), Rational(0)}, p) != oracle::chi_X_negative(k, chi_ox, p.g, p.deg_N)) {
        ++oracle_mismatches;
      }
    }
  }
  out.pass = mismatches == 0 && never_fails == 0 && oracle_mismatches == 0;
  out.detail = std::to_string(all_params().size()) + " triples, " + std::to_string(mismatches) +
               " mismatches, " + std::to_string(never_fails) + " triples where the refuted formula survives";
  return out;
}

Outcome nonvan1() {
  Outcome out;
  std::int64_t expected = 0, certified = 0;
  for (const auto& rec : all_records()) {
    expected += rec.nonvan1_expected;
    certified += rec.nonvan1_certified;
  }
  std::int64_t oracle_hits = 0;
  for (const auto& p : all_params()) {
    for (std::int64_t n = 1; n <= p.l / 2; ++n) {
      // Z^-n = O_X(-n Et) twisted by N^-n
      const auto idx = oracle::exact_match_indices(oracle::negative_pushforward(n, p.p, p.l), -n, p.l);
      for (auto i : idx) oracle_hits += i == p.l - n;
    }
  }
  out.pass = expected > 0 && certified == expected && oracle_hits == expected;
  out.detail = std::to_string(certified) + "/" + std::to_string(expected) + " certified";
  return out;
}

Outcome nonvan2() {
  Outcome out;
  std::int64_t total = 0, good = 0, corner = 0;
  std::vector<std::string> bad;
  for (const auto& p : all_params()) {
    const std::int64_t l = p.l;
    for (std::int64_t a = 1; a <= l - 1; ++a) {
      for (std::int64_t b = 1; b <= l - a; ++b) {
        ++total;
        const std::int64_t idx = l - b;
        const IndexedBundle* at = nullptr;
        const auto bundles = r1_phi_lower_z_ab(a, b, p);
        for (const auto& ib : bundles) {
          if (ib.index == idx) at = &ib;
        }
        // a zero summand carries no section
        if (idx >= a && idx <= l - 1 && at != nullptr && at->bundle.n_exp == l * at->bundle.sym_deg) {
          ++good;
        } else {
          corner += at == nullptr && p.m == 1 && a == 1 && b == l - 1;
          if (bad.size() < 3) bad.push_back(triple(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
      }
    }
  }
  out.pass = good == total;
  out.detail = std::to_string(good) + "/" + std::to_string(total) + " pairs";
  if (!bad.empty()) {
    out.detail += "; " + std::to_string(corner) + " of " + std::to_string(total - good) +
                  " failures have a zero summand at l-b with m=1, a=1, b=l-1; e.g.";
    for (const auto& s : bad) out.detail += " " + s + ";";
    out.detail += " ...";
  }
  return out;
}

Outcome nonnef() {
  Outcome out;
  std::int64_t fails = 0;
  for (const auto& p : all_params()) {
    const auto c = nef_failure(p, 1);
    const std::int64_t symbolic = p.deg_N * (p.l * (p.p - p.m - 1) + p.p + p.l - p.p * p.l);
    if (c.pairing_value != -p.deg_N || c.symbolic_pairing != -p.deg_N || symbolic != -p.deg_N) ++fails;
  }
  out.pass = fails == 0;
  out.detail = std::to_string(fails) + " failures";
  return out;
}

Outcome kollar() {
  Outcome out;
  std::int64_t fails = 0;
  for (const auto& p : all_params()) {
    const auto c = kollar_violation(p);
    if (p.l * (p.p - p.m - 1) + p.p + p.l - p.p * p.l != -1 || c.twist_exponent != -1 || c.h1_lower_bound < 1) {
      ++fails;
    }
  }
  out.pass = fails == 0;
  out.detail = std::to_string(fails) + " failures";
  return out;
}

Outcome directimage() {
  Outcome out;
  std::int64_t mismatches = 0;
  for (const auto& rec : all_records()) mismatches += rec.directimage_mismatches;
  out.pass = mismatches == 0;
  out.detail = std::to_string(mismatches) + " mismatched n";
  return out;
}

Outcome section4() {
  Outcome out;
  using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
  const bool qe = quasi_elliptic_solutions(3, 10, 10).empty() &&
                  quasi_elliptic_solutions(2, 10, 10) == Pairs{{2, 1}};
  const bool insep = insep_cover_euler(2, 1, Rational(1), Rational(1), Rational(1)) == 2 &&
                     insep_cover_euler(3, 1, Rational(2), Rational(2), Rational(0)) == 11 &&
                     insep_cover_euler(7, 2, Rational(0), Rational(0), Rational(0)) == 0;
  const bool ky = shepherd_barron_ky_coeffs(2, 3) == std::pair<std::int64_t, std::int64_t>{1, -7} &&
                  shepherd_barron_ky_coeffs(5, 1) == std::pair<std::int64_t, std::int64_t>{1, -4};
  out.pass = qe && insep && ky;
  return out;
}

Outcome ranks() {
  Outcome out;
  std::int64_t failures = 0, internal = 0;
  std::string first;
  for (const auto& rec : all_records()) {
    failures += rec.rank_failures;
    internal += rec.internal_errors;
    if (first.empty() && rec.internal_errors > 0) first = triple(rec.params) + ": " + rec.first_internal_error;
  }
  out.pass = failures == 0 && internal == 0;
  out.detail = std::to_string(failures) + " rank failures, " + std::to_string(internal) + " internal errors";
  if (!first.empty()) out.detail += " (" + first + ")";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"flagship instance", flagship},
      {"refutation of the naive pushforward", refutation},
      {"chi consistency", chi_consistency},
      {"nonvanishing for Z^-n", nonvan1},
      {"nonvanishing for Z_{a,b}^-1", nonvan2},
      {"failure of nefness", nonnef},
      {"Kollar vanishing violation", kollar},
      {"direct image two-route equality", directimage},
      {"inseparable cover formulas", section4},
      {"rank invariants", ranks},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
