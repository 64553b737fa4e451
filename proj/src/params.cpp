#include "kodaira/params.hpp"

#include <string>

#include "kodaira/error.hpp"

namespace kodaira {

namespace {

std::string triple(std::int64_t p, std::int64_t g, std::int64_t l) {
  return "(p=" + std::to_string(p) + ", g=" + std::to_string(g) + ", l=" + std::to_string(l) + ")";
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ConstructionParams validate(std::int64_t p, std::int64_t g, std::int64_t l) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, triple(p, g, l) + ": p is not prime");
  if (g < 2) throw Error(ErrorKind::GenusTooSmall, triple(p, g, l) + ": need g >= 2");
  const std::int64_t canonical = 2 * g - 2;
  if (canonical % p != 0) {
    throw Error(ErrorKind::CharNotDividingCanonicalDegree,
                triple(p, g, l) + ": p does not divide 2g-2 = " + std::to_string(canonical));
  }
  const std::int64_t deg_L = canonical / p;
  if (l < 2) throw Error(ErrorKind::CoverDegreeInvalid, triple(p, g, l) + ": need l >= 2");
  if (deg_L % l != 0) {
    throw Error(ErrorKind::CoverDegreeInvalid,
                triple(p, g, l) + ": l does not divide deg L = " + std::to_string(deg_L));
  }
  if ((p + 1) % l != 0) {
    throw Error(ErrorKind::CoverDegreeInvalid, triple(p, g, l) + ": l does not divide p+1");
  }
  return ConstructionParams{p, g, l, deg_L, deg_L / l, (p + 1) / l};
}

std::vector<ConstructionParams> enumerate_params(std::int64_t max_p, std::int64_t max_g) {
  std::vector<ConstructionParams> out;
  for (std::int64_t p = 2; p <= max_p; ++p) {
    if (!is_prime(p)) continue;
    // l | p+1 and l | deg L; both conditions leave few candidates per g.
    for (std::int64_t g = 2; g <= max_g; ++g) {
      if ((2 * g - 2) % p != 0) continue;
      const std::int64_t deg_L = (2 * g - 2) / p;
      for (std::int64_t l = 2; l <= p + 1; ++l) {
        if ((p + 1) % l == 0 && deg_L % l == 0) out.push_back(validate(p, g, l));
      }
    }
  }
  return out;
}

std::int64_t fiber_genus(const ConstructionParams& params) {
  return (params.l - 1) * (params.p - 1) / 2;
}

bool omega_x_is_ample(const ConstructionParams& params) {
  return params.p >= 5 || (params.p == 3 && params.l == 4);
}

}  // namespace kodaira
