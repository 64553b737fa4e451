#pragma once

#include <cstdint>
#include <vector>

namespace kodaira {

/// A validated parameter triple (p, g, l) for the cyclic-cover construction
/// together with the scalars derived from it.
///
/// p is the characteristic, g the genus of the base curve C and l the degree
/// of the cyclic cover X -> P. The derived values are deg L = (2g-2)/p,
/// deg N = deg L / l (N^l = L) and m = (p+1)/l. Instances are only produced by
/// validate() or enumerate_params(), so the divisibility constraints always
/// hold.
///
/// Every result derived from these parameters is conditional on the
/// existence of a Tango curve of genus g carrying a Tango structure L with
/// H^1(C, L^-1) != 0; that hypothesis is not checked here.
struct ConstructionParams {
  std::int64_t p = 0;
  std::int64_t g = 0;
  std::int64_t l = 0;
  std::int64_t deg_L = 0;
  std::int64_t deg_N = 0;
  std::int64_t m = 0;

  bool operator==(const ConstructionParams&) const = default;
};

bool is_prime(std::int64_t n);

/// Checks the construction constraints and derives deg L, deg N and m.
/// Errors are reported in the order NotPrime, GenusTooSmall,
/// CharNotDividingCanonicalDegree, CoverDegreeInvalid.
ConstructionParams validate(std::int64_t p, std::int64_t g, std::int64_t l);

/// Every valid triple with p <= max_p and g <= max_g, sorted by (p, g, l).
std::vector<ConstructionParams> enumerate_params(std::int64_t max_p, std::int64_t max_g);

/// Geometric genus (l-1)(p-1)/2 of a closed fiber of X -> C.
std::int64_t fiber_genus(const ConstructionParams& params);

/// The canonical bundle of X is ample when p >= 5 or (p, l) = (3, 4).
bool omega_x_is_ample(const ConstructionParams& params);

}  // namespace kodaira
