#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// Under C++20 the rewritten-candidate rules make boost 1.74's mixed
// rational/integer operator== call itself. Exact non-template overloads win.
namespace boost {
#define KODAIRA_RATIONAL_EQ(Int)                                                     \
  inline bool operator==(const rational<std::int64_t>& a, Int b) {                   \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);    \
  }                                                                                  \
  inline bool operator==(Int b, const rational<std::int64_t>& a) { return a == b; }  \
  inline bool operator!=(const rational<std::int64_t>& a, Int b) { return !(a == b); } \
  inline bool operator!=(Int b, const rational<std::int64_t>& a) { return !(a == b); }
KODAIRA_RATIONAL_EQ(int)
KODAIRA_RATIONAL_EQ(long)
KODAIRA_RATIONAL_EQ(long long)
#undef KODAIRA_RATIONAL_EQ
}  // namespace boost

namespace kodaira {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::rational<std::int64_t>;

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

/// Returns the integer value of `r`. Throws NonIntegralResult otherwise.
std::int64_t to_integer(const Rational& r);

/// base^exp with overflow detection (throws std::overflow_error).
std::int64_t checked_pow(std::int64_t base, int exp);

std::string to_string(const Rational& r);

}  // namespace kodaira
