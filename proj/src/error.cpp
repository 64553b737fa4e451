#include "kodaira/error.hpp"

#include <stdexcept>
#include <string>

#include "kodaira/rational.hpp"

namespace kodaira {

std::int64_t to_integer(const Rational& r) {
  if (!is_integral(r)) throw Error(ErrorKind::NonIntegralResult, to_string(r));
  return r.numerator();
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) throw std::overflow_error("checked_pow overflow");
  }
  return out;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::CharNotDividingCanonicalDegree: return "CharNotDividingCanonicalDegree";
    case ErrorKind::CoverDegreeInvalid: return "CoverDegreeInvalid";
    case ErrorKind::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorKind::NonPositiveMultiple: return "NonPositiveMultiple";
    case ErrorKind::NoContradiction: return "NoContradiction";
    case ErrorKind::OutOfProvenRange: return "OutOfProvenRange";
    case ErrorKind::NoCertificate: return "NoCertificate";
    case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::LerayObstruction: return "LerayObstruction";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::NonIntegralResult || kind == ErrorKind::RankMismatch ||
         kind == ErrorKind::LerayObstruction;
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace kodaira
