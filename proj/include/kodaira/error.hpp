#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kodaira {

enum class ErrorKind {
  // parameter validation
  NotPrime,
  GenusTooSmall,
  CharNotDividingCanonicalDegree,
  CoverDegreeInvalid,
  // operation preconditions
  NonPositiveCoefficient,
  NonPositiveMultiple,
  NoContradiction,
  OutOfProvenRange,
  NoCertificate,
  UnsupportedCharacteristic,
  // internal invariants; any of these firing is a bug
  NonIntegralResult,
  RankMismatch,
  LerayObstruction,
};

std::string_view error_name(ErrorKind kind);

/// True for the kinds that signal a broken internal invariant rather than bad
/// input.
bool is_internal(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kodaira
