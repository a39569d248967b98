#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geopotent {

enum class ErrorKind {
  NonPhysicalInput,
  OutOfDomain,
  NonMonotonicRadius,
  NonPhysicalValue,
  TooFewSamples,
  PressureIncrease,
  InconsistentSphere,
  DegenerateProfile,
  InvalidSchedule,
  MissingPressureSource,
  InvalidConfig,
  MalformedCsv,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-checkable category. The CLI maps categories
/// onto exit codes (see exit_code_for).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// 2 for input/validation failures, 3 for numerical-domain failures.
int exit_code_for(ErrorKind kind) noexcept;

}  // namespace geopotent
