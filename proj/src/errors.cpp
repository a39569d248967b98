#include "geopotent/errors.hpp"

namespace geopotent {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPhysicalInput: return "NonPhysicalInput";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NonMonotonicRadius: return "NonMonotonicRadius";
    case ErrorKind::NonPhysicalValue: return "NonPhysicalValue";
    case ErrorKind::TooFewSamples: return "TooFewSamples";
    case ErrorKind::PressureIncrease: return "PressureIncrease";
    case ErrorKind::InconsistentSphere: return "InconsistentSphere";
    case ErrorKind::DegenerateProfile: return "DegenerateProfile";
    case ErrorKind::InvalidSchedule: return "InvalidSchedule";
    case ErrorKind::MissingPressureSource: return "MissingPressureSource";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::MalformedCsv: return "MalformedCsv";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OutOfDomain:
    case ErrorKind::DegenerateProfile:
      return 3;
    default:
      return 2;
  }
}

}  // namespace geopotent
