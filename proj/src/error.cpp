#include "drinact/error.hpp"

namespace drinact {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedHex: return "MalformedHex";
    case ErrorCode::MalformedInstance: return "MalformedInstance";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::NotRightDivisible: return "NotRightDivisible";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::EvenDegreeExtension: return "EvenDegreeExtension";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::NotAnIsogeny: return "NotAnIsogeny";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::DegreeConstraintViolated: return "DegreeConstraintViolated";
    case ErrorCode::ZeroH: return "ZeroH";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::DivisibilityFails: return "DivisibilityFails";
    case ErrorCode::MixedCurves: return "MixedCurves";
    case ErrorCode::ZeroJInvariant: return "ZeroJInvariant";
    case ErrorCode::CharpolyMismatch: return "CharpolyMismatch";
    case ErrorCode::InvalidMumford: return "InvalidMumford";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::MalformedHex:
    case ErrorCode::MalformedInstance:
    case ErrorCode::WrongCharacteristic:
    case ErrorCode::TooLarge:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(to_string(code))
                                        : std::string(to_string(code)) + ": " + detail),
      code_(code) {}

void raise(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace drinact
