#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drinact {

enum class ErrorCode {
  InvalidArgument,
  MalformedHex,
  MalformedInstance,
  WrongCharacteristic,
  DivisionByZero,
  MixedFields,
  ZeroPolynomial,
  GenerationFailed,
  NotRightDivisible,
  BothZero,
  EvenDegreeExtension,
  InconsistentSystem,
  NotSeparable,
  NotAnIsogeny,
  SingularCurve,
  DegreeConstraintViolated,
  ZeroH,
  NotMonic,
  DegreeTooLarge,
  DivisibilityFails,
  MixedCurves,
  ZeroJInvariant,
  CharpolyMismatch,
  InvalidMumford,
  NoSolution,
  TooLarge,
  InvariantViolated,
};

std::string_view to_string(ErrorCode code) noexcept;

// Errors caused by malformed user input rather than failed mathematical
// preconditions. The CLI maps these to exit status 2.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& detail = {});

}  // namespace drinact
