#pragma once

#include <stdexcept>
#include <string>

namespace trapeze {

enum class ErrorCode {
  NonSimpleCurve,
  NotSimple,
  DomainError,
  NoInscriptionFound,
  SeedInvalid,
  StepCollapse,
  WrongKind,
  ConstructionFailure,
  DiagonalTouch,
  DegenerateFamily,
  NotGraphical,
  ProxyUnavailable,
  MismatchedQuadrisecants,
  WitnessNotFound,
  IoError,
};

const char* error_code_name(ErrorCode code);

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& what)
      : std::runtime_error(std::string(error_code_name(c)) + ": " + what), code(c) {}
};

}  // namespace trapeze
