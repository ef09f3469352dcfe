#include "trapeze/errors.hpp"

namespace trapeze {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSimpleCurve: return "NonSimpleCurve";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoInscriptionFound: return "NoInscriptionFound";
    case ErrorCode::SeedInvalid: return "SeedInvalid";
    case ErrorCode::StepCollapse: return "StepCollapse";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::ConstructionFailure: return "ConstructionFailure";
    case ErrorCode::DiagonalTouch: return "DiagonalTouch";
    case ErrorCode::DegenerateFamily: return "DegenerateFamily";
    case ErrorCode::NotGraphical: return "NotGraphical";
    case ErrorCode::ProxyUnavailable: return "ProxyUnavailable";
    case ErrorCode::MismatchedQuadrisecants: return "MismatchedQuadrisecants";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace trapeze
