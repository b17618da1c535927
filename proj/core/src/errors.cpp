#include "uc/errors.hpp"

namespace uc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::PointInZ: return "PointInZ";
    case ErrorCode::DegenerateProbe: return "DegenerateProbe";
    case ErrorCode::RampViolation: return "RampViolation";
    case ErrorCode::CriteriaDisagree: return "CriteriaDisagree";
    case ErrorCode::UnexpectedKernelDim: return "UnexpectedKernelDim";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::CharDividesDegree: return "CharDividesDegree";
    case ErrorCode::CharacteristicObstruction: return "CharacteristicObstruction";
    case ErrorCode::GcdDegreeMismatch: return "GcdDegreeMismatch";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::FieldConstraintViolated: return "FieldConstraintViolated";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::CharacteristicUnsupported: return "CharacteristicUnsupported";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace uc
