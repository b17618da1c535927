#pragma once

#include <stdexcept>
#include <string>

namespace uc {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  UnsupportedField,
  NotPrime,
  Parse,
  SingularTransform,
  PointInZ,
  DegenerateProbe,
  RampViolation,
  CriteriaDisagree,
  UnexpectedKernelDim,
  StructureViolation,
  OutOfRange,
  CharDividesDegree,
  CharacteristicObstruction,
  GcdDegreeMismatch,
  NoStabilization,
  OracleMismatch,
  FieldConstraintViolated,
  UnknownName,
  CharacteristicUnsupported,
  InvalidInput,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

// Internal consistency check that survives NDEBUG.
inline void ensure(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::Internal, what);
}

}  // namespace uc
