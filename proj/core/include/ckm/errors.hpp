#pragma once

#include <stdexcept>
#include <string>

namespace ckm {

enum class ErrorCode {
  ParseError,
  UnknownVariable,
  RingMismatch,
  ZeroPolynomial,
  NotUnivariate,
  NotCofinite,
  NonRationalPoint,
  SingularMatrix,
  NotGCM,
  NotSymmetrizable,
  NotFiniteType,
  NotDominant,
  ContextMismatch,
  MissingPsiEntry,
  UnknownPsiKey,
  NotIntegrableInput,
  UnsupportedOracleType,
  SchemaError,
  IoError,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Contract violation or analysis failure.  Verdicts about the input
/// (integrable or not, and why) are ordinary return values, never thrown.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace ckm
