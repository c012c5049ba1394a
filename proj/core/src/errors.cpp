#include "ckm/errors.hpp"

namespace ckm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotUnivariate: return "NotUnivariate";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::NonRationalPoint: return "NonRationalPoint";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotGCM: return "NotGCM";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::NotFiniteType: return "NotFiniteType";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::MissingPsiEntry: return "MissingPsiEntry";
    case ErrorCode::UnknownPsiKey: return "UnknownPsiKey";
    case ErrorCode::NotIntegrableInput: return "NotIntegrableInput";
    case ErrorCode::UnsupportedOracleType: return "UnsupportedOracleType";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ckm
