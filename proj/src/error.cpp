#include "lambdakit/error.hpp"

namespace lambdakit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameter: return "invalid-parameter";
    case ErrorCode::kParseError: return "parse-error";
    case ErrorCode::kNotLambda: return "not-lambda";
    case ErrorCode::kNotInPlusSet: return "not-in-plus-set";
    case ErrorCode::kNotLambda3: return "not-lambda-3";
    case ErrorCode::kInconsistentInput: return "inconsistent-input";
    case ErrorCode::kInternalFault: return "internal-fault";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace lambdakit
