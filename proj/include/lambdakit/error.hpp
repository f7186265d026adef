#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lambdakit {

enum class ErrorCode {
  kInvalidParameter,
  kParseError,
  kNotLambda,
  kNotInPlusSet,
  kNotLambda3,
  kInconsistentInput,
  kInternalFault,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` identifies the contract that
/// was violated; `what()` carries a human-readable message with 1-based indices.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace lambdakit
