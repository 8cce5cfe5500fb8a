#pragma once

#include <stdexcept>
#include <string>

namespace kcone {

// Domain error categories. The numeric values are shared with the C API
// status codes in kcone.h.
enum class ErrorCode {
  InvalidArgument = 1,
  NotASection = 2,
  NotReduced = 3,
  NonIntegral = 4,
  InternalNonIntegral = 5,
  WordNotFound = 6,
  FiberDegenerate = 7,
  Degenerate = 8,
  MalformedInput = 9,
  Internal = 10,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kcone
