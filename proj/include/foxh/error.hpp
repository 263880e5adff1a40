#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foxh {

enum class ErrorCode {
  SchemaViolation,
  SpecInvalid,
  IndexRule,
  InvalidKernel,
  DomainError,
  OutOfStrip,
  StripEmpty,
  ChiNonpositive,
  PoleError,
  PoleOnContour,
  InvalidOptions,
  NoConvergence,
  TooManyKernels,
  PreconditionFailed,
  OmegaOutOfRange,
  NonpositiveOmega,
  NotMeijerPattern,
  EpFailed,
};

std::string_view to_string(ErrorCode code);

// CLI exit status for an error class: 1 schema, 2 precondition, 3 numeric.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace foxh
