#include "foxh/error.hpp"

namespace foxh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::IndexRule: return "IndexRule";
    case ErrorCode::InvalidKernel: return "InvalidKernel";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::OutOfStrip: return "OutOfStrip";
    case ErrorCode::StripEmpty: return "StripEmpty";
    case ErrorCode::ChiNonpositive: return "ChiNonpositive";
    case ErrorCode::PoleError: return "PoleError";
    case ErrorCode::PoleOnContour: return "PoleOnContour";
    case ErrorCode::InvalidOptions: return "InvalidOptions";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TooManyKernels: return "TooManyKernels";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::OmegaOutOfRange: return "OmegaOutOfRange";
    case ErrorCode::NonpositiveOmega: return "NonpositiveOmega";
    case ErrorCode::NotMeijerPattern: return "NotMeijerPattern";
    case ErrorCode::EpFailed: return "EpFailed";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::SchemaViolation: return 1;
    case ErrorCode::NoConvergence:
    case ErrorCode::PoleError: return 3;
    default: return 2;
  }
}

}  // namespace foxh
