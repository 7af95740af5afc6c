#include "gnorm/error.hpp"

namespace gnorm {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NonRealRayleigh: return "NonRealRayleigh";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::BadFamilyParams: return "BadFamilyParams";
    case ErrorCode::TooLargeForExact: return "TooLargeForExact";
    case ErrorCode::OverflowRisk: return "OverflowRisk";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::NotZeroOne: return "NotZeroOne";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::UnknownBoundId: return "UnknownBoundId";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::BadComplexLiteral: return "BadComplexLiteral";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gnorm
