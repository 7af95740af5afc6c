#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gnorm {

// Stable error kinds. The numeric values are mirrored by gnorm_status in the
// C API, so never reorder.
enum class ErrorCode : int {
  InvalidArgument = 1,
  NotHermitian,
  NoConvergence,
  NonRealRayleigh,
  LoopEdge,
  VertexOutOfRange,
  MalformedGraph6,
  BadFamilyParams,
  TooLargeForExact,
  OverflowRisk,
  NotPowerOfTwo,
  SizeOverflow,
  NotZeroOne,
  PreconditionFailed,
  UnknownBoundId,
  DomainError,
  TooLarge,
  RaggedRows,
  BadComplexLiteral,
  DimensionMismatch,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace gnorm
