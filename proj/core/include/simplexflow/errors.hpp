#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simplexflow {

enum class ErrorCode {
  kNegativeCoordinate,
  kSumOutOfTolerance,
  kZeroParameter,
  kParameterOutOfRange,
  kInvalidSpeed,
  kNonPositiveFactor,
  kNotOnFace,
  kOrderOverflow,
  kSizeLimit,
  kStrideTooCoarse,
  kStepTooLarge,
  kReferenceUnavailable,
  kInvalidArgument,
  kNumericFailure,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace simplexflow
