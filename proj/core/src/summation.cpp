#include "simplexflow/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "simplexflow/errors.hpp"

namespace simplexflow {

void CompensatedSum::add(double value) noexcept {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value)) {
    compensation_ += (sum_ - t) + value;
  } else {
    compensation_ += (value - t) + sum_;
  }
  sum_ = t;
}

double compensated_sum(std::span<const double> values) noexcept {
  CompensatedSum acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

double log_add_exp(double a, double b) noexcept {
  if (a < b) std::swap(a, b);
  if (a == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

double log_sum_exp(std::span<const double> values) noexcept {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double shift = kNegInf;
  for (double v : values) shift = std::max(shift, v);
  if (shift == kNegInf) return kNegInf;
  CompensatedSum acc;
  for (double v : values) acc.add(std::exp(v - shift));
  return shift + std::log(acc.value());
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeCoordinate: return "NegativeCoordinate";
    case ErrorCode::kSumOutOfTolerance: return "SumOutOfTolerance";
    case ErrorCode::kZeroParameter: return "ZeroParameter";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kInvalidSpeed: return "InvalidSpeed";
    case ErrorCode::kNonPositiveFactor: return "NonPositiveFactor";
    case ErrorCode::kNotOnFace: return "NotOnFace";
    case ErrorCode::kOrderOverflow: return "OrderOverflow";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kStrideTooCoarse: return "StrideTooCoarse";
    case ErrorCode::kStepTooLarge: return "StepTooLarge";
    case ErrorCode::kReferenceUnavailable: return "ReferenceUnavailable";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNumericFailure: return "NumericFailure";
  }
  return "Unknown";
}

}  // namespace simplexflow
