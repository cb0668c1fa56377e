#pragma once

#include <array>
#include <span>

namespace simplexflow {

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double value) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double compensated_sum(std::span<const double> values) noexcept;

inline double compensated_sum(const std::array<double, 3>& v) noexcept {
  return compensated_sum(std::span<const double>(v));
}

/// log(exp(a) + exp(b)), exact for -inf inputs.
double log_add_exp(double a, double b) noexcept;

/// log(sum exp(v_i)) with the max-shift trick.
double log_sum_exp(std::span<const double> values) noexcept;

}  // namespace simplexflow
