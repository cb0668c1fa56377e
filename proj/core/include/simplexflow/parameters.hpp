#pragma once

#include <array>

#include "simplexflow/simplex.hpp"

namespace simplexflow {

/// Interaction coefficients (a, b, c) in [-1,1] \ {0}, with the derived
/// weights lambda_i and the interior fixed point x* = lambda / sum(lambda).
class Parameters {
 public:
  /// Throws kZeroParameter or kParameterOutOfRange.
  Parameters(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  /// (|b c^2|^{1/3}, |a b^2|^{1/3}, |a^2 c|^{1/3}).
  const std::array<double, 3>& lambdas() const noexcept { return lambdas_; }
  const SimplexPoint& fixed_point() const noexcept { return fixed_point_; }

  bool all_positive() const noexcept { return a_ > 0 && b_ > 0 && c_ > 0; }
  bool all_negative() const noexcept { return a_ < 0 && b_ < 0 && c_ < 0; }
  bool sign_uniform() const noexcept { return all_positive() || all_negative(); }

  /// min_{i,j} lambda_i / lambda_j.
  double min_lambda_ratio() const noexcept;

  friend bool operator==(const Parameters& l, const Parameters& r) noexcept {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }

 private:
  double a_, b_, c_;
  std::array<double, 3> lambdas_;
  SimplexPoint fixed_point_;
};

}  // namespace simplexflow
