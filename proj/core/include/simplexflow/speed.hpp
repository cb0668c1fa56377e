#pragma once

#include <array>
#include <string>

#include "simplexflow/simplex.hpp"

namespace simplexflow {

/// Local speed f: S^2 -> (0,1]. Constant, or affine in the coordinates.
///
/// Extensions must keep the same contract: evaluation is pure and every
/// value on the simplex lies in (0,1]. Affine maps attain their extrema at
/// the vertices, so checking the three vertex values certifies the range.
class SpeedFunction {
 public:
  enum class Kind { kConstant, kAffine };

  static SpeedFunction constant(double value);
  /// alpha0 + alpha1 x1 + alpha2 x2 + alpha3 x3.
  static SpeedFunction affine(double alpha0, double alpha1, double alpha2,
                              double alpha3);

  double operator()(const SimplexPoint& p) const;
  /// Evaluation at raw coordinates (e.g. Runge-Kutta stages, which leave the
  /// simplex by rounding only).
  double at(const std::array<double, 3>& x) const noexcept;

  Kind kind() const noexcept { return kind_; }
  /// (alpha0, alpha1, alpha2, alpha3); a constant v is (v, 0, 0, 0).
  const std::array<double, 4>& coefficients() const noexcept { return coef_; }

  /// f / divisor; used by the Euler discretization (f replaced by f/n).
  SpeedFunction divided_by(double divisor) const;

  /// Max over the simplex.
  double max_value() const noexcept;

  std::string describe() const;

  friend bool operator==(const SpeedFunction&, const SpeedFunction&) = default;

 private:
  SpeedFunction(Kind kind, const std::array<double, 4>& coef)
      : kind_(kind), coef_(coef) {}

  Kind kind_;
  std::array<double, 4> coef_;
};

}  // namespace simplexflow
