#include "simplexflow/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "simplexflow/errors.hpp"

namespace simplexflow {

namespace {

void validate(double v, const char* name) {
  if (std::isnan(v) || std::abs(v) > 1.0) {
    std::ostringstream os;
    os << "parameter " << name << " = " << v << " outside [-1,1]";
    throw Error(ErrorCode::kParameterOutOfRange, os.str());
  }
  if (v == 0.0) {
    throw Error(ErrorCode::kZeroParameter,
                std::string("parameter ") + name + " must be non-zero");
  }
}

}  // namespace

Parameters::Parameters(double a, double b, double c) : a_(a), b_(b), c_(c) {
  validate(a, "a");
  validate(b, "b");
  validate(c, "c");
  lambdas_ = {std::cbrt(std::abs(b * c * c)), std::cbrt(std::abs(a * b * b)),
              std::cbrt(std::abs(a * a * c))};
  fixed_point_ = SimplexPoint::from_linear(lambdas_);
}

double Parameters::min_lambda_ratio() const noexcept {
  const auto [lo, hi] = std::minmax_element(lambdas_.begin(), lambdas_.end());
  return *lo / *hi;
}

}  // namespace simplexflow
