#include "simplexflow/speed.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "simplexflow/errors.hpp"

namespace simplexflow {

namespace {

void check_range(double v, const char* what) {
  if (!(v > 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << what << " = " << v << " outside (0,1]";
    throw Error(ErrorCode::kInvalidSpeed, os.str());
  }
}

}  // namespace

SpeedFunction SpeedFunction::constant(double value) {
  check_range(value, "constant speed");
  return SpeedFunction(Kind::kConstant, {value, 0.0, 0.0, 0.0});
}

SpeedFunction SpeedFunction::affine(double alpha0, double alpha1, double alpha2,
                                    double alpha3) {
  const std::array<double, 4> coef{alpha0, alpha1, alpha2, alpha3};
  for (std::size_t i = 1; i < 4; ++i) {
    check_range(alpha0 + coef[i], "affine speed at a vertex");
  }
  return SpeedFunction(Kind::kAffine, coef);
}

double SpeedFunction::operator()(const SimplexPoint& p) const {
  if (kind_ == Kind::kConstant) return coef_[0];
  return at(p.linear());
}

double SpeedFunction::at(const std::array<double, 3>& x) const noexcept {
  if (kind_ == Kind::kConstant) return coef_[0];
  return coef_[0] + coef_[1] * x[0] + coef_[2] * x[1] + coef_[3] * x[2];
}

SpeedFunction SpeedFunction::divided_by(double divisor) const {
  if (!(divisor >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "speed divisor must be >= 1");
  }
  if (divisor == 1.0) return *this;
  if (kind_ == Kind::kConstant) return constant(coef_[0] / divisor);
  return affine(coef_[0] / divisor, coef_[1] / divisor, coef_[2] / divisor,
                coef_[3] / divisor);
}

double SpeedFunction::max_value() const noexcept {
  if (kind_ == Kind::kConstant) return coef_[0];
  return coef_[0] + std::max({coef_[1], coef_[2], coef_[3]});
}

std::string SpeedFunction::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (kind_ == Kind::kConstant) {
    os << "const(" << coef_[0] << ")";
  } else {
    os << "affine(" << coef_[0] << "," << coef_[1] << "," << coef_[2] << ","
       << coef_[3] << ")";
  }
  return os.str();
}

}  // namespace simplexflow
