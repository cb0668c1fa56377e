#include "simplexflow/lyapunov.hpp"

#include <cmath>
#include <limits>

#include "simplexflow/dynamics.hpp"
#include "simplexflow/summation.hpp"

namespace simplexflow {

double log_phi(const SimplexPoint& p, const Parameters& params) {
  const auto logs = p.logs();
  const auto& l = params.lambdas();
  CompensatedSum acc;
  for (std::size_t i = 0; i < 3; ++i) {
    if (logs[i] == -std::numeric_limits<double>::infinity()) return logs[i];
    acc.add(l[i] * logs[i]);
  }
  return acc.value();
}

double lyapunov_phi(const SimplexPoint& p, const Parameters& params) {
  return std::exp(log_phi(p, params));
}

double log_psi(const SimplexPoint& p, const Parameters& params,
               const SpeedFunction& f) {
  const auto lg = log_growth_factors(p, params, f(p));
  const auto& l = params.lambdas();
  CompensatedSum acc;
  for (std::size_t i = 0; i < 3; ++i) acc.add(l[i] * lg[i]);
  return acc.value();
}

double psi(const SimplexPoint& p, const Parameters& params,
           const SpeedFunction& f) {
  return std::exp(log_psi(p, params, f));
}

double quad_form_F(const SimplexPoint& p, const Parameters& params) {
  const double a = params.a(), b = params.b(), c = params.c();
  const auto x = p.linear();
  const double u1 = std::cbrt(std::abs(a * a * b)) * x[0];
  const double u2 = std::cbrt(std::abs(c * c * a)) * x[1];
  const double u3 = std::cbrt(std::abs(b * b * c)) * x[2];
  return (u1 - u2) * (u1 - u2) + (u1 - u3) * (u1 - u3) + (u2 - u3) * (u2 - u3);
}

}  // namespace simplexflow
