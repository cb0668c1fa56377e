#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "simplexflow/parameters.hpp"
#include "simplexflow/simplex.hpp"
#include "simplexflow/speed.hpp"

namespace simplexflow {

// Continuous-time limit. Replacing f by f/n in the operator gives the Euler
// scheme with step 1/n for
//
//   dx1/dt = x1 (a x1 x2 - b x3^2) f(x)
//   dx2/dt = x2 (c x2 x3 - a x1^2) f(x)
//   dx3/dt = x3 (b x1 x3 - c x2^2) f(x)

/// Right-hand side; the components sum to zero (tangent to the simplex).
std::array<double, 3> vector_field(const SimplexPoint& p,
                                   const Parameters& params,
                                   const SpeedFunction& f);

/// Ambient gradient of phi: phi(x) lambda_i / x_i.
std::array<double, 3> grad_phi(const SimplexPoint& p, const Parameters& params);

/// <grad phi, vector_field> = phi(x) f(x) sum_i lambda_i g_i(x).
double lyapunov_derivative(const SimplexPoint& p, const Parameters& params,
                           const SpeedFunction& f);

struct EulerMethod {
  std::int64_t substeps = 1;  // n: steps per unit time, speed f/n
};

struct ReferenceRk4 {
  double h = 1e-3;
};

struct OdeRun {
  SimplexPoint start;
  Parameters params;
  SpeedFunction speed;
  double horizon = 1.0;
  std::variant<EulerMethod, ReferenceRk4> method;
  /// Record every k-th step (the final state is always recorded).
  std::int64_t sample_interval = 1;
};

struct PathPoint {
  double t = 0.0;
  SimplexPoint point;
};

/// ceil(T n) applications of W with speed f/n. Requires an EulerMethod run.
std::vector<PathPoint> euler_path(const OdeRun& run);

/// Classical RK4 with fixed step T/ceil(T/h) and renormalization after every
/// step. Throws kStepTooLarge for h > 1e-2. Requires a ReferenceRk4 run.
std::vector<PathPoint> reference_path(const OdeRun& run);

/// Max-norm distance between RK4 endpoints at h and h/2.
double reference_self_error(const OdeRun& run);

struct ConvergenceFit {
  std::vector<std::int64_t> substeps;
  std::vector<double> errors;  // max-norm endpoint error vs reference
  /// Least-squares slope of ln(error) against ln(1/n); NaN when degenerate.
  double slope = 0.0;
  /// Errors too small (or zero) to fit.
  bool degenerate = false;
  SimplexPoint reference_endpoint;
  double reference_h = 0.0;
  double reference_self_error = 0.0;
};

/// Measures the Euler order against the RK4 reference. n_list needs at least
/// four values spanning two decades. Paths run in parallel.
ConvergenceFit convergence_order(const SimplexPoint& start,
                                 const Parameters& params,
                                 const SpeedFunction& f, double horizon,
                                 const std::vector<std::int64_t>& n_list,
                                 double reference_h = 1e-3);

struct SlopeFit {
  double slope = 0.0;
  bool degenerate = false;
};

/// Least-squares slope of ln(error) against ln(1/n). Degenerate (slope NaN)
/// if any error is below `floor`.
SlopeFit fit_order(const std::vector<std::int64_t>& substeps,
                   const std::vector<double>& errors, double floor = 1e-14);

}  // namespace simplexflow
