#include "simplexflow/ode_limit.hpp"

#include <cmath>
#include <future>
#include <limits>

#include "simplexflow/dynamics.hpp"
#include "simplexflow/errors.hpp"
#include "simplexflow/lyapunov.hpp"
#include "simplexflow/summation.hpp"

namespace simplexflow {

namespace {

constexpr double kMaxReferenceStep = 1e-2;

std::array<double, 3> field_at(const std::array<double, 3>& x,
                               const Parameters& params,
                               const SpeedFunction& f) {
  const auto g = growth_terms(x, params);
  const double F = f.at(x);
  return {x[0] * g[0] * F, x[1] * g[1] * F, x[2] * g[2] * F};
}

std::int64_t step_count(double horizon, double per_unit) {
  const double exact = horizon * per_unit;
  const double rounded = std::round(exact);
  if (std::abs(exact - rounded) <= 1e-9 * std::max(1.0, exact)) {
    return static_cast<std::int64_t>(rounded);
  }
  return static_cast<std::int64_t>(std::ceil(exact));
}

void check_horizon(double horizon) {
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) {
    throw Error(ErrorCode::kInvalidArgument, "horizon must be finite and >= 0");
  }
}

std::int64_t sample_interval(const OdeRun& run) {
  if (run.sample_interval < 1) {
    throw Error(ErrorCode::kInvalidArgument, "sample_interval must be >= 1");
  }
  return run.sample_interval;
}

SimplexPoint rk4_endpoint(const OdeRun& run, double h,
                          std::vector<PathPoint>* path) {
  check_horizon(run.horizon);
  if (!(h > 0.0) || h > kMaxReferenceStep) {
    throw Error(ErrorCode::kStepTooLarge,
                "reference step must be in (0, 1e-2]");
  }
  const std::int64_t steps = step_count(run.horizon, 1.0 / h);
  const double dt = steps > 0 ? run.horizon / static_cast<double>(steps) : 0.0;
  const std::int64_t every = sample_interval(run);

  SimplexPoint p = run.start.to_linear();
  if (path) path->push_back({0.0, p});
  for (std::int64_t s = 1; s <= steps; ++s) {
    const auto x = p.linear();
    const auto stage = [&](const std::array<double, 3>& k, double w) {
      return std::array<double, 3>{x[0] + w * k[0], x[1] + w * k[1],
                                   x[2] + w * k[2]};
    };
    const auto k1 = field_at(x, run.params, run.speed);
    const auto k2 = field_at(stage(k1, dt / 2), run.params, run.speed);
    const auto k3 = field_at(stage(k2, dt / 2), run.params, run.speed);
    const auto k4 = field_at(stage(k3, dt), run.params, run.speed);
    std::array<double, 3> next{};
    for (std::size_t i = 0; i < 3; ++i) {
      next[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(next[i])) {
        throw Error(ErrorCode::kNumericFailure, "RK4 produced a non-finite state");
      }
      // Vertices and faces are invariant; rounding may undershoot by an ulp.
      if (next[i] < 0.0) next[i] = 0.0;
    }
    p = SimplexPoint::from_linear(next);
    if (path && (s % every == 0 || s == steps)) {
      path->push_back({static_cast<double>(s) * dt, p});
    }
  }
  return p;
}

}  // namespace

std::array<double, 3> vector_field(const SimplexPoint& p,
                                   const Parameters& params,
                                   const SpeedFunction& f) {
  return field_at(p.linear(), params, f);
}

std::array<double, 3> grad_phi(const SimplexPoint& p, const Parameters& params) {
  const double phi = lyapunov_phi(p, params);
  const auto x = p.linear();
  const auto& l = params.lambdas();
  return {phi * l[0] / x[0], phi * l[1] / x[1], phi * l[2] / x[2]};
}

double lyapunov_derivative(const SimplexPoint& p, const Parameters& params,
                           const SpeedFunction& f) {
  const auto g = growth_terms(p.linear(), params);
  const auto& l = params.lambdas();
  const double weighted =
      compensated_sum(std::array<double, 3>{l[0] * g[0], l[1] * g[1], l[2] * g[2]});
  return lyapunov_phi(p, params) * f(p) * weighted;
}

std::vector<PathPoint> euler_path(const OdeRun& run) {
  const auto* euler = std::get_if<EulerMethod>(&run.method);
  if (!euler) {
    throw Error(ErrorCode::kInvalidArgument, "euler_path needs an Euler run");
  }
  if (euler->substeps < 1) {
    throw Error(ErrorCode::kInvalidArgument, "Euler substeps must be >= 1");
  }
  check_horizon(run.horizon);
  const double n = static_cast<double>(euler->substeps);
  const std::int64_t steps = step_count(run.horizon, n);
  const std::int64_t every = sample_interval(run);
  const SpeedFunction scaled = run.speed.divided_by(n);

  std::vector<PathPoint> path;
  path.reserve(static_cast<std::size_t>(steps / every + 2));
  SimplexPoint p = run.start.to_linear();
  path.push_back({0.0, p});
  for (std::int64_t s = 1; s <= steps; ++s) {
    p = step(p, run.params, scaled);
    if (s % every == 0 || s == steps) {
      path.push_back({static_cast<double>(s) / n, p});
    }
  }
  return path;
}

std::vector<PathPoint> reference_path(const OdeRun& run) {
  const auto* rk = std::get_if<ReferenceRk4>(&run.method);
  if (!rk) {
    throw Error(ErrorCode::kInvalidArgument, "reference_path needs an RK4 run");
  }
  std::vector<PathPoint> path;
  rk4_endpoint(run, rk->h, &path);
  return path;
}

double reference_self_error(const OdeRun& run) {
  const auto* rk = std::get_if<ReferenceRk4>(&run.method);
  if (!rk) {
    throw Error(ErrorCode::kInvalidArgument, "reference_self_error needs RK4");
  }
  return distance(rk4_endpoint(run, rk->h, nullptr),
                  rk4_endpoint(run, rk->h / 2, nullptr));
}

SlopeFit fit_order(const std::vector<std::int64_t>& substeps,
                   const std::vector<double>& errors, double floor) {
  if (substeps.size() != errors.size() || substeps.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "fit_order: need >= 2 pairs");
  }
  SlopeFit fit;
  for (double e : errors) {
    if (!(e >= floor)) {
      fit.degenerate = true;
      fit.slope = std::numeric_limits<double>::quiet_NaN();
      return fit;
    }
  }
  const double m = static_cast<double>(errors.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < errors.size(); ++k) {
    const double lx = -std::log(static_cast<double>(substeps[k]));
    const double ly = std::log(errors[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return fit;
}

ConvergenceFit convergence_order(const SimplexPoint& start,
                                 const Parameters& params,
                                 const SpeedFunction& f, double horizon,
                                 const std::vector<std::int64_t>& n_list,
                                 double reference_h) {
  if (n_list.size() < 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "convergence_order needs at least four values of n");
  }
  std::int64_t lo = n_list.front(), hi = n_list.front();
  for (auto n : n_list) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  if (static_cast<double>(hi) < 100.0 * static_cast<double>(lo)) {
    throw Error(ErrorCode::kInvalidArgument,
                "n values must span at least two decades");
  }

  ConvergenceFit fit;
  fit.substeps = n_list;
  fit.reference_h = reference_h;
  OdeRun ref{start, params, f, horizon, ReferenceRk4{reference_h}, 1};
  try {
    fit.reference_endpoint = rk4_endpoint(ref, reference_h, nullptr);
    fit.reference_self_error =
        distance(fit.reference_endpoint, rk4_endpoint(ref, reference_h / 2, nullptr));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kStepTooLarge) throw;
    throw Error(ErrorCode::kReferenceUnavailable, e.what());
  }

  std::vector<std::future<SimplexPoint>> jobs;
  jobs.reserve(n_list.size());
  for (auto n : n_list) {
    jobs.push_back(std::async(std::launch::async, [=] {
      OdeRun run{start, params, f, horizon, EulerMethod{n},
                 std::numeric_limits<std::int64_t>::max()};
      return euler_path(run).back().point;
    }));
  }
  for (auto& job : jobs) {
    fit.errors.push_back(distance(job.get(), fit.reference_endpoint));
  }
  const SlopeFit s = fit_order(fit.substeps, fit.errors);
  fit.slope = s.slope;
  fit.degenerate = s.degenerate;
  return fit;
}

}  // namespace simplexflow
