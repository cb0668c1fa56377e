#include "simplexflow/trajectory.hpp"

#include <cmath>

#include "simplexflow/dynamics.hpp"
#include "simplexflow/errors.hpp"
#include "simplexflow/lyapunov.hpp"

namespace simplexflow {

double Observation::phi() const { return std::exp(log_phi); }

Orbit::Orbit(const SimplexPoint& start, const Parameters& params,
             const SpeedFunction& speed, DomainMode mode,
             double auto_log_threshold)
    : params_(params),
      speed_(speed),
      mode_(mode),
      threshold_(auto_log_threshold),
      point_(start) {
  if (mode_ == DomainMode::kLog) {
    point_ = point_.to_log();
    log_since_ = 0;
  } else {
    point_ = point_.to_linear();
    maybe_switch_domain();
  }
}

void Orbit::maybe_switch_domain() {
  if (mode_ != DomainMode::kAuto || log_since_) return;
  const auto& x = point_.stored();
  if (x[0] < threshold_ || x[1] < threshold_ || x[2] < threshold_) {
    point_ = point_.to_log();
    log_since_ = n_;
  }
}

const SimplexPoint& Orbit::advance() {
  point_ = point_.is_log() ? step_log(point_, params_, speed_)
                           : step(point_, params_, speed_);
  ++n_;
  for (double v : point_.stored()) {
    if (std::isnan(v) || (std::isinf(v) && v > 0)) {
      throw Error(ErrorCode::kNumericFailure,
                  "non-finite iterate at step " + std::to_string(n_));
    }
  }
  maybe_switch_domain();
  return point_;
}

Observation observe(const SimplexPoint& p, const Parameters& params,
                    const ObservableSet& what, double zero_tol) {
  Observation o;
  if (what.phi) o.log_phi = log_phi(p, params);
  if (what.sector) o.sector = sector(p, params);
  if (what.region) o.region = classify_region(p, zero_tol);
  return o;
}

Trajectory iterate(const SimplexPoint& start, const Parameters& params,
                   const SpeedFunction& speed, const IterateOptions& options) {
  if (options.steps < 0) {
    throw Error(ErrorCode::kInvalidArgument, "iterate: negative step count");
  }
  if (options.stride < 1) {
    throw Error(ErrorCode::kInvalidArgument, "iterate: stride must be >= 1");
  }
  Trajectory traj{start, params, speed, {}, {}, std::nullopt};
  const std::int64_t expected = options.steps / options.stride + 2;
  traj.samples.reserve(static_cast<std::size_t>(expected));
  if (options.observe.any()) {
    traj.observations.reserve(static_cast<std::size_t>(expected));
  }

  Orbit orbit(start, params, speed, options.mode, options.auto_log_threshold);
  const auto record = [&] {
    traj.samples.push_back({orbit.step_index(), orbit.point()});
    if (options.observe.any()) {
      traj.observations.push_back(
          observe(orbit.point(), params, options.observe, options.zero_tol));
    }
  };
  record();
  for (std::int64_t n = 1; n <= options.steps; ++n) {
    orbit.advance();
    if (n % options.stride == 0 || n == options.steps) record();
  }
  traj.log_domain_since = orbit.log_domain_since();
  return traj;
}

std::vector<Sample> iterate_zakharevich(const SimplexPoint& start,
                                        std::int64_t steps) {
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(steps + 1));
  SimplexPoint p = start.to_linear();
  out.push_back({0, p});
  for (std::int64_t n = 1; n <= steps; ++n) {
    p = zakharevich_step(p);
    out.push_back({n, p});
  }
  return out;
}

}  // namespace simplexflow
