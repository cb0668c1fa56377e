#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simplexflow/parameters.hpp"
#include "simplexflow/sectors.hpp"
#include "simplexflow/simplex.hpp"
#include "simplexflow/speed.hpp"

namespace simplexflow {

enum class DomainMode {
  kLinear,
  kLog,
  /// Linear until some coordinate drops below the threshold, log after.
  kAuto,
};

inline constexpr double kAutoLogThreshold = 1e-100;

struct Sample {
  std::int64_t step = 0;
  SimplexPoint point;
};

struct ObservableSet {
  bool phi = false;
  bool sector = false;
  bool region = false;

  bool any() const noexcept { return phi || sector || region; }
};

/// Per-sample observables. Fields not requested keep their defaults.
struct Observation {
  double log_phi = 0.0;
  Sector sector = Sector::kG1;
  Region region{};

  double phi() const;
};

struct IterateOptions {
  std::int64_t steps = 0;
  std::int64_t stride = 1;
  ObservableSet observe{};
  DomainMode mode = DomainMode::kLinear;
  double auto_log_threshold = kAutoLogThreshold;
  double zero_tol = kDefaultZeroTol;
};

struct Trajectory {
  SimplexPoint start;
  Parameters params;
  SpeedFunction speed;
  /// samples[0] is the start at step 0; later entries every `stride` steps,
  /// plus the final iterate.
  std::vector<Sample> samples;
  /// Empty, or parallel to `samples`.
  std::vector<Observation> observations;
  /// Step from which iterates are held in log form.
  std::optional<std::int64_t> log_domain_since;

  const SimplexPoint& final_point() const { return samples.back().point; }
};

/// Stateful single orbit: the production stepping loop behind iterate().
class Orbit {
 public:
  Orbit(const SimplexPoint& start, const Parameters& params,
        const SpeedFunction& speed, DomainMode mode = DomainMode::kLinear,
        double auto_log_threshold = kAutoLogThreshold);

  const SimplexPoint& point() const noexcept { return point_; }
  std::int64_t step_index() const noexcept { return n_; }
  std::optional<std::int64_t> log_domain_since() const noexcept {
    return log_since_;
  }
  const Parameters& params() const noexcept { return params_; }
  const SpeedFunction& speed() const noexcept { return speed_; }

  /// Applies W once. Throws kNumericFailure on a non-finite iterate.
  const SimplexPoint& advance();

 private:
  void maybe_switch_domain();

  Parameters params_;
  SpeedFunction speed_;
  DomainMode mode_;
  double threshold_;
  SimplexPoint point_;
  std::int64_t n_ = 0;
  std::optional<std::int64_t> log_since_;
};

Observation observe(const SimplexPoint& p, const Parameters& params,
                    const ObservableSet& what, double zero_tol = kDefaultZeroTol);

/// Deterministic: identical inputs give bit-identical trajectories.
Trajectory iterate(const SimplexPoint& start, const Parameters& params,
                   const SpeedFunction& speed, const IterateOptions& options);

/// Zakharevich orbit with every iterate recorded (linear domain).
std::vector<Sample> iterate_zakharevich(const SimplexPoint& start,
                                        std::int64_t steps);

}  // namespace simplexflow
