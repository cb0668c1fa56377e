#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simplexflow/sectors.hpp"
#include "simplexflow/trajectory.hpp"

namespace simplexflow {

// ---------------------------------------------------------------------------
// Sector cycling

struct SectorTransition {
  std::int64_t step = 0;  // step of the source sample
  Sector from = Sector::kG1;
  Sector to = Sector::kG1;
};

struct SectorAuditReport {
  /// ln gamma used as the phi filter on source samples.
  double log_gamma = 0.0;
  /// Every phi in the window is zero: the filter admits everything and the
  /// audit is rejected (counts below stay empty).
  bool degenerate = false;
  std::int64_t audited_steps = 0;
  /// transitions[i][j]: one-step moves G_{i+1} -> G_{j+1} among audited steps.
  std::array<std::array<std::int64_t, 6>, 6> transitions{};
  /// Moves other than G_i -> G_i or G_i -> G_{i+1 mod 6}.
  std::vector<SectorTransition> violations;
  /// Samples with phi <= gamma lying in each sector.
  std::array<std::int64_t, 6> samples_in_sector{};
  /// Number of separate visits (entries) to each sector.
  std::array<std::int64_t, 6> visits{};

  std::int64_t changes() const;
};

/// Audits consecutive samples whose source has phi <= gamma. Requires
/// consecutive step indices (kStrideTooCoarse otherwise).
SectorAuditReport sector_cycle_audit(const Trajectory& traj, double log_gamma);

/// Empirical gamma_0: the largest gamma on the dyadic grid
/// phi(x*) 2^{-m}, m = 0..max_halvings, for which the audit finds no illegal
/// transition. Found by bisection on m. nullopt if even the smallest grid
/// value fails or the audit is degenerate. Returns ln gamma.
std::optional<double> estimate_log_gamma0(const Trajectory& traj,
                                          int max_halvings = 4096);

// ---------------------------------------------------------------------------
// Vertex sojourns

struct Sojourn {
  std::int64_t first_step = 0;
  std::int64_t last_step = 0;
  /// Still inside at the end of the window.
  bool open = false;
  /// ln phi at entry (needs params; NaN when computed without).
  double log_phi_at_entry = 0.0;

  std::int64_t length() const noexcept { return last_step - first_step + 1; }
};

/// Maximal runs of consecutive samples with x_i >= 1 - eps, per vertex.
/// Intended for stride-1 samples.
std::array<std::vector<Sojourn>, 3> sojourn_stats(std::span<const Sample> samples,
                                                  double eps);
std::array<std::vector<Sojourn>, 3> sojourn_stats(const Trajectory& traj,
                                                  double eps);

// ---------------------------------------------------------------------------
// Convergence, persistence, limit sets

/// The last sample if the max-norm diameter of the last `window` samples is
/// below tol. Throws kInvalidArgument for window < 2.
std::optional<SimplexPoint> detect_convergence(std::span<const Sample> samples,
                                               double tol, std::size_t window);

struct SpeciesPersistence {
  double global_min = 1.0;
  double global_max = 0.0;
  /// Window over the last 10% of samples: liminf / limsup proxies.
  double window_min = 1.0;
  double window_max = 0.0;
  double log_window_min = 0.0;
};

enum class Persistence { kNone, kWeak, kStrong };

struct PersistenceReport {
  std::array<SpeciesPersistence, 3> species{};
  std::size_t window_samples = 0;
  /// Finite-horizon hint only.
  Persistence hint = Persistence::kNone;
};

/// `level` is the floor below which a windowed proxy counts as vanished.
PersistenceReport persistence_report(std::span<const Sample> samples,
                                     double level = 1e-6);

struct GridCell {
  int i = 0;  // floor(x1 / h)
  int j = 0;  // floor(x2 / h)

  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

/// Barycentric grid cells of width `grid` hit by samples with step >= burn_in,
/// sorted and unique.
std::vector<GridCell> omega_limit_estimate(std::span<const Sample> samples,
                                           std::int64_t burn_in, double grid);

/// Centre of a cell in simplex coordinates (clamped onto S^2).
SimplexPoint cell_center(const GridCell& cell, double grid);

/// True if some cell has its centre within `radius` (max-norm) of e_i.
bool cells_reach_vertex(std::span<const GridCell> cells, double grid,
                        std::size_t i, double radius);

struct PhiDecay {
  double log_phi_start = 0.0;
  double log_phi_end = 0.0;
  /// (ln phi_end - ln phi_start) / steps: empirical geometric decay rate.
  double mean_log_rate = 0.0;
  /// Largest one-step increase of ln phi between consecutive samples.
  double max_increase = 0.0;
};

PhiDecay phi_decay(const Trajectory& traj);

}  // namespace simplexflow
