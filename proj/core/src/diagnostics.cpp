#include "simplexflow/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "simplexflow/errors.hpp"
#include "simplexflow/lyapunov.hpp"

namespace simplexflow {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct SectorSeries {
  std::vector<double> log_phi;
  std::vector<Sector> sectors;
  std::vector<std::int64_t> steps;
  bool all_boundary = true;
};

SectorSeries sector_series(const Trajectory& traj) {
  SectorSeries s;
  const auto n = traj.samples.size();
  s.log_phi.reserve(n);
  s.sectors.reserve(n);
  s.steps.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& smp = traj.samples[k];
    if (k > 0 && smp.step != traj.samples[k - 1].step + 1) {
      throw Error(ErrorCode::kStrideTooCoarse,
                  "sector audit needs consecutive steps (stride 1)");
    }
    const double lp = log_phi(smp.point, traj.params);
    if (lp > kNegInf) s.all_boundary = false;
    s.log_phi.push_back(lp);
    s.sectors.push_back(sector(smp.point, traj.params));
    s.steps.push_back(smp.step);
  }
  return s;
}

bool legal(Sector from, Sector to) { return to == from || to == next(from); }

SectorAuditReport audit(const SectorSeries& s, double log_gamma) {
  SectorAuditReport r;
  r.log_gamma = log_gamma;
  if (s.all_boundary) {
    r.degenerate = true;
    return r;
  }
  const std::size_t n = s.sectors.size();
  bool prev_admitted = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(s.log_phi[k] <= log_gamma)) {
      prev_admitted = false;
      continue;
    }
    const int si = index(s.sectors[k]) - 1;
    ++r.samples_in_sector[si];
    if (!prev_admitted || s.sectors[k] != s.sectors[k - 1]) ++r.visits[si];
    prev_admitted = true;
    if (k + 1 == n) break;
    const Sector to = s.sectors[k + 1];
    ++r.audited_steps;
    ++r.transitions[si][index(to) - 1];
    if (!legal(s.sectors[k], to)) {
      r.violations.push_back({s.steps[k], s.sectors[k], to});
    }
  }
  return r;
}

}  // namespace

std::int64_t SectorAuditReport::changes() const {
  std::int64_t total = 0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i != j) total += transitions[i][j];
    }
  }
  return total;
}

SectorAuditReport sector_cycle_audit(const Trajectory& traj, double log_gamma) {
  return audit(sector_series(traj), log_gamma);
}

std::optional<double> estimate_log_gamma0(const Trajectory& traj,
                                          int max_halvings) {
  const SectorSeries series = sector_series(traj);
  if (series.all_boundary) return std::nullopt;
  const double top = log_phi(traj.params.fixed_point(), traj.params);
  const auto grid = [&](int m) { return top - m * std::log(2.0); };
  const auto clean = [&](int m) { return audit(series, grid(m)).violations.empty(); };

  if (clean(0)) return grid(0);
  if (!clean(max_halvings)) return std::nullopt;
  int bad = 0, good = max_halvings;
  while (good - bad > 1) {
    const int mid = bad + (good - bad) / 2;
    (clean(mid) ? good : bad) = mid;
  }
  return grid(good);
}

namespace {

std::array<std::vector<Sojourn>, 3> sojourns_impl(
    std::span<const Sample> samples, double eps, const Parameters* params) {
  std::array<std::vector<Sojourn>, 3> out;
  std::array<bool, 3> inside{false, false, false};
  for (const auto& smp : samples) {
    for (std::size_t i = 0; i < 3; ++i) {
      const bool now = in_vertex_nbhd(smp.point, i, eps);
      if (now && !inside[i]) {
        Sojourn s;
        s.first_step = smp.step;
        s.last_step = smp.step;
        s.log_phi_at_entry = params ? log_phi(smp.point, *params)
                                    : std::numeric_limits<double>::quiet_NaN();
        out[i].push_back(s);
      } else if (now) {
        out[i].back().last_step = smp.step;
      }
      inside[i] = now;
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (inside[i]) out[i].back().open = true;
  }
  return out;
}

}  // namespace

std::array<std::vector<Sojourn>, 3> sojourn_stats(std::span<const Sample> samples,
                                                  double eps) {
  return sojourns_impl(samples, eps, nullptr);
}

std::array<std::vector<Sojourn>, 3> sojourn_stats(const Trajectory& traj,
                                                  double eps) {
  return sojourns_impl(traj.samples, eps, &traj.params);
}

std::optional<SimplexPoint> detect_convergence(std::span<const Sample> samples,
                                               double tol, std::size_t window) {
  if (window < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "detect_convergence: window must be >= 2");
  }
  if (samples.size() < window) return std::nullopt;
  std::array<double, 3> lo{1.0, 1.0, 1.0}, hi{0.0, 0.0, 0.0};
  for (const auto& smp : samples.last(window)) {
    const auto x = smp.point.linear();
    for (std::size_t i = 0; i < 3; ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  }
  double diameter = 0.0;
  for (std::size_t i = 0; i < 3; ++i) diameter = std::max(diameter, hi[i] - lo[i]);
  if (diameter < tol) return samples.back().point;
  return std::nullopt;
}

PersistenceReport persistence_report(std::span<const Sample> samples,
                                     double level) {
  PersistenceReport r;
  if (samples.empty()) return r;
  const std::size_t n = samples.size();
  r.window_samples = std::max<std::size_t>(1, (n + 9) / 10);
  const std::size_t window_start = n - r.window_samples;
  for (std::size_t i = 0; i < 3; ++i) {
    r.species[i].log_window_min = std::numeric_limits<double>::infinity();
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto& p = samples[k].point;
    for (std::size_t i = 0; i < 3; ++i) {
      auto& s = r.species[i];
      const double x = p[i];
      s.global_min = std::min(s.global_min, x);
      s.global_max = std::max(s.global_max, x);
      if (k >= window_start) {
        s.window_min = std::min(s.window_min, x);
        s.window_max = std::max(s.window_max, x);
        s.log_window_min = std::min(s.log_window_min, p.log_coord(i));
      }
    }
  }
  const auto all = [&](auto pred) {
    return std::all_of(r.species.begin(), r.species.end(), pred);
  };
  if (all([&](const SpeciesPersistence& s) { return s.window_min >= level; })) {
    r.hint = Persistence::kStrong;
  } else if (all([&](const SpeciesPersistence& s) { return s.window_max >= level; })) {
    r.hint = Persistence::kWeak;
  }
  return r;
}

std::vector<GridCell> omega_limit_estimate(std::span<const Sample> samples,
                                           std::int64_t burn_in, double grid) {
  if (!(grid > 0.0 && grid <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "grid width must be in (0,1]");
  }
  const int top = static_cast<int>(std::floor(1.0 / grid));
  std::vector<GridCell> cells;
  for (const auto& smp : samples) {
    if (smp.step < burn_in) continue;
    const int i = std::min(top, static_cast<int>(std::floor(smp.point[0] / grid)));
    const int j = std::min(top, static_cast<int>(std::floor(smp.point[1] / grid)));
    cells.push_back({i, j});
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

SimplexPoint cell_center(const GridCell& cell, double grid) {
  const double x1 = std::min(1.0, (cell.i + 0.5) * grid);
  const double x2 = std::min(1.0 - x1, (cell.j + 0.5) * grid);
  return SimplexPoint::from_linear({x1, x2, std::max(0.0, 1.0 - x1 - x2)});
}

bool cells_reach_vertex(std::span<const GridCell> cells, double grid,
                        std::size_t i, double radius) {
  const SimplexPoint v = vertex(i);
  return std::any_of(cells.begin(), cells.end(), [&](const GridCell& c) {
    return distance(cell_center(c, grid), v) <= radius;
  });
}

PhiDecay phi_decay(const Trajectory& traj) {
  PhiDecay d;
  if (traj.samples.empty()) return d;
  double prev = log_phi(traj.samples.front().point, traj.params);
  d.log_phi_start = prev;
  d.max_increase = kNegInf;
  for (std::size_t k = 1; k < traj.samples.size(); ++k) {
    const double cur = log_phi(traj.samples[k].point, traj.params);
    if (cur > kNegInf && prev > kNegInf) {
      d.max_increase = std::max(d.max_increase, cur - prev);
    }
    prev = cur;
  }
  d.log_phi_end = prev;
  const auto steps = traj.samples.back().step - traj.samples.front().step;
  d.mean_log_rate =
      steps > 0 ? (d.log_phi_end - d.log_phi_start) / static_cast<double>(steps)
                : 0.0;
  if (d.max_increase == kNegInf) d.max_increase = 0.0;
  return d;
}

}  // namespace simplexflow
