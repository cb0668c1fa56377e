#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

#include "json.hpp"
#include "simplexflow/cesaro.hpp"
#include "simplexflow/cli/cli.hpp"
#include "simplexflow/diagnostics.hpp"
#include "simplexflow/errors.hpp"
#include "simplexflow/lyapunov.hpp"
#include "simplexflow/ode_limit.hpp"
#include "simplexflow/regime.hpp"
#include "simplexflow/trajectory.hpp"
#include "sink.hpp"

namespace simplexflow::cli {

using nlohmann::json;

namespace {

DomainMode domain_mode(const std::string& s) {
  if (s == "on") return DomainMode::kLog;
  if (s == "auto") return DomainMode::kAuto;
  return DomainMode::kLinear;
}

bool wants(const RunConfig& cfg, const char* name) {
  for (const auto& o : cfg.observables) {
    if (o == name) return true;
  }
  return false;
}

json point_json(const SimplexPoint& p) { return {p[0], p[1], p[2]}; }

json log_domain_json(const Trajectory& t) {
  return t.log_domain_since ? json(*t.log_domain_since) : json(nullptr);
}

json header(const RunConfig& cfg) {
  return {{"config", json::parse(to_json_text(cfg))}};
}

// Rejects points that violate the simplex invariants before they are written.
void check_point(const SimplexPoint& p, std::int64_t step) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double v = p[i];
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kNumericFailure,
                  "invalid coordinate at step " + std::to_string(step));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kNumericFailure,
                "point off the simplex at step " + std::to_string(step));
  }
}

Trajectory simulate(const RunConfig& cfg, std::int64_t stride, bool region) {
  const Parameters params(cfg.a, cfg.b, cfg.c);
  IterateOptions opt;
  opt.steps = cfg.steps;
  opt.stride = stride;
  opt.observe = {.phi = true, .sector = true, .region = region};
  opt.mode = domain_mode(cfg.log_domain);
  return iterate(make_point(cfg.x0[0], cfg.x0[1], cfg.x0[2]), params,
                 cfg.speed.build(), opt);
}

// n = 0, 1, 2, 5, 10, 20, 50, ... up to `last`, plus `last` itself.
std::vector<std::int64_t> snapshot_steps(std::int64_t last) {
  std::vector<std::int64_t> out{0};
  for (std::int64_t decade = 1; decade <= last; decade *= 10) {
    for (std::int64_t m : {1, 2, 5}) {
      if (m * decade <= last) out.push_back(m * decade);
    }
  }
  if (out.back() != last) out.push_back(last);
  return out;
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, out, err, [&](std::ostream& os) {
    const bool region = wants(cfg, "region");
    const auto t = simulate(cfg, cfg.stride, region);
    for (const auto& s : t.samples) check_point(s.point, s.step);

    if (cfg.format == "csv") {
      os << "step,x1,x2,x3,phi,sector\n";
      for (std::size_t k = 0; k < t.samples.size(); ++k) {
        const auto& p = t.samples[k].point;
        const auto& o = t.observations[k];
        os << t.samples[k].step << ',' << format_number(p[0]) << ','
           << format_number(p[1]) << ',' << format_number(p[2]) << ','
           << format_number(o.phi()) << ',' << to_string(o.sector) << '\n';
      }
      return;
    }

    json h = header(cfg);
    h["log_domain_since"] = log_domain_json(t);
    os << "{\"header\":" << h.dump() << ",\"records\":[";
    for (std::size_t k = 0; k < t.samples.size(); ++k) {
      const auto& p = t.samples[k].point;
      const auto& o = t.observations[k];
      if (k) os << ',';
      os << "{\"step\":" << t.samples[k].step << ",\"x1\":" << format_number(p[0])
         << ",\"x2\":" << format_number(p[1]) << ",\"x3\":" << format_number(p[2])
         << ",\"phi\":" << format_number(o.phi()) << ",\"sector\":\""
         << to_string(o.sector) << '"';
      if (region) os << ",\"region\":\"" << o.region.to_string() << '"';
      os << '}';
    }
    os << "]}\n";
  });
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, out, err, [&](std::ostream& os) {
    // The sector audit and sojourns need every step.
    const auto t = simulate(cfg, 1, false);
    for (const auto& s : t.samples) check_point(s.point, s.step);
    const auto& params = t.params;

    json report = header(cfg);
    report["log_domain_since"] = log_domain_json(t);
    json doc = {{"header", report}};

    const auto reg = classify_regime(params);
    doc["regime"] = to_string(reg.regime);
    doc["predicted"] = {
        {"limit", reg.predicted_limit ? point_json(*reg.predicted_limit) : json(nullptr)},
        {"persistence", to_string(reg.persistence)},
        {"theorem", reg.theorem},
    };

    const auto lim = detect_convergence(t.samples, cfg.conv_tol,
                                        static_cast<std::size_t>(cfg.window));
    doc["limit"] = lim ? point_json(*lim) : json(nullptr);

    const auto d = phi_decay(t);
    doc["phi"] = {{"log_start", d.log_phi_start},
                  {"log_end", d.log_phi_end},
                  {"mean_log_rate", d.mean_log_rate},
                  {"max_increase", d.max_increase}};

    // Visits under the empirical gamma_0; raw entries when no gamma exists.
    const auto gamma = estimate_log_gamma0(t);
    const auto audit = sector_cycle_audit(t, gamma.value_or(log_phi(params.fixed_point(), params)));
    doc["sector_visits"] = audit.visits;
    doc["sector_audit"] = {{"log_gamma", gamma ? json(*gamma) : json(nullptr)},
                           {"degenerate", audit.degenerate},
                           {"changes", audit.changes()},
                           {"violations", audit.violations.size()},
                           {"samples_in_sector", audit.samples_in_sector}};

    json soj = json::object();
    const auto stats = sojourn_stats(t, cfg.eps);
    for (std::size_t i = 0; i < 3; ++i) {
      json list = json::array();
      for (const auto& s : stats[i]) {
        list.push_back({{"first", s.first_step}, {"last", s.last_step},
                        {"length", s.length()}, {"open", s.open}});
      }
      soj["e" + std::to_string(i + 1)] = list;
    }
    doc["sojourns"] = {{"eps", cfg.eps}, {"intervals", soj}};

    CesaroState ces(cfg.cesaro_order);
    json snaps = json::array();
    const auto at = snapshot_steps(cfg.steps);
    std::size_t next = 0;
    for (const auto& s : t.samples) {
      ces.push(s.point.to_linear());
      if (next < at.size() && s.step == at[next]) {
        snaps.push_back({{"n", s.step}, {"c", ces.values()}});
        ++next;
      }
    }
    doc["cesaro"] = snaps;

    const auto pr = persistence_report(t.samples);
    json species = json::array();
    for (const auto& s : pr.species) {
      species.push_back({{"global_min", s.global_min}, {"global_max", s.global_max},
                         {"window_min", s.window_min}, {"window_max", s.window_max},
                         {"log_window_min", s.log_window_min}});
    }
    doc["persistence"] = {{"hint", to_string(pr.hint)}, {"species", species}};

    const std::int64_t burn = cfg.burn_in >= 0 ? cfg.burn_in : cfg.steps / 10;
    json cells = json::array();
    for (const auto& c : omega_limit_estimate(t.samples, burn, cfg.grid)) {
      cells.push_back({c.i, c.j});
    }
    doc["omega"] = {{"burn_in", burn}, {"grid", cfg.grid}, {"cells", cells}};

    os << doc.dump() << '\n';
  });
}

int cmd_ode_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, out, err, [&](std::ostream& os) {
    const auto fit = convergence_order(make_point(cfg.x0[0], cfg.x0[1], cfg.x0[2]),
                                       Parameters(cfg.a, cfg.b, cfg.c),
                                       cfg.speed.build(), cfg.horizon, cfg.n_list,
                                       cfg.ref_h);
    json doc = {{"header", header(cfg)}};
    doc["n"] = fit.substeps;
    doc["errors"] = fit.errors;
    doc["slope"] = fit.degenerate ? json(nullptr) : json(fit.slope);
    doc["degenerate"] = fit.degenerate;
    doc["reference"] = {{"h", fit.reference_h},
                        {"self_error", fit.reference_self_error},
                        {"endpoint", point_json(fit.reference_endpoint)}};
    os << doc.dump() << '\n';
  });
}

}  // namespace simplexflow::cli
