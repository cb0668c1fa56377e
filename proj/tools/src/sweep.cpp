#include <atomic>
#include <cmath>
#include <deque>
#include <random>
#include <sstream>
#include <thread>

#include "simplexflow/cli/cli.hpp"
#include "simplexflow/diagnostics.hpp"
#include "simplexflow/errors.hpp"
#include "simplexflow/lyapunov.hpp"
#include "simplexflow/regime.hpp"
#include "simplexflow/sectors.hpp"
#include "simplexflow/trajectory.hpp"
#include "sink.hpp"

namespace simplexflow::cli {

namespace {

struct Job {
  double a, b, c, f;
  std::array<double, 3> x0;
};

// Starts drawn from the seed with exponential spacings (uniform on S^2).
// Only raw mt19937_64 output is used, so the batch is the same everywhere.
std::vector<std::array<double, 3>> start_batch(const RunConfig& cfg) {
  if (cfg.starts == 0) return {cfg.x0};
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::array<double, 3>> out;
  for (std::int64_t k = 0; k < cfg.starts; ++k) {
    std::array<double, 3> e{};
    double sum = 0.0;
    for (auto& v : e) {
      const double u = static_cast<double>((rng() >> 11) + 1) * 0x1p-53;
      v = -std::log(u);
      sum += v;
    }
    for (auto& v : e) v /= sum;
    out.push_back(e);
  }
  return out;
}

std::vector<Job> expand(const RunConfig& cfg) {
  auto or_single = [](const std::vector<double>& v, double d) {
    return v.empty() ? std::vector<double>{d} : v;
  };
  const auto as = or_single(cfg.a_list, cfg.a);
  const auto bs = or_single(cfg.b_list, cfg.b);
  const auto cs = or_single(cfg.c_list, cfg.c);
  const auto fs = or_single(cfg.f_list, cfg.speed.coefficients[0]);
  const auto x0s = start_batch(cfg);
  std::vector<Job> jobs;
  for (double a : as)
    for (double b : bs)
      for (double c : cs)
        for (double f : fs)
          for (const auto& x0 : x0s) jobs.push_back({a, b, c, f, x0});
  return jobs;
}

std::string run_row(const RunConfig& cfg, std::size_t row_index, const Job& job) {
  std::ostringstream row;
  row << row_index << ',' << format_number(job.a) << ',' << format_number(job.b) << ','
      << format_number(job.c) << ',' << format_number(job.f);
  for (double v : job.x0) row << ',' << format_number(v);
  try {
    const Parameters params(job.a, job.b, job.c);
    const DomainMode mode = cfg.log_domain == "on"    ? DomainMode::kLog
                            : cfg.log_domain == "auto" ? DomainMode::kAuto
                                                       : DomainMode::kLinear;
    Orbit orbit(SimplexPoint::from_linear(job.x0), params,
                SpeedFunction::constant(job.f), mode);
    const auto window = static_cast<std::size_t>(cfg.window);
    std::deque<Sample> tail;
    std::array<std::int64_t, 6> visits{};
    Sector last = sector(orbit.point(), params);
    ++visits[index(last) - 1];
    tail.push_back({0, orbit.point()});
    for (std::int64_t n = 1; n <= cfg.steps; ++n) {
      const auto& p = orbit.advance();
      const Sector s = sector(p, params);
      if (s != last) ++visits[index(s) - 1];
      last = s;
      tail.push_back({n, p});
      if (tail.size() > window) tail.pop_front();
    }
    const std::vector<Sample> tv(tail.begin(), tail.end());
    const auto lim = detect_convergence(tv, cfg.conv_tol, window);

    row << ',' << to_string(classify_regime(params).regime);
    for (std::size_t i = 0; i < 3; ++i) {
      row << ',' << (lim ? format_number((*lim)[i]) : std::string("none"));
    }
    row << ',' << format_number(std::exp(log_phi(orbit.point(), params)));
    for (auto v : visits) row << ',' << v;
    row << ",ok";
  } catch (const Error& e) {
    row << ",,,,,";
    for (int i = 0; i < 6; ++i) row << ',';
    row << ",error:" << to_string(e.code());
  }
  return row.str();
}

}  // namespace

std::string sweep_csv(const RunConfig& cfg, int threads) {
  const auto jobs = expand(cfg);
  std::vector<std::string> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      rows[k] = run_row(cfg, k, jobs[k]);
    }
  };
  {
    std::vector<std::jthread> pool;
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  std::string out =
      "index,a,b,c,f,x1_0,x2_0,x3_0,regime,limit_x1,limit_x2,limit_x3,phi_final,"
      "visits_G1,visits_G2,visits_G3,visits_G4,visits_G5,visits_G6,status\n";
  for (const auto& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(cfg, out, err, [&](std::ostream& os) {
    os << sweep_csv(cfg, effective_threads(cfg.threads));
  });
}

}  // namespace simplexflow::cli
