// Acceptance suite: one [PASS]/[FAIL] line per criterion.
//
//   simplexflow_acceptance               run all criteria
//   simplexflow_acceptance --criterion N run one (exit status reflects it)

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "simplexflow/cesaro.hpp"
#include "simplexflow/cli/cli.hpp"
#include "simplexflow/diagnostics.hpp"
#include "simplexflow/dynamics.hpp"
#include "simplexflow/lyapunov.hpp"
#include "simplexflow/ode_limit.hpp"
#include "simplexflow/sectors.hpp"
#include "simplexflow/summation.hpp"
#include "simplexflow/trajectory.hpp"

namespace sf = simplexflow;
using sf::testing::Rational;
using sf::testing::RationalPoint;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
};

void Outcome::check(bool ok, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  if (!detail.empty()) detail += "; ";
  detail += buf;
  if (!ok) {
    detail += " [x]";
    pass = false;
  }
}

std::mt19937_64 rng_for(int criterion) { return std::mt19937_64(0x5eed0000u + criterion); }

Rational random_rational(std::mt19937_64& rng, int lo, int hi, int den) {
  return Rational(std::uniform_int_distribution<int>(lo, hi)(rng), den);
}

RationalPoint random_rational_point(std::mt19937_64& rng) {
  const Rational u = random_rational(rng, 1, 1000, 1), v = random_rational(rng, 0, 1000, 1),
                 w = random_rational(rng, 0, 1000, 1);
  const Rational s = u + v + w;
  return {u / s, v / s, w / s};
}

sf::Parameters random_params(std::mt19937_64& rng, int sign) {
  return sf::Parameters(sf::testing::random_param(rng, sign),
                        sf::testing::random_param(rng, sign),
                        sf::testing::random_param(rng, sign));
}

std::size_t argmax(const sf::SimplexPoint& p) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (p[i] > p[best]) best = i;
  }
  return best;
}

// ---------------------------------------------------------------------------

Outcome algebraic_preservation() {
  Outcome out;
  auto rng = rng_for(1);
  int exact = 0;
  double oracle_gap = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto x = random_rational_point(rng);
    auto signed_param = [&] {
      const Rational p = random_rational(rng, 1, 97, 97);
      return std::uniform_int_distribution<int>(0, 1)(rng) ? p : Rational(-p);
    };
    const Rational a = signed_param(), b = signed_param(), c = signed_param();
    const Rational f = random_rational(rng, 1, 97, 97);
    const auto y = sf::testing::exact_step(x, a, b, c, f);
    exact += (y[0] + y[1] + y[2] == 1);

    const auto raw = sf::apply_operator(
        sf::SimplexPoint::from_linear(sf::testing::to_double(x)),
        sf::Parameters(static_cast<double>(a), static_cast<double>(b), static_cast<double>(c)),
        sf::SpeedFunction::constant(static_cast<double>(f)));
    const auto yd = sf::testing::to_double(y);
    for (std::size_t i = 0; i < 3; ++i) oracle_gap = std::max(oracle_gap, std::abs(raw[i] - yd[i]));
  }
  out.check(exact == 100, "rational sum == 1 in %d/100 cases", exact);
  out.check(oracle_gap <= 1e-15, "library vs rational oracle max gap %.3g", oracle_gap);

  double drift = 0.0;
  auto p = sf::testing::random_interior(rng);
  auto params = random_params(rng, 1);
  auto speed = sf::SpeedFunction::constant(1.0);
  for (int k = 0; k < 100000; ++k) {
    if (k % 1000 == 0) {
      params = random_params(rng, k % 2000 ? -1 : 1);
      if (k % 3000 == 0) params = sf::Parameters(params.a(), -params.b(), params.c());
      speed = sf::SpeedFunction::constant(sf::testing::uniform(rng, 0.01, 1.0));
      p = sf::testing::random_interior(rng);
    }
    p = sf::step(p, params, speed);
    drift = std::max(drift, std::abs(p[0] + p[1] + p[2] - 1.0));
  }
  out.check(drift <= 1e-15, "float path max |sum-1| over 1e5 steps %.3g", drift);
  return out;
}

Outcome fixed_points() {
  Outcome out;
  auto rng = rng_for(2);
  int vertex_ok = 0;
  double star_gap = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto params = random_params(rng, k % 2 ? 1 : -1);
    const auto speed = sf::SpeedFunction::constant(sf::testing::uniform(rng, 0.01, 1.0));
    bool all = true;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto e = sf::vertex(i);
      const auto w = sf::step(e, params, speed);
      all = all && w[0] == e[0] && w[1] == e[1] && w[2] == e[2];
    }
    vertex_ok += all;
    const auto& xs = params.fixed_point();
    star_gap = std::max(star_gap, sf::distance(sf::step(xs, params, speed), xs));
  }
  out.check(vertex_ok == 100, "W(e_i) == e_i exactly for %d/100 triples", vertex_ok);
  out.check(star_gap <= 1e-14, "max |W(x*) - x*| %.3g", star_gap);
  return out;
}

Outcome lyapunov_monotone() {
  Outcome out;
  auto rng = rng_for(3);
  double worst = -1.0, star = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto params = random_params(rng, 1);
    const auto speed = sf::SpeedFunction::constant(sf::testing::uniform(rng, 1e-3, 1.0));
    for (int k = 0; k < 100000; ++k) {
      worst = std::max(worst, sf::psi(sf::testing::random_interior(rng), params, speed) - 1.0);
    }
    star = std::max(star, std::abs(sf::psi(params.fixed_point(), params, speed) - 1.0));
  }
  out.check(worst <= 1e-15, "max psi - 1 over 2e6 points %.3g", worst);
  out.check(star <= 1e-14, "max |psi(x*) - 1| %.3g", star);
  return out;
}

Outcome lyapunov_antimonotone() {
  Outcome out;
  auto rng = rng_for(4);
  double worst = 1.0;
  int strict = 0, tested = 0;
  double weakest = INFINITY;
  for (int t = 0; t < 20; ++t) {
    const auto params = random_params(rng, -1);
    const auto& l = params.lambdas();
    double min_ratio = INFINITY;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j) min_ratio = std::min(min_ratio, l[i] / l[j]);
      }
    }
    const double cap = std::min(1.0, 1.25 * min_ratio);
    const auto speed = sf::SpeedFunction::constant(sf::testing::uniform(rng, 1e-3, 1.0) * cap);
    for (int k = 0; k < 5000; ++k) {
      const auto p = sf::testing::random_interior(rng);
      const double v = sf::psi(p, params, speed);
      worst = std::min(worst, v - 1.0);
      if (tested < 1000 && sf::quad_form_F(p, params) >= 1e-3) {
        ++tested;
        strict += v > 1.0 + 1e-12;
        weakest = std::min(weakest, v - 1.0);
      }
    }
  }
  out.check(worst >= -1e-15, "min psi - 1 over 1e5 points %.3g", worst);
  out.check(tested == 1000 && strict == 1000,
            "psi > 1 + 1e-12 at %d/%d points with F >= 1e-3 (smallest excess %.3g)", strict,
            tested, weakest);
  return out;
}

Outcome vertex_convergence() {
  Outcome out;
  auto rng = rng_for(5);
  constexpr std::size_t kWindow = 100;
  for (const auto& params : {sf::Parameters(1, -1, 1), sf::Parameters(-1, 1, 1),
                             sf::Parameters(1, 1, -1)}) {
    const auto speed = sf::SpeedFunction::constant(0.5);
    int converged = 0;
    std::array<int, 3> vertex_count{};
    double widest = 0.0;
    for (int s = 0; s < 100; ++s) {
      sf::Orbit orbit(sf::testing::random_interior(rng), params, speed, sf::DomainMode::kAuto);
      std::deque<sf::Sample> tail{{0, orbit.point()}};
      for (std::int64_t n = 1; n <= 100000; ++n) {
        tail.push_back({n, orbit.advance()});
        if (tail.size() > kWindow) tail.pop_front();
      }
      const std::vector<sf::Sample> window(tail.begin(), tail.end());
      const auto lim = sf::detect_convergence(window, 1e-10, kWindow);
      double diam = 0.0;
      for (const auto& a : window) diam = std::max(diam, sf::distance(a.point, window.back().point));
      widest = std::max(widest, diam);
      converged += lim.has_value();
      ++vertex_count[argmax(orbit.point())];
    }
    const int distinct = (vertex_count[0] > 0) + (vertex_count[1] > 0) + (vertex_count[2] > 0);
    out.check(converged == 100 && distinct == 1,
              "(%g,%g,%g): %d/100 detected (largest final window diameter %.3g), "
              "nearest vertex counts e1/e2/e3 = %d/%d/%d",
              params.a(), params.b(), params.c(), converged, widest, vertex_count[0],
              vertex_count[1], vertex_count[2]);
  }
  return out;
}

Outcome interior_convergence() {
  Outcome out;
  auto rng = rng_for(6);
  struct Case {
    sf::Parameters params;
    double f;
    std::array<double, 3> limit;
  };
  for (const auto& c : {Case{sf::Parameters(-1, -1, -1), 0.5, {1.0 / 3, 1.0 / 3, 1.0 / 3}},
                        Case{sf::Parameters(-1, -1, -0.125), 0.3, {1.0 / 7, 4.0 / 7, 2.0 / 7}}}) {
    const auto speed = sf::SpeedFunction::constant(c.f);
    const auto target = sf::make_point(c.limit[0], c.limit[1], c.limit[2]);
    double worst = 0.0;
    std::int64_t longest = 0;
    for (int s = 0; s < 20; ++s) {
      sf::Orbit orbit(sf::testing::random_interior(rng), c.params, speed);
      auto prev = orbit.point();
      std::int64_t n = 0;
      // Stop once a step moves less than 1e-16 (settled) or at 1e6 steps.
      while (n < 1000000) {
        const auto& p = orbit.advance();
        ++n;
        if (sf::distance(p, prev) < 1e-16 && sf::distance(p, target) < 1e-6) break;
        prev = p;
      }
      longest = std::max(longest, n);
      worst = std::max(worst, sf::distance(orbit.point(), target));
    }
    out.check(worst <= 1e-8, "(%g,%g,%g) f=%g: max distance to limit %.3g (<= %lld steps)",
              c.params.a(), c.params.b(), c.params.c(), c.f, worst,
              static_cast<long long>(longest));
  }
  return out;
}

Outcome non_ergodicity() {
  Outcome out;
  const sf::Parameters params(1, 1, 1);
  const auto t = sf::iterate(sf::make_point(0.5, 0.3, 0.2), params, sf::SpeedFunction::constant(1),
                             {.steps = 1000000, .observe = {.phi = true, .sector = true},
                              .mode = sf::DomainMode::kLog});

  const auto gamma = sf::estimate_log_gamma0(t);
  const auto audit = sf::sector_cycle_audit(t, gamma.value_or(0.0));
  std::int64_t fewest = audit.visits[0];
  for (auto v : audit.visits) fewest = std::min(fewest, v);
  out.check(gamma.has_value() && audit.violations.empty() && fewest >= 10,
            "(a) sector visits G1..G6 = %lld/%lld/%lld/%lld/%lld/%lld, %zu illegal",
            static_cast<long long>(audit.visits[0]), static_cast<long long>(audit.visits[1]),
            static_cast<long long>(audit.visits[2]), static_cast<long long>(audit.visits[3]),
            static_cast<long long>(audit.visits[4]), static_cast<long long>(audit.visits[5]),
            audit.violations.size());

  const auto soj = sf::sojourn_stats(t, 0.05);
  out.check(soj[0].size() >= 3 && soj[1].size() >= 3 && soj[2].size() >= 3,
            "(b) entries into N_{i,0.05} = %zu/%zu/%zu", soj[0].size(), soj[1].size(),
            soj[2].size());

  // (c) closest approach of c_1, c_2 to each vertex by n = 1e4 and n = 1e6.
  sf::CesaroState ces(2);
  std::array<std::array<double, 3>, 2> early{}, late{};
  for (auto& r : late) r.fill(INFINITY);
  for (const auto& s : t.samples) {
    ces.push(s.point.to_linear());
    for (int k = 1; k <= 2; ++k) {
      const auto& c = ces.value(k);
      for (std::size_t i = 0; i < 3; ++i) {
        double d = 0.0;
        for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(c[j] - (i == j)));
        late[k - 1][i] = std::min(late[k - 1][i], d);
      }
    }
    if (s.step == 10000) early = late;
  }
  bool improved = true;
  std::string dists;
  for (int k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      improved = improved && late[k][i] < early[k][i];
      char buf[64];
      std::snprintf(buf, sizeof buf, "%sk%d e%zu %.3g->%.3g", dists.empty() ? "" : ", ", k + 1,
                    i + 1, early[k][i], late[k][i]);
      dists += buf;
    }
  }
  out.check(improved, "(c) min dist to vertex at 1e4 -> 1e6: %s", dists.c_str());

  const auto decay = sf::phi_decay(t);
  out.check(decay.max_increase <= 0.0, "(d) largest one-step change of ln phi %.3g",
            decay.max_increase);
  return out;
}

Outcome cesaro_equivalence() {
  Outcome out;
  auto rng = rng_for(8);
  constexpr std::int64_t kN = 10000;
  std::vector<std::array<double, 3>> xs;
  for (std::int64_t i = 0; i <= kN; ++i) xs.push_back(sf::testing::random_interior(rng).linear());

  double gap = 0.0;
  sf::CesaroState ces(3);
  for (std::int64_t n = 0; n <= kN; ++n) {
    ces.push(sf::SimplexPoint::from_linear(xs[n]));
    if (n != 10 && n != 100 && n != 1000 && n != kN) continue;
    for (int k = 0; k <= 3; ++k) {
      const auto a = sf::cesaro_coefficients(k, n);
      for (std::size_t j = 0; j < 3; ++j) {
        sf::CompensatedSum s;
        for (std::int64_t i = 0; i <= n; ++i) s.add(a[i] * xs[i][j]);
        gap = std::max(gap, std::abs(s.value() - ces.value(k)[j]));
      }
    }
  }
  out.check(gap <= 1e-12, "streaming vs coefficient sum, k<=3, n<=1e4: %.3g", gap);

  double oracle_gap = 0.0;
  for (int k = 0; k <= 3; ++k) {
    for (int n : {0, 1, 5, 17, 30}) {
      const auto want = sf::testing::recursive_coefficients(k, n);
      const auto got = sf::cesaro_coefficients(k, n);
      for (int i = 0; i <= n; ++i) {
        oracle_gap = std::max(oracle_gap, std::abs(got[i] - static_cast<double>(want[i])));
      }
    }
  }
  out.check(oracle_gap <= 1e-15, "coefficients vs rational recursion %.3g", oracle_gap);

  double row_gap = 0.0, most_negative = 0.0;
  for (int k = 0; k <= 3; ++k) {
    for (std::int64_t n : {100, 1000, 10000}) {
      const auto a = sf::cesaro_coefficients(k, n);
      for (double v : a) most_negative = std::min(most_negative, v);
      row_gap = std::max(row_gap, std::abs(sf::compensated_sum(a) - 1.0));
    }
  }
  out.check(most_negative >= 0.0 && row_gap <= 1e-12, "rows: min %.3g, max |sum-1| %.3g",
            most_negative, row_gap);

  for (int k = 0; k <= 2; ++k) {
    const double t2 = sf::tail_mass(k, 100, 0.1), t3 = sf::tail_mass(k, 1000, 0.1),
                 t4 = sf::tail_mass(k, 10000, 0.1);
    out.check(t2 <= t3 && t3 <= t4, "tail_mass k=%d n=1e2,1e3,1e4: %.9f, %.9f, %.9f", k, t2, t3,
              t4);
  }
  return out;
}

Outcome euler_order() {
  Outcome out;
  const auto fit = sf::convergence_order(sf::make_point(0.5, 0.3, 0.2), sf::Parameters(1, 1, 1),
                                         sf::SpeedFunction::constant(1), 5,
                                         {100, 1000, 10000, 100000});
  out.check(!fit.degenerate && fit.slope >= 0.85 && fit.slope <= 1.15,
            "slope %.4f (errors %.3g %.3g %.3g %.3g)", fit.slope, fit.errors[0], fit.errors[1],
            fit.errors[2], fit.errors[3]);
  out.check(fit.reference_self_error <= 1e-10, "reference self-error %.3g",
            fit.reference_self_error);
  return out;
}

Outcome derivative_sign() {
  Outcome out;
  auto rng = rng_for(10);
  const auto speed = sf::SpeedFunction::constant(1);
  int negative = 0, total = 0;
  double fd_gap = 0.0;
  for (int t = 0; t < 10; ++t) {
    const auto params = random_params(rng, 1);
    const auto& lam = params.lambdas();
    auto phi_at = [&](const std::array<double, 3>& x) {
      return std::pow(x[0], lam[0]) * std::pow(x[1], lam[1]) * std::pow(x[2], lam[2]);
    };
    for (int k = 0; k < 10000; ++k) {
      const auto p = sf::testing::random_interior(rng);
      if (p == params.fixed_point()) continue;
      ++total;
      negative += sf::lyapunov_derivative(p, params, speed) < 0.0;
      const auto g = sf::grad_phi(p, params);
      for (std::size_t i = 0; i < 3; ++i) {
        // Step proportional to x_i balances truncation against rounding.
        const double h = 1e-5 * p[i];
        auto up = p.linear(), dn = p.linear();
        up[i] += h;
        dn[i] -= h;
        const double fd = (phi_at(up) - phi_at(dn)) / (up[i] - dn[i]);
        fd_gap = std::max(fd_gap, std::abs(fd - g[i]) / std::abs(g[i]));
      }
    }
  }
  out.check(negative == total, "<grad phi, v> < 0 at %d/%d points", negative, total);
  out.check(fd_gap <= 1e-6, "max relative gradient vs central difference %.3g", fd_gap);
  return out;
}

Outcome zakharevich() {
  Outcome out;
  auto rng = rng_for(11);
  int exact = 0;
  double gap = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto x = random_rational_point(rng);
    const auto y = sf::testing::exact_zakharevich(x);
    exact += (y[0] + y[1] + y[2] == 1);
    const auto z = sf::zakharevich_step(sf::SimplexPoint::from_linear(sf::testing::to_double(x)));
    const auto yd = sf::testing::to_double(y);
    for (std::size_t i = 0; i < 3; ++i) gap = std::max(gap, std::abs(z[i] - yd[i]));
  }
  out.check(exact == 100 && gap <= 1e-15, "rational sum == 1 in %d/100, library gap %.3g", exact,
            gap);

  const auto samples = sf::iterate_zakharevich(sf::make_point(0.4, 0.35, 0.25), 100000);
  std::array<std::int64_t, 3> first{-1, -1, -1};
  for (const auto& s : samples) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (first[i] < 0 && sf::in_vertex_nbhd(s.point, i, 0.05)) first[i] = s.step;
    }
  }
  out.check(first[0] >= 0 && first[1] >= 0 && first[2] >= 0,
            "first entry into N_{i,0.05}: e1 %lld, e2 %lld, e3 %lld",
            static_cast<long long>(first[0]), static_cast<long long>(first[1]),
            static_cast<long long>(first[2]));
  return out;
}

Outcome determinism() {
  Outcome out;
  sf::cli::RunConfig cfg;
  cfg.command = "sweep";
  cfg.a_list = cfg.b_list = cfg.c_list = {-1.0, 1.0};
  cfg.starts = 4;
  cfg.seed = 12;
  cfg.steps = 10000;
  sf::cli::validate(cfg);
  const auto one = sf::cli::sweep_csv(cfg, 1);
  const auto again = sf::cli::sweep_csv(cfg, 1);
  const auto eight = sf::cli::sweep_csv(cfg, 8);
  const auto rows = std::count(one.begin(), one.end(), '\n') - 1;
  out.check(rows == 32, "%ld rows", static_cast<long>(rows));
  out.check(one == again, "repeat run byte-identical");
  out.check(one == eight, "1 vs 8 threads byte-identical");
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "algebraic simplex preservation", 10, algebraic_preservation},
      {2, "fixed points", 1, fixed_points},
      {3, "Lyapunov monotonicity (positive parameters)", 30, lyapunov_monotone},
      {4, "Lyapunov anti-monotonicity (negative parameters)", 30, lyapunov_antimonotone},
      {5, "vertex convergence (mixed signs)", 60, vertex_convergence},
      {6, "interior convergence (negative parameters)", 120, interior_convergence},
      {7, "non-ergodic cycling (positive parameters)", 180, non_ergodicity},
      {8, "Cesaro oracle equivalence", 30, cesaro_equivalence},
      {9, "Euler order", 120, euler_order},
      {10, "Lyapunov derivative sign", 30, derivative_sign},
      {11, "Zakharevich reference", 10, zakharevich},
      {12, "sweep determinism", 60, determinism},
  };
  return all;
}

bool run_one(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.check(false, "exception: %s", e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(secs <= c.budget_seconds, "%.2fs of %.0fs budget", secs, c.budget_seconds);
  std::printf("[%s] criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
              o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simplexflow acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  for (const auto& c : criteria()) {
    if (only == 0 || only == c.id) ok = run_one(c) && ok;
  }
  return ok ? 0 : 1;
}
