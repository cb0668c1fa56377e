#include "simplexflow/dynamics.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>

#include "simplexflow/errors.hpp"
#include "simplexflow/summation.hpp"

namespace simplexflow {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Growth term of species i is  s x_j x_k - t x_l^2  with {j,k} = complement
// of l (j is always i itself).
struct SpeciesTerm {
  double s;
  std::size_t j, k;
  double t;
  std::size_t l;
};

std::array<SpeciesTerm, 3> species_terms(const Parameters& p) {
  return {{{p.a(), 0, 1, p.b(), 2},
           {p.c(), 1, 2, p.a(), 0},
           {p.b(), 2, 0, p.c(), 1}}};
}

// Factors this close to zero go through the cancellation-free form.
constexpr double kStableBranch = -0.5;

double factor(const SpeciesTerm& term, const std::array<double, 3>& x,
              double speed) {
  const double cross = x[term.j] * x[term.k];
  const double delta = speed * (term.s * cross - term.t * x[term.l] * x[term.l]);
  if (delta > kStableBranch) return 1.0 + delta;
  // delta <= -1/2 forces t f > 1/2 since |s x_j x_k| <= 1/4.
  const double tf = term.t * speed;
  return (1.0 - tf) + tf * (x[term.j] + x[term.k]) * (1.0 + x[term.l]) +
         term.s * speed * cross;
}

double log_factor(const SpeciesTerm& term, const std::array<double, 3>& x,
                  const std::array<double, 3>& logs, double speed) {
  const double cross = x[term.j] * x[term.k];
  const double delta = speed * (term.s * cross - term.t * x[term.l] * x[term.l]);
  if (delta > kStableBranch) return std::log1p(delta);
  const double tf = term.t * speed;
  const double log_base =
      log_add_exp(std::log1p(-tf), std::log(tf) +
                                       log_add_exp(logs[term.j], logs[term.k]) +
                                       std::log1p(x[term.l]));
  const double cross_log = std::log(std::abs(term.s) * speed) + logs[term.j] +
                           logs[term.k] - log_base;
  const double ratio = std::copysign(std::exp(cross_log), term.s);
  return log_base + std::log1p(ratio);
}

[[noreturn]] void throw_factor(std::size_t i, double value) {
  std::ostringstream os;
  os << "growth factor of species " << i + 1 << " is " << value
     << " (inputs corrupted?)";
  throw Error(ErrorCode::kNonPositiveFactor, os.str());
}

}  // namespace

std::array<double, 3> growth_terms(const std::array<double, 3>& x,
                                   const Parameters& params) {
  const double a = params.a(), b = params.b(), c = params.c();
  return {a * x[0] * x[1] - b * x[2] * x[2], c * x[1] * x[2] - a * x[0] * x[0],
          b * x[2] * x[0] - c * x[1] * x[1]};
}

std::array<double, 3> growth_factors(const SimplexPoint& p,
                                     const Parameters& params, double speed) {
  const auto x = p.linear();
  const auto terms = species_terms(params);
  return {factor(terms[0], x, speed), factor(terms[1], x, speed),
          factor(terms[2], x, speed)};
}

std::array<double, 3> log_growth_factors(const SimplexPoint& p,
                                         const Parameters& params,
                                         double speed) {
  const auto x = p.linear();
  const auto logs = p.logs();
  const auto terms = species_terms(params);
  return {log_factor(terms[0], x, logs, speed),
          log_factor(terms[1], x, logs, speed),
          log_factor(terms[2], x, logs, speed)};
}

std::array<double, 3> apply_operator(const SimplexPoint& p,
                                     const Parameters& params,
                                     const SpeedFunction& f) {
  const auto x = p.linear();
  const auto g = growth_factors(p, params, f(p));
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i] == 0.0) continue;
    if (!(g[i] > 0.0) || !std::isfinite(g[i])) throw_factor(i, g[i]);
    out[i] = x[i] * g[i];
  }
  return out;
}

SimplexPoint step(const SimplexPoint& p, const Parameters& params,
                  const SpeedFunction& f) {
  if (p.is_log()) return step_log(p, params, f);
  return SimplexPoint::from_linear(apply_operator(p, params, f));
}

SimplexPoint step_log(const SimplexPoint& p, const Parameters& params,
                      const SpeedFunction& f) {
  const SimplexPoint lp = p.to_log();
  const auto logs = lp.stored();
  const auto lg = log_growth_factors(lp, params, f(lp));
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (logs[i] == kNegInf) {
      out[i] = kNegInf;
      continue;
    }
    if (std::isnan(lg[i]) || lg[i] == kNegInf) throw_factor(i, std::exp(lg[i]));
    out[i] = logs[i] + lg[i];
  }
  return SimplexPoint::from_logs(out);
}

std::array<double, 3> ratios(const SimplexPoint& p, const Parameters& params) {
  const auto x = p.linear();
  const auto& l = params.lambdas();
  return {x[0] / l[0], x[1] / l[1], x[2] / l[2]};
}

std::array<double, 3> rescaled_step(const std::array<double, 3>& y,
                                    const Parameters& params, double speed) {
  const auto& l = params.lambdas();
  const auto kappa = [](double own, double u, double v) {
    const double uv = std::cbrt(u * v);
    return std::cbrt(own) * uv * uv * uv * uv;
  };
  const double k1 = kappa(l[0], l[1], l[2]);
  const double k2 = kappa(l[1], l[2], l[0]);
  const double k3 = kappa(l[2], l[0], l[1]);
  const double sa = std::copysign(1.0, params.a());
  const double sb = std::copysign(1.0, params.b());
  const double sc = std::copysign(1.0, params.c());
  return {y[0] * (1.0 + (sa * y[0] * y[1] - sb * y[2] * y[2]) * speed * k1),
          y[1] * (1.0 + (sc * y[1] * y[2] - sa * y[0] * y[0]) * speed * k2),
          y[2] * (1.0 + (sb * y[2] * y[0] - sc * y[1] * y[1]) * speed * k3)};
}

SimplexPoint restrict_to_face(const SimplexPoint& p, const Parameters& params,
                              const SpeedFunction& f, double zero_tol) {
  const Region region = classify_region(p, zero_tol);
  if (region.kind == RegionKind::kInterior) {
    throw Error(ErrorCode::kNotOnFace,
                "restrict_to_face: point is in the interior");
  }
  if (region.kind == RegionKind::kVertex) return p;

  const auto x = p.linear();
  const double F = f(p);
  std::array<double, 3> out{0.0, 0.0, 0.0};
  switch (region.missing_species()) {
    case 2:  // {1,2}
      out[0] = x[0] * (1.0 + params.a() * x[0] * x[1] * F);
      out[1] = x[1] * (1.0 - params.a() * x[0] * x[0] * F);
      break;
    case 0:  // {2,3}
      out[1] = x[1] * (1.0 + params.c() * x[1] * x[2] * F);
      out[2] = x[2] * (1.0 - params.c() * x[1] * x[1] * F);
      break;
    case 1:  // {1,3}
      out[0] = x[0] * (1.0 - params.b() * x[2] * x[2] * F);
      out[2] = x[2] * (1.0 + params.b() * x[0] * x[2] * F);
      break;
  }
  return SimplexPoint::from_linear(out);
}

SimplexPoint zakharevich_step(const SimplexPoint& p) {
  const auto x = p.linear();
  return SimplexPoint::from_linear({x[0] * (x[0] + 2.0 * x[1]),
                                    x[1] * (x[1] + 2.0 * x[2]),
                                    x[2] * (x[2] + 2.0 * x[0])});
}

}  // namespace simplexflow
