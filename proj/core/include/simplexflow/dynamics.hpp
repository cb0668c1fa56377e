#pragma once

#include <array>

#include "simplexflow/parameters.hpp"
#include "simplexflow/simplex.hpp"
#include "simplexflow/speed.hpp"

namespace simplexflow {

// The prey-predator operator W_{f,a,b,c} on S^2:
//
//   x1' = x1 (1 + (a x1 x2 - b x3^2) f(x))
//   x2' = x2 (1 + (c x2 x3 - a x1^2) f(x))
//   x3' = x3 (1 + (b x3 x1 - c x2^2) f(x))
//
// The bracketed terms are the growth terms g_i; 1 + g_i f is the growth
// factor of species i. For |a|,|b|,|c| <= 1 and f <= 1 every factor is
// strictly positive on the simplex. When a factor approaches zero (t f close
// to 1 near the vertex that suppresses species i) it is evaluated through
// 1 - x_l = x_j + x_k to avoid cancellation.

/// (g1, g2, g3) at x (linear coordinates).
std::array<double, 3> growth_terms(const std::array<double, 3>& x,
                                   const Parameters& params);

/// 1 + g_i F for each species, F the speed value at x.
std::array<double, 3> growth_factors(const SimplexPoint& p,
                                     const Parameters& params, double speed);

/// log(1 + g_i F), accurate when a factor is tiny or the point has
/// coordinates far below the double range (log-domain points).
std::array<double, 3> log_growth_factors(const SimplexPoint& p,
                                         const Parameters& params,
                                         double speed);

/// x_i (1 + g_i f(x)) without renormalization. The three entries sum to 1 in
/// exact arithmetic.
std::array<double, 3> apply_operator(const SimplexPoint& p,
                                     const Parameters& params,
                                     const SpeedFunction& f);

/// One application of W, renormalized by compensated sum. Log-domain inputs
/// are forwarded to step_log. Zero coordinates stay exactly zero.
SimplexPoint step(const SimplexPoint& p, const Parameters& params,
                  const SpeedFunction& f);

/// ln x_i' = ln x_i + log(1 + g_i f(x)), renormalized by log-sum-exp.
/// Returns a log-domain point.
SimplexPoint step_log(const SimplexPoint& p, const Parameters& params,
                      const SpeedFunction& f);

/// y_i = x_i / lambda_i.
std::array<double, 3> ratios(const SimplexPoint& p, const Parameters& params);

/// The operator written in the rescaled coordinates y_i = x_i / lambda_i:
///   y1' = y1 (1 + (s_a y1 y2 - s_b y3^2) F k1),  k1 = l1^{1/3} l2^{4/3} l3^{4/3}
/// and cyclically, where s_a = sign(a) etc. and F = f(x) at the original point.
/// No renormalization.
std::array<double, 3> rescaled_step(const std::array<double, 3>& y,
                                    const Parameters& params, double speed);

/// The two-coordinate map W restricted to the face containing p, e.g. on
/// {x2 = 0}: x1' = x1 (1 - b x3^2 f), x3' = x3 (1 + b x1 x3 f). Vertices are
/// returned unchanged. Throws kNotOnFace for interior points.
SimplexPoint restrict_to_face(const SimplexPoint& p, const Parameters& params,
                              const SpeedFunction& f,
                              double zero_tol = kDefaultZeroTol);

/// Zakharevich's Volterra operator:
///   (x1^2 + 2 x1 x2, x2^2 + 2 x2 x3, x3^2 + 2 x1 x3).
SimplexPoint zakharevich_step(const SimplexPoint& p);

}  // namespace simplexflow
