#pragma once

#include "simplexflow/parameters.hpp"
#include "simplexflow/simplex.hpp"
#include "simplexflow/speed.hpp"

namespace simplexflow {

/// ln phi = sum lambda_i ln x_i; -inf on the boundary.
double log_phi(const SimplexPoint& p, const Parameters& params);

/// phi(x) = x1^l1 x2^l2 x3^l3. Zero exactly on the boundary, maximal at x*.
/// Underflows to 0 far from x*; use log_phi there.
double lyapunov_phi(const SimplexPoint& p, const Parameters& params);

/// ln psi = sum lambda_i ln(1 + g_i f(x)), so that
/// phi(W(x)) = phi(x) psi(x).
double log_psi(const SimplexPoint& p, const Parameters& params,
               const SpeedFunction& f);
double psi(const SimplexPoint& p, const Parameters& params,
           const SpeedFunction& f);

/// F = (u1 x1 - u2 x2)^2 + (u1 x1 - u3 x3)^2 + (u2 x2 - u3 x3)^2 with
/// u1 = |a^2 b|^{1/3}, u2 = |c^2 a|^{1/3}, u3 = |b^2 c|^{1/3}.
/// Non-negative; zero exactly on the ray through x*.
double quad_form_F(const SimplexPoint& p, const Parameters& params);

}  // namespace simplexflow
