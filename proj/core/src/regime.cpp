#include "simplexflow/regime.hpp"

#include "simplexflow/errors.hpp"

namespace simplexflow {

RegimeReport classify_regime(const Parameters& params) {
  RegimeReport r;
  if (params.all_positive()) {
    r.regime = Regime::kNonErgodicCycling;
    r.persistence = Persistence::kWeak;
    r.theorem = "cesaro_vertices_limit_points";
  } else if (params.all_negative()) {
    r.regime = Regime::kInteriorConvergence;
    r.predicted_limit = params.fixed_point();
    r.persistence = Persistence::kStrong;
    r.theorem = "interior_fixed_point_attracts";
  } else {
    r.regime = Regime::kVertexConvergence;
    r.persistence = Persistence::kNone;
    r.theorem = "mixed_signs_vertex_limit";
  }
  return r;
}

RegimeReport classify_regime(double a, double b, double c) {
  if (a == 0.0 || b == 0.0 || c == 0.0) {
    throw Error(ErrorCode::kZeroParameter, "classify_regime: zero parameter");
  }
  return classify_regime(Parameters(a, b, c));
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kVertexConvergence: return "vertex_convergence";
    case Regime::kNonErgodicCycling: return "non_ergodic_cycling";
    case Regime::kInteriorConvergence: return "interior_convergence";
  }
  return "unknown";
}

std::string_view to_string(Persistence p) {
  switch (p) {
    case Persistence::kNone: return "none";
    case Persistence::kWeak: return "weak";
    case Persistence::kStrong: return "strong";
  }
  return "unknown";
}

}  // namespace simplexflow
