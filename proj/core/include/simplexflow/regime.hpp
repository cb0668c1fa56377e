#pragma once

#include <optional>
#include <string_view>

#include "simplexflow/diagnostics.hpp"
#include "simplexflow/parameters.hpp"
#include "simplexflow/simplex.hpp"

namespace simplexflow {

enum class Regime {
  /// Some pair of a, b, c has opposite signs: every orbit converges to a
  /// vertex; not even weakly persistent.
  kVertexConvergence,
  /// a, b, c > 0: phi decreases to 0, all vertices are limit points of every
  /// Cesàro order; weakly but not strongly persistent.
  kNonErgodicCycling,
  /// a, b, c < 0: interior orbits converge to x*; strongly persistent.
  kInteriorConvergence,
};

struct RegimeReport {
  Regime regime = Regime::kVertexConvergence;
  std::optional<SimplexPoint> predicted_limit;
  Persistence persistence = Persistence::kNone;
  /// Short name of the result the prediction rests on.
  std::string_view theorem;
};

/// A pure function of the sign pattern of (a, b, c).
RegimeReport classify_regime(const Parameters& params);
/// Throws kZeroParameter if any entry is zero.
RegimeReport classify_regime(double a, double b, double c);

std::string_view to_string(Regime r);
std::string_view to_string(Persistence p);

}  // namespace simplexflow
