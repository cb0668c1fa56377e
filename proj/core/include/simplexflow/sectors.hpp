#pragma once

#include <array>
#include <string>

#include "simplexflow/parameters.hpp"
#include "simplexflow/simplex.hpp"

namespace simplexflow {

/// The six closed sectors G1..G6 cut out by the orderings of the rescaled
/// coordinates r_i = x_i / lambda_i:
///
///   G1: r1 >= r2 >= r3    G2: r1 >= r3 >= r2    G3: r3 >= r1 >= r2
///   G4: r3 >= r2 >= r1    G5: r2 >= r3 >= r1    G6: r2 >= r1 >= r3
///
/// In the all-positive regime orbits near the boundary move G1 -> G2 -> ...
/// -> G6 -> G1.
enum class Sector : int { kG1 = 1, kG2, kG3, kG4, kG5, kG6 };

inline constexpr int kSectorCount = 6;
inline constexpr double kSectorTieTol = 8.0 * 2.220446049250313e-16;

inline int index(Sector s) noexcept { return static_cast<int>(s); }
Sector sector_from_index(int i);

/// Successor in the cycle G1 -> ... -> G6 -> G1.
Sector next(Sector s) noexcept;

/// First sector (in order G1..G6) whose defining chain holds with non-strict
/// inequalities. Log-domain points are compared through ln x_i - ln lambda_i.
/// Values within kSectorTieTol (relative) count as equal, so x* itself lands in
/// G1 despite rounding in x_i / lambda_i.
Sector sector(const SimplexPoint& p, const Parameters& params);

/// True if the rescaled coordinates satisfy the defining chain of `s`.
bool in_sector(const SimplexPoint& p, const Parameters& params, Sector s);

std::string to_string(Sector s);

}  // namespace simplexflow
