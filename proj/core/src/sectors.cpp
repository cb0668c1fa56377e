#include "simplexflow/sectors.hpp"

#include <algorithm>
#include <cmath>

#include "simplexflow/errors.hpp"

namespace simplexflow {

namespace {

// Order (first >= second >= third) of 0-based species for each sector.
constexpr std::array<std::array<int, 3>, 6> kChains{{{0, 1, 2},
                                                      {0, 2, 1},
                                                      {2, 0, 1},
                                                      {2, 1, 0},
                                                      {1, 2, 0},
                                                      {1, 0, 2}}};

std::array<double, 3> keys(const SimplexPoint& p, const Parameters& params) {
  const auto& l = params.lambdas();
  if (p.is_log()) {
    const auto& v = p.stored();
    return {v[0] - std::log(l[0]), v[1] - std::log(l[1]), v[2] - std::log(l[2])};
  }
  const auto& x = p.stored();
  return {x[0] / l[0], x[1] / l[1], x[2] / l[2]};
}

bool ge(double u, double v) {
  return u >= v - kSectorTieTol * std::max(std::abs(u), std::abs(v));
}

bool chain_holds(const std::array<double, 3>& r, const std::array<int, 3>& c) {
  return ge(r[c[0]], r[c[1]]) && ge(r[c[1]], r[c[2]]);
}

}  // namespace

Sector sector_from_index(int i) {
  if (i < 1 || i > kSectorCount) {
    throw Error(ErrorCode::kInvalidArgument,
                "sector index " + std::to_string(i) + " outside 1..6");
  }
  return static_cast<Sector>(i);
}

Sector next(Sector s) noexcept {
  return static_cast<Sector>(index(s) % kSectorCount + 1);
}

Sector sector(const SimplexPoint& p, const Parameters& params) {
  const auto r = keys(p, params);
  for (int i = 0; i < kSectorCount; ++i) {
    if (chain_holds(r, kChains[i])) return static_cast<Sector>(i + 1);
  }
  // The six chains cover every total preorder of three reals.
  throw Error(ErrorCode::kNumericFailure, "sector: NaN coordinate");
}

bool in_sector(const SimplexPoint& p, const Parameters& params, Sector s) {
  return chain_holds(keys(p, params), kChains[index(s) - 1]);
}

std::string to_string(Sector s) { return "G" + std::to_string(index(s)); }

}  // namespace simplexflow
