#include "simplexflow/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "simplexflow/errors.hpp"
#include "simplexflow/summation.hpp"

namespace simplexflow {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kMakePointSumTol = 1e-9;

void check_index(std::size_t i) {
  if (i > 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "species index " + std::to_string(i) + " out of range");
  }
}

}  // namespace

SimplexPoint::SimplexPoint()
    : v_{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, rep_(Representation::kLinear) {}

SimplexPoint SimplexPoint::from_linear(const std::array<double, 3>& x) {
  for (double xi : x) {
    if (!std::isfinite(xi) || xi < 0.0) {
      throw Error(ErrorCode::kNegativeCoordinate,
                  "coordinate must be finite and non-negative");
    }
  }
  const double s = compensated_sum(x);
  if (!(s > 0.0)) {
    throw Error(ErrorCode::kSumOutOfTolerance, "coordinates sum to zero");
  }
  return SimplexPoint({x[0] / s, x[1] / s, x[2] / s}, Representation::kLinear);
}

SimplexPoint SimplexPoint::from_logs(const std::array<double, 3>& log_x) {
  for (double l : log_x) {
    if (std::isnan(l) || l == std::numeric_limits<double>::infinity()) {
      throw Error(ErrorCode::kInvalidArgument, "log coordinate must be < +inf");
    }
  }
  const double lse = log_sum_exp(log_x);
  if (lse == kNegInf) {
    throw Error(ErrorCode::kSumOutOfTolerance, "all log coordinates are -inf");
  }
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = log_x[i] == kNegInf ? kNegInf : log_x[i] - lse;
  }
  return SimplexPoint(out, Representation::kLog);
}

double SimplexPoint::operator[](std::size_t i) const {
  check_index(i);
  return rep_ == Representation::kLinear ? v_[i] : std::exp(v_[i]);
}

double SimplexPoint::log_coord(std::size_t i) const {
  check_index(i);
  return rep_ == Representation::kLog ? v_[i] : std::log(v_[i]);
}

std::array<double, 3> SimplexPoint::linear() const {
  if (rep_ == Representation::kLinear) return v_;
  return {std::exp(v_[0]), std::exp(v_[1]), std::exp(v_[2])};
}

std::array<double, 3> SimplexPoint::logs() const {
  if (rep_ == Representation::kLog) return v_;
  return {std::log(v_[0]), std::log(v_[1]), std::log(v_[2])};
}

SimplexPoint SimplexPoint::to_linear() const {
  if (rep_ == Representation::kLinear) return *this;
  return SimplexPoint(linear(), Representation::kLinear);
}

SimplexPoint SimplexPoint::to_log() const {
  if (rep_ == Representation::kLog) return *this;
  return SimplexPoint(logs(), Representation::kLog);
}

SimplexPoint make_point(double x1, double x2, double x3) {
  const std::array<double, 3> x{x1, x2, x3};
  for (double xi : x) {
    if (std::isnan(xi) || xi < 0.0) {
      throw Error(ErrorCode::kNegativeCoordinate,
                  "make_point: negative or NaN coordinate");
    }
  }
  const double s = compensated_sum(x);
  if (!std::isfinite(s) || std::abs(s - 1.0) > kMakePointSumTol) {
    std::ostringstream os;
    os << "make_point: coordinates sum to " << s << ", expected 1";
    throw Error(ErrorCode::kSumOutOfTolerance, os.str());
  }
  return SimplexPoint::from_linear(x);
}

SimplexPoint vertex(std::size_t i) {
  check_index(i);
  std::array<double, 3> x{0.0, 0.0, 0.0};
  x[i] = 1.0;
  return SimplexPoint::from_linear(x);
}

std::size_t Region::vertex_index() const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (support[i]) return i;
  }
  return 0;
}

std::size_t Region::missing_species() const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!support[i]) return i;
  }
  return 0;
}

std::string Region::to_string() const {
  switch (kind) {
    case RegionKind::kInterior:
      return "interior";
    case RegionKind::kVertex:
      return "vertex(" + std::to_string(vertex_index() + 1) + ")";
    case RegionKind::kFace: {
      std::string s = "face({";
      bool first = true;
      for (std::size_t i = 0; i < 3; ++i) {
        if (!support[i]) continue;
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
      }
      return s + "})";
    }
  }
  return "unknown";
}

Region classify_region(const SimplexPoint& p, double zero_tol) {
  const auto x = p.linear();
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i] >= 1.0 - 2.0 * zero_tol) {
      Region r{RegionKind::kVertex, {false, false, false}};
      r.support[i] = true;
      return r;
    }
  }
  Region r{RegionKind::kInterior, {true, true, true}};
  int zeros = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i] < zero_tol) {
      r.support[i] = false;
      ++zeros;
    }
  }
  if (zeros == 1) {
    r.kind = RegionKind::kFace;
  } else if (zeros >= 2) {
    // Two vanishing coordinates force the third to 1; only reachable for
    // large zero_tol, where the vertex test above has already matched.
    r.kind = RegionKind::kVertex;
  }
  return r;
}

double distance(const SimplexPoint& p, const SimplexPoint& q) {
  const auto x = p.linear();
  const auto y = q.linear();
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

bool in_vertex_nbhd(const SimplexPoint& p, std::size_t i, double eps) {
  return p[i] >= 1.0 - eps;
}

bool is_interior(const SimplexPoint& p) {
  const auto& v = p.stored();
  if (p.is_log()) {
    return std::all_of(v.begin(), v.end(), [](double l) { return l > kNegInf; });
  }
  return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
}

}  // namespace simplexflow
