#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

namespace simplexflow {

inline constexpr double kDefaultZeroTol = 1e-12;

enum class Representation { kLinear, kLog };

/// A point of the 2-simplex. Stored either as frequencies or as their
/// natural logarithms (-inf for an exact zero). Always normalized.
class SimplexPoint {
 public:
  SimplexPoint();  // barycenter

  /// Normalizes by the compensated sum. Inputs must be finite and >= 0 with
  /// a positive sum; no tolerance check (see make_point).
  static SimplexPoint from_linear(const std::array<double, 3>& x);
  /// Normalizes by log-sum-exp.
  static SimplexPoint from_logs(const std::array<double, 3>& log_x);

  Representation representation() const noexcept { return rep_; }
  bool is_log() const noexcept { return rep_ == Representation::kLog; }

  /// Frequency of species i (0-based). Exponentiates in log form, so
  /// coordinates below ~1e-308 read back as 0.
  double operator[](std::size_t i) const;
  double log_coord(std::size_t i) const;

  std::array<double, 3> linear() const;
  std::array<double, 3> logs() const;

  SimplexPoint to_linear() const;
  SimplexPoint to_log() const;

  /// Raw stored values (frequencies or logs depending on representation).
  const std::array<double, 3>& stored() const noexcept { return v_; }

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

 private:
  SimplexPoint(const std::array<double, 3>& v, Representation rep)
      : v_(v), rep_(rep) {}

  std::array<double, 3> v_;
  Representation rep_;
};

/// Validated constructor: coordinates >= 0 and sum within 1e-9 of 1.
SimplexPoint make_point(double x1, double x2, double x3);

/// e_{i+1} for species i in {0,1,2}.
SimplexPoint vertex(std::size_t i);

enum class RegionKind { kInterior, kFace, kVertex };

struct Region {
  RegionKind kind = RegionKind::kInterior;
  /// Species present: all three for interior, two for a face, one for a vertex.
  std::array<bool, 3> support{true, true, true};

  /// 0-based vertex index; only meaningful for kVertex.
  std::size_t vertex_index() const;
  /// 0-based index of the vanishing species; only meaningful for kFace.
  std::size_t missing_species() const;
  std::string to_string() const;

  friend bool operator==(const Region&, const Region&) = default;
};

Region classify_region(const SimplexPoint& p, double zero_tol = kDefaultZeroTol);

/// Max-norm distance.
double distance(const SimplexPoint& p, const SimplexPoint& q);

/// x_i >= 1 - eps.
bool in_vertex_nbhd(const SimplexPoint& p, std::size_t i, double eps);

bool is_interior(const SimplexPoint& p);

}  // namespace simplexflow
