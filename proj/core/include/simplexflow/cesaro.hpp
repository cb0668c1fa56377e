#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "simplexflow/simplex.hpp"

namespace simplexflow {

inline constexpr int kMaxCesaroOrder = 32;
/// Largest n accepted by the coefficient utilities.
inline constexpr std::int64_t kMaxCoefficientN = 100000;

using Triple = std::array<double, 3>;

/// Streaming k-th order Cesàro means of an orbit, all orders 0..K at once:
///   c_0^(n) = x^(n),  c_k^(n) = (n c_k^(n-1) + c_{k-1}^(n)) / (n+1).
/// Pushes must follow the orbit order.
class CesaroState {
 public:
  /// Throws kOrderOverflow if max_order > kMaxCesaroOrder.
  explicit CesaroState(int max_order);

  void push(const SimplexPoint& x);

  int max_order() const noexcept { return max_order_; }
  /// Index n of the last pushed iterate; -1 when empty.
  std::int64_t step() const noexcept { return n_; }
  bool empty() const noexcept { return n_ < 0; }

  const Triple& value(int k) const;
  const std::vector<Triple>& values() const noexcept { return values_; }

 private:
  int max_order_;
  std::int64_t n_ = -1;
  std::vector<Triple> values_;
};

/// a_{i,k,n} for i = 0..n, with c_k^(n) = sum_i a_{i,k,n} x^(i).
///
/// For k >= 1, a_{i,k,n} = h_{k-1}(1/(i+1), ..., 1/(n+1)) / (n+1) where h_m is
/// the complete homogeneous symmetric polynomial; the suffix values are built
/// from i = n downward in O(k n).
std::vector<double> cesaro_coefficients(int k, std::int64_t n);

/// sum_{i = floor(eps n)}^{n} a_{i,k,n}.
double tail_mass(int k, std::int64_t n, double eps);

}  // namespace simplexflow
