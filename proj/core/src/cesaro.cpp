#include "simplexflow/cesaro.hpp"

#include <cmath>
#include <span>

#include "simplexflow/errors.hpp"
#include "simplexflow/summation.hpp"

namespace simplexflow {

namespace {

void check_order(int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative Cesàro order");
  if (k > kMaxCesaroOrder) {
    throw Error(ErrorCode::kOrderOverflow,
                "Cesàro order " + std::to_string(k) + " exceeds " +
                    std::to_string(kMaxCesaroOrder));
  }
}

void check_size(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative n");
  if (n > kMaxCoefficientN) {
    throw Error(ErrorCode::kSizeLimit,
                "n = " + std::to_string(n) + " exceeds coefficient limit");
  }
}

}  // namespace

CesaroState::CesaroState(int max_order) : max_order_(max_order) {
  check_order(max_order);
  values_.resize(static_cast<std::size_t>(max_order) + 1);
}

void CesaroState::push(const SimplexPoint& x) {
  const Triple point = x.linear();
  ++n_;
  values_[0] = point;
  if (n_ == 0) {
    for (auto& v : values_) v = point;
    return;
  }
  const double w = 1.0 / static_cast<double>(n_ + 1);
  for (std::size_t k = 1; k < values_.size(); ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      values_[k][i] += (values_[k - 1][i] - values_[k][i]) * w;
    }
  }
}

const Triple& CesaroState::value(int k) const {
  if (k < 0 || k > max_order_) {
    throw Error(ErrorCode::kInvalidArgument, "Cesàro order out of range");
  }
  if (empty()) throw Error(ErrorCode::kInvalidArgument, "no iterate pushed");
  return values_[static_cast<std::size_t>(k)];
}

std::vector<double> cesaro_coefficients(int k, std::int64_t n) {
  check_order(k);
  check_size(n);
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<double> a(size, 0.0);
  if (k == 0) {
    a[size - 1] = 1.0;
    return a;
  }
  // h[m] = h_m of the variables 1/(i+1), ..., 1/(n+1) seen so far.
  std::vector<double> h(static_cast<std::size_t>(k), 0.0);
  h[0] = 1.0;
  const double scale = 1.0 / static_cast<double>(n + 1);
  for (std::int64_t i = n; i >= 0; --i) {
    const double v = 1.0 / static_cast<double>(i + 1);
    for (std::size_t m = 1; m < h.size(); ++m) h[m] += v * h[m - 1];
    a[static_cast<std::size_t>(i)] = h.back() * scale;
  }
  return a;
}

double tail_mass(int k, std::int64_t n, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tail_mass: eps outside [0,1]");
  }
  const auto a = cesaro_coefficients(k, n);
  const auto first = static_cast<std::size_t>(
      std::floor(eps * static_cast<double>(n)));
  return compensated_sum(std::span<const double>(a).subspan(first));
}

}  // namespace simplexflow
