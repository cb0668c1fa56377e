#include "simplexflow/cesaro.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "simplexflow/errors.hpp"
#include "simplexflow/summation.hpp"
#include "simplexflow/trajectory.hpp"

namespace simplexflow {
namespace {

using testing::Rational;

TEST(CesaroCoefficients, OrderZeroIsIndicator) {
  const auto a = cesaro_coefficients(0, 5);
  ASSERT_EQ(a.size(), 6u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(a[i], 0.0);
  EXPECT_EQ(a[5], 1.0);
}

TEST(CesaroCoefficients, OrderOneIsUniform) {
  for (std::int64_t n : {0, 1, 7, 100}) {
    for (double v : cesaro_coefficients(1, n)) {
      EXPECT_DOUBLE_EQ(v, 1.0 / static_cast<double>(n + 1));
    }
  }
}

TEST(CesaroCoefficients, OrderTwoSmallCase) {
  const auto oracle = testing::recursive_coefficients(2, 2);
  EXPECT_EQ(oracle[0], Rational(11, 18));
  EXPECT_EQ(oracle[1], Rational(5, 18));
  EXPECT_EQ(oracle[2], Rational(2, 18));
  const auto a = cesaro_coefficients(2, 2);
  EXPECT_NEAR(a[0], 11.0 / 18, 2e-16);
  EXPECT_NEAR(a[1], 5.0 / 18, 2e-16);
  EXPECT_NEAR(a[2], 2.0 / 18, 2e-16);
}

TEST(CesaroCoefficients, MatchRecursionInExactArithmetic) {
  for (int k = 0; k <= 4; ++k) {
    for (int n = 0; n <= 12; ++n) {
      const auto oracle = testing::recursive_coefficients(k, n);
      const auto a = cesaro_coefficients(k, n);
      ASSERT_EQ(a.size(), oracle.size());
      Rational total = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(a[i], static_cast<double>(oracle[i]), 1e-15)
            << "k=" << k << " n=" << n << " i=" << i;
        total += oracle[i];
      }
      EXPECT_EQ(total, 1);
    }
  }
}

TEST(CesaroCoefficients, RowsAreDistributions) {
  for (int k = 0; k <= 6; ++k) {
    for (std::int64_t n : {10, 1000, 100000}) {
      const auto a = cesaro_coefficients(k, n);
      for (double v : a) EXPECT_GE(v, 0.0);
      EXPECT_NEAR(compensated_sum(a), 1.0, 1e-12);
    }
  }
}

TEST(CesaroCoefficients, Limits) {
  try {
    cesaro_coefficients(2, kMaxCoefficientN + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeLimit);
  }
  try {
    CesaroState s(kMaxCesaroOrder + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrderOverflow);
  }
}

TEST(TailMass, Examples) {
  for (double eps : {0.0, 0.3, 1.0}) EXPECT_DOUBLE_EQ(tail_mass(0, 50, eps), 1.0);
  for (std::int64_t n : {10, 99, 1000}) {
    const double eps = 0.25;
    const double cut = std::floor(eps * static_cast<double>(n));
    EXPECT_NEAR(tail_mass(1, n, eps), 1.0 - cut / static_cast<double>(n + 1), 1e-14);
  }
}

TEST(TailMass, FixedEpsilonLimit) {
  // a_{i,2,n} = (H_{n+1} - H_i) / (n+1), so the mass above eps n tends to
  // 1 - eps + eps ln eps from above: it shrinks with n at fixed eps.
  const double eps = 0.1;
  const double limit = 1.0 - eps + eps * std::log(eps);
  double prev = 1.0;
  for (std::int64_t n : {100, 1000, 10000}) {
    const double t = tail_mass(2, n, eps);
    EXPECT_GT(t, limit);
    EXPECT_LT(t, prev);
    prev = t;
  }
  EXPECT_NEAR(prev, limit, 1e-3);
}

TEST(TailMass, ApproachesOneAsEpsilonShrinks) {
  for (int k = 0; k <= 3; ++k) {
    double prev = 0.0;
    for (double eps : {0.1, 0.01, 0.001}) {
      const double t = tail_mass(k, 100000, eps);
      EXPECT_GE(t, prev);
      prev = t;
    }
    EXPECT_GT(prev, 0.95);
  }
}

TEST(CesaroState, ConstantInput) {
  const Parameters params(0.2, 0.7, 0.9);
  CesaroState s(3);
  for (int n = 0; n < 100; ++n) s.push(params.fixed_point());
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(s.value(k), params.fixed_point().linear());
  }
}

TEST(CesaroState, TwoTermAverage) {
  CesaroState s(2);
  s.push(vertex(0));
  s.push(vertex(1));
  EXPECT_EQ(s.step(), 1);
  const auto c1 = s.value(1);
  EXPECT_DOUBLE_EQ(c1[0], 0.5);
  EXPECT_DOUBLE_EQ(c1[1], 0.5);
  EXPECT_DOUBLE_EQ(c1[2], 0.0);
  // c_2^(1) = (c_1^(0) + c_1^(1)) / 2 = (e1 + (e1+e2)/2) / 2.
  EXPECT_DOUBLE_EQ(s.value(2)[0], 0.75);
}

TEST(CesaroState, StreamingMatchesCoefficientFormula) {
  const auto traj = iterate(make_point(0.5, 0.3, 0.2), Parameters(0.6, 0.8, 0.9),
                            SpeedFunction::constant(0.4), {.steps = 2000});
  CesaroState s(3);
  for (const auto& smp : traj.samples) s.push(smp.point);
  const auto n = static_cast<std::int64_t>(traj.samples.size()) - 1;
  for (int k = 0; k <= 3; ++k) {
    const auto a = cesaro_coefficients(k, n);
    for (std::size_t c = 0; c < 3; ++c) {
      CompensatedSum acc;
      for (std::size_t i = 0; i < a.size(); ++i) acc.add(a[i] * traj.samples[i].point[c]);
      EXPECT_NEAR(s.value(k)[c], acc.value(), 1e-12);
    }
  }
}

TEST(CesaroState, MeansStayOnSimplex) {
  std::mt19937_64 rng(59);
  CesaroState s(5);
  for (int n = 0; n < 5000; ++n) {
    s.push(testing::random_interior(rng));
    for (int k = 0; k <= 5; ++k) {
      const auto& c = s.value(k);
      EXPECT_NEAR(compensated_sum(c), 1.0, 1e-12);
      for (double v : c) EXPECT_GE(v, 0.0);
    }
  }
}

}  // namespace
}  // namespace simplexflow
