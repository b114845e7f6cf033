// Copyright 2026 The lbforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lbforge/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "lbforge/errors.hpp"

namespace lbforge {
namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

TEST(GammaThreshold, SmallestSatisfyingGamma) {
  EXPECT_EQ(gamma_threshold(2), 1);
  EXPECT_EQ(gamma_threshold(10), 4);
  EXPECT_EQ(gamma_threshold(1000), 373);
  for (int k = 1; k <= 300; ++k) {
    const int g = gamma_threshold(k);
    const long long kk = k;
    EXPECT_GE((2LL * g + 5 * kk) * (2LL * g + 5 * kk), 33 * kk * kk);
    if (g > 0) EXPECT_LT((2LL * g - 2 + 5 * kk) * (2LL * g - 2 + 5 * kk), 33 * kk * kk);
  }
}

TEST(BranchBounds, Formulas) {
  EXPECT_EQ(big_items_bound(2, 1), R(4, 3));
  EXPECT_EQ(theta_items_bound(2, 0), R(3 * 2 + 0 - 0, 4));
  EXPECT_EQ(theta_items_bound(3, 0), R(9 - 1, 6));
  EXPECT_EQ(big_items_bound(10, 4), R(20, 16));
}

TEST(Thm1Table, SmallKValues) {
  const Rational expected[] = {R(4, 3), R(5, 4),  R(6, 5),   R(5, 4), R(5, 4),
                               R(11, 9), R(16, 13), R(5, 4), R(16, 13)};
  for (int k = 2; k <= 10; ++k) {
    EXPECT_EQ(thm1_table_value(k), expected[k - 2]) << "k=" << k;
    EXPECT_EQ(thm1_guarantee(k, BranchRule::kThreshold), expected[k - 2]) << "k=" << k;
  }
}

TEST(Thm1Table, ThresholdRuleFallsShortAtSomeLargerK) {
  // The threshold branch choice is not min-max optimal everywhere.
  EXPECT_EQ(thm1_table_value(11), R(11, 9));
  EXPECT_EQ(thm1_guarantee(11, BranchRule::kThreshold), R(6, 5));
  for (int k = 2; k <= 60; ++k) {
    EXPECT_GE(thm1_table_value(k), thm1_guarantee(k, BranchRule::kThreshold));
  }
}

TEST(Thm1Table, ConvergesToConstant) {
  EXPECT_NEAR(thm1_table_value(1000).convert_to<double>(), 1.228713, 1e-3);
}

TEST(Thm1Constant, Value) {
  const long double c = thm1_constant();
  EXPECT_NEAR(static_cast<double>(c), 1.2287135539, 1e-9);
  EXPECT_NEAR(static_cast<double>(144 * (c - 0.75L) * (c - 0.75L)), 33.0, 1e-7);
  // Both branch formulas meet at gamma/k = (sqrt(33)-5)/2.
  const double x = (std::sqrt(33.0) - 5.0) / 2.0;
  EXPECT_NEAR(2.0 / (2.0 - x), static_cast<double>(c), 1e-9);
  EXPECT_NEAR((3.0 + x) / (2.0 + 2.0 * x), static_cast<double>(c), 1e-9);
}

TEST(Thm2Bound, EvenAndOdd) {
  EXPECT_EQ(thm2_bound(3), R(9, 7));
  EXPECT_EQ(thm2_bound(5), R(5, 4));
  EXPECT_EQ(thm2_bound(7), R(21, 17));
  EXPECT_EQ(thm2_bound(9), R(27, 22));
  EXPECT_EQ(thm2_bound(2), R(6, 5));
  EXPECT_EQ(thm2_bound(100), R(6, 5));
}

TEST(Thm3Bound, Formula) {
  EXPECT_EQ(thm3_bound(1), R(5, 4) - R(1, 6));
  EXPECT_EQ(thm3_bound(100), R(5, 4) - R(1, 600));
  EXPECT_NEAR(thm3_bound(1000).convert_to<double>(), 1.2498333, 1e-7);
}

TEST(FiniteNBound, ExactValues) {
  EXPECT_EQ(finite_n_bound(12, 3), R(77, 62));
  EXPECT_EQ(finite_n_bound(12, 2), R(107, 87));
  EXPECT_THROW(finite_n_bound(12, 6), InvalidRequest);
  EXPECT_THROW(finite_n_bound(11, 2), InvalidRequest);
  EXPECT_THROW(finite_n_bound(12, 0), InvalidRequest);
}

TEST(FiniteNBound, ApproachesLimit) {
  const double limit = 1.2691534;
  double previous = 0;
  for (std::int64_t n : {100, 1000, 10000}) {
    const auto t = static_cast<std::int64_t>(std::llround(0.212072 * n));
    const double v = finite_n_bound(n, t).convert_to<double>();
    EXPECT_LT(v, limit + 1e-6);
    EXPECT_GT(v, previous);
    previous = v;
  }
  EXPECT_GT(previous, 1.2671);
}

TEST(BestT, MaximizesExactly) {
  EXPECT_EQ(best_t(12), 3);
  for (std::int64_t n = 4; n <= 60; n += 2) {
    const auto t = best_t(n);
    for (std::int64_t s = 1; s <= n / 2 - 1; ++s) {
      EXPECT_GE(finite_n_bound(n, t), finite_n_bound(n, s)) << n << " " << s;
    }
  }
}

TEST(SolveTauR, MatchesKnownOptimum) {
  const auto sol = solve_tau_r();
  EXPECT_NEAR(sol.tau, 0.212072, 1e-5);
  EXPECT_NEAR(sol.r, 1.2691534, 1e-6);
  EXPECT_GT(sol.iterations, 0);
  EXPECT_DOUBLE_EQ(tau_objective(0.5), 1.0);
}

}  // namespace
}  // namespace lbforge
