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

#include "lbforge/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "../support/test_players.hpp"
#include "lbforge/baselines.hpp"
#include "lbforge/errors.hpp"
#include "lbforge/knapsack_adversaries.hpp"
#include "lbforge/mpas_adversaries.hpp"

namespace lbforge {
namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }
EpsRational E(long long n, long long d = 1) { return EpsRational(R(n, d)); }

TEST(BruteKnapsack, SmallExamples) {
  const std::vector<Item> items = {{0, E(3, 5)}, {1, E(1, 2)}, {2, E(1, 2)}};
  const auto p = brute_knapsack(items, 1, ProfitMode::kProportional);
  EXPECT_EQ(p.objective, E(1));
  EXPECT_TRUE(verify_packing(items, 1, p));
  EXPECT_EQ(brute_knapsack(items, 1, ProfitMode::kUnit).objective, E(2));
  EXPECT_TRUE(brute_knapsack({}, 3, ProfitMode::kUnit).objective.is_zero());
}

TEST(BruteKnapsack, GuardAndEpsilonTieBreak) {
  std::vector<Item> many;
  for (int i = 0; i < 15; ++i) many.push_back({i, E(1, 20)});
  EXPECT_THROW(brute_knapsack(many, 2, ProfitMode::kUnit), TooLarge);
  // (2/3,-1) and (1/3,3) overflow; (1/3,-3) fits with the big one.
  const std::vector<Item> items = {
      {0, make(R(2, 3), R(-1))}, {1, make(R(1, 3), R(3))}, {2, make(R(1, 3), R(-3))}};
  EXPECT_EQ(brute_knapsack(items, 1, ProfitMode::kProportional).objective,
            make(R(1), R(-4)));
}

TEST(BruteBinPacking, SmallExamples) {
  EXPECT_EQ(brute_bin_packing(std::vector<EpsRational>{E(2, 5), E(2, 5), E(3, 5), E(3, 5)}), 2);
  EXPECT_EQ(brute_bin_packing(
                std::vector<EpsRational>{E(2, 5), E(2, 5), E(2, 5), E(3, 5), E(3, 5), E(3, 5)}),
            3);
  EXPECT_EQ(brute_bin_packing(std::vector<EpsRational>{}), 0);
  EXPECT_THROW(brute_bin_packing(std::vector<EpsRational>(17, E(1, 20))), TooLarge);
  EXPECT_THROW(brute_bin_packing(std::vector<EpsRational>{E(0)}), InvalidRequest);
}

TEST(Verify, PackingsAndAssignments) {
  const auto opt = construct_opt_thm2(3, Thm2Branch::kThirdPlusEps);
  EXPECT_TRUE(verify_packing(thm2_instance(3, Thm2Branch::kThirdPlusEps), 3, opt.packing));
  const std::vector<Item> items = {{0, make(R(2, 3), R(-1))}, {1, make(R(1, 3), R(3))}};
  PackingSolution bad{{{0, 1}}, {}};
  EXPECT_FALSE(verify_packing(items, 1, bad));
  PackingSolution dup{{{0}, {0}}, {}};
  EXPECT_FALSE(verify_packing(items, 2, dup));
  EXPECT_TRUE(verify_packing(items, 1, PackingSolution{}));
  EXPECT_TRUE(verify_assignment({}));
  EXPECT_FALSE(verify_assignment(std::vector<IntervalAssignment>{{0, E(1, 2), E(3, 4)}}));
}

// Property: reordering the input never changes the optimum value.
TEST(OracleProperty, PermutationInvariance) {
  testing::SizeGen gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = gen.uniform(0, 9);
    std::vector<Item> items;
    std::vector<EpsRational> sizes;
    for (int i = 0; i < n; ++i) {
      items.push_back({i, gen.size(6)});
      sizes.push_back(items.back().size);
    }
    const int k = gen.uniform(1, 3);
    const auto base = brute_knapsack(items, k, ProfitMode::kProportional).objective;
    const int bins = brute_bin_packing(sizes);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      std::shuffle(items.begin(), items.end(), gen.rng());
      std::shuffle(sizes.begin(), sizes.end(), gen.rng());
      const auto again = brute_knapsack(items, k, ProfitMode::kProportional);
      EXPECT_EQ(again.objective, base);
      EXPECT_TRUE(verify_packing(items, k, again));
      EXPECT_EQ(brute_bin_packing(sizes), bins);
    }
  }
}

// Property: the bin-packing optimum never exceeds first-fit-decreasing and
// never falls below the ceiling of the total size.
TEST(OracleProperty, BinPackingBetweenSimpleBounds) {
  testing::SizeGen gen(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<EpsRational> sizes;
    const int n = gen.uniform(1, 12);
    EpsRational total;
    for (int i = 0; i < n; ++i) {
      sizes.push_back(gen.size(8));
      total += sizes.back();
    }
    auto sorted = sizes;
    std::sort(sorted.rbegin(), sorted.rend());
    std::vector<EpsRational> loads;
    for (const auto& s : sorted) {
      bool placed = false;
      for (auto& l : loads) {
        if (l + s <= EpsRational(1)) {
          l += s;
          placed = true;
          break;
        }
      }
      if (!placed) loads.push_back(s);
    }
    const int opt = brute_bin_packing(sizes);
    EXPECT_LE(opt, static_cast<int>(loads.size()));
    EXPECT_GE(EpsRational(opt), total);
  }
}

}  // namespace
}  // namespace lbforge
