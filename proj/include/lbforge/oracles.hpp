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

// Exhaustive offline solvers used to certify the constructive optima on
// small instances.

#ifndef LBFORGE_ORACLES_HPP
#define LBFORGE_ORACLES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lbforge/item.hpp"
#include "lbforge/knapsack_core.hpp"
#include "lbforge/mpas_core.hpp"
#include "lbforge/numerics.hpp"

namespace lbforge {

inline constexpr std::size_t kMaxKnapsackOracleItems = 14;
inline constexpr std::size_t kMaxBinPackingOracleItems = 16;

// A k-bin packing given as item ids per bin; unlisted items are rejected.
struct PackingSolution {
  std::vector<std::vector<int>> bins;
  EpsRational objective;
};

// Maximum-profit packing of `items` into k unit bins, any subset allowed.
// Throws TooLarge above kMaxKnapsackOracleItems.
PackingSolution brute_knapsack(std::span<const Item> items, int k, ProfitMode mode);

// Minimum number of unit bins for the given sizes, which is also the offline
// MPAS optimum (an interval graph is colorable with as many colors as its
// clique number). Throws TooLarge above kMaxBinPackingOracleItems.
int brute_bin_packing(std::span<const EpsRational> sizes);

// Every referenced id exists and is used once, at most k bins, loads <= 1.
bool verify_packing(std::span<const Item> items, int k, const PackingSolution& solution);

// Profit of a packing under the given mode; does not check feasibility.
EpsRational packing_profit(std::span<const Item> items, const PackingSolution& solution,
                           ProfitMode mode);

bool verify_assignment(std::span<const IntervalAssignment> assignments);

}  // namespace lbforge

#endif  // LBFORGE_ORACLES_HPP
