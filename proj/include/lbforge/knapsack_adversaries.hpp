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

#ifndef LBFORGE_KNAPSACK_ADVERSARIES_HPP
#define LBFORGE_KNAPSACK_ADVERSARIES_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lbforge/adaptive_sizing.hpp"
#include "lbforge/bounds.hpp"
#include "lbforge/knapsack_core.hpp"
#include "lbforge/numerics.hpp"
#include "lbforge/oracles.hpp"

namespace lbforge {

struct OptConstruction {
  PackingSolution packing;
  EpsRational profit;
};

// ---------------------------------------------------------------------------
// Deterministic adversary: k adaptive items just below 1/2, then either k
// items of size 1 - beta or gamma + floor((k - gamma)/2) items of size
// 1 - theta, where gamma counts bins holding two items after phase one.
// ---------------------------------------------------------------------------

enum class Thm1Branch { kBigItems, kThetaItems };

const char* to_string(Thm1Branch b);

struct Thm1Options {
  ProfitMode mode = ProfitMode::kProportional;
  BranchRule rule = BranchRule::kThreshold;
};

struct Thm1Certificate {
  int k = 0;
  int gamma = 0;
  Thm1Branch branch = Thm1Branch::kBigItems;
  ProfitMode mode = ProfitMode::kProportional;
  BranchRule rule = BranchRule::kThreshold;
  EpsRational alpha;
  EpsRational beta;
  EpsRational theta;
  std::string algorithm;
  std::optional<std::uint64_t> seed;
  EpsRational alg_profit;
  EpsRational opt_profit;
  Rational ratio_limit;      // standard_part(opt) / standard_part(alg)
  Rational reference_bound;  // thm1_guarantee(k, rule)
  std::vector<SizeClass> classes;  // phase-one items, by id
  std::vector<KnapsackStep> transcript;
  PackingSolution opt_packing;

  bool passes() const { return ratio_limit >= reference_bound; }
};

// The phase-one sizing interval: (1/2 - 2e, 1/2 - e).
EpsRational thm1_alpha();
EpsRational thm1_beta();

// Throws RefereeError if the algorithm breaks the lazy contract and
// InvalidRequest if k < 2.
Thm1Certificate run_thm1(KnapsackAlgorithm& alg, int k, const Thm1Options& options = {});

// Explicit offline packing for a finished game. `phase1` are the k adaptive
// items, `phase2` the continuation. Throws InfeasibleConstruction if a built
// bin overflows.
OptConstruction construct_opt_thm1(std::span<const Item> phase1,
                                   std::span<const Item> phase2, int k, int gamma,
                                   Thm1Branch branch, const EpsRational& theta,
                                   ProfitMode mode = ProfitMode::kProportional);

// Replays the certificate's transcript through the adversary.
Thm1Certificate replay_thm1(const Thm1Certificate& cert);

// ---------------------------------------------------------------------------
// Two-size adversary: 2k items of size 2/3 - e, then 2k of size 1/3 + 3e,
// then k items of size 1/3 + e (if at most k/2 bins hold a lone big item)
// or k items of size 2/3 - 3e.
// ---------------------------------------------------------------------------

enum class Thm2Branch { kThirdPlusEps, kTwoThirdsMinus3Eps };

const char* to_string(Thm2Branch b);

EpsRational thm2_big_size();     // 2/3 - e
EpsRational thm2_small_size();   // 1/3 + 3e
EpsRational thm2_branch_size(Thm2Branch b);

struct Thm2Certificate {
  int k = 0;
  int x = 0;  // bins holding exactly one big item (deterministic mode)
  Thm2Branch branch = Thm2Branch::kThirdPlusEps;
  std::string algorithm;
  std::optional<std::uint64_t> seed;
  EpsRational alg_profit;  // mean over trials in estimated mode
  EpsRational opt_profit;
  Rational ratio;
  Rational reference_bound;
  bool estimated = false;
  int trials = 1;
  Rational x_mean;                 // equals x in deterministic mode
  double x_ci_half_width = 0;      // 95% normal interval, estimated mode only
  std::vector<KnapsackStep> transcript;  // deterministic mode only
  PackingSolution opt_packing;

  bool passes() const { return ratio >= reference_bound; }
};

// Items ids 0..2k-1 are big, 2k..4k-1 small, 4k..5k-1 the continuation.
std::vector<Item> thm2_instance(int k, Thm2Branch branch);

Thm2Certificate run_thm2(KnapsackAlgorithm& alg, int k);

using KnapsackAlgorithmFactory =
    std::function<std::unique_ptr<KnapsackAlgorithm>(std::uint64_t seed)>;

// Plays `trials` independently seeded copies (seeds seed, seed+1, ...). The
// branch is chosen from the sample mean of X against k/2, the randomized
// threshold, and the ratio is opt over the mean measured profit.
Thm2Certificate run_thm2_estimated(const KnapsackAlgorithmFactory& factory, int k,
                                   int trials, std::uint64_t seed);

// k full bins for either continuation.
OptConstruction construct_opt_thm2(int k, Thm2Branch branch);

Thm2Certificate replay_thm2(const Thm2Certificate& cert);

}  // namespace lbforge

#endif  // LBFORGE_KNAPSACK_ADVERSARIES_HPP
