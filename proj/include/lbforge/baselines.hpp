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

// Simple online players for the adversaries to beat.

#ifndef LBFORGE_BASELINES_HPP
#define LBFORGE_BASELINES_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lbforge/knapsack_core.hpp"
#include "lbforge/mpas_core.hpp"

namespace lbforge {

// ---- knapsack ----

// Lowest-index bin that fits; never evicts.
class FirstFitKeep : public KnapsackAlgorithm {
 public:
  Action on_arrival(const Item& item, const KnapsackState& state) override;
  std::unique_ptr<KnapsackAlgorithm> snapshot() const override {
    return std::make_unique<FirstFitKeep>(*this);
  }
  std::string name() const override { return "first_fit_keep"; }
};

// First fit; when nothing fits, evicts the lightest minimal set whose total
// is strictly below the arrival's size, preferring the largest gain.
class ReplaceIfLarger : public KnapsackAlgorithm {
 public:
  Action on_arrival(const Item& item, const KnapsackState& state) override;
  std::unique_ptr<KnapsackAlgorithm> snapshot() const override {
    return std::make_unique<ReplaceIfLarger>(*this);
  }
  std::string name() const override { return "replace_if_larger"; }
};

// Uniform choice among all referee-legal actions.
class RandomCompliant : public KnapsackAlgorithm {
 public:
  explicit RandomCompliant(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  Action on_arrival(const Item& item, const KnapsackState& state) override;
  std::unique_ptr<KnapsackAlgorithm> snapshot() const override {
    return std::make_unique<RandomCompliant>(*this);
  }
  std::string name() const override { return "random_compliant"; }
  std::optional<std::uint64_t> seed() const override { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

// ---- MPAS ----

class AnchorZero : public MpasAlgorithm {
 public:
  EpsRational place(const Item& item, std::span<const IntervalAssignment> history) override;
  std::unique_ptr<MpasAlgorithm> snapshot() const override {
    return std::make_unique<AnchorZero>(*this);
  }
  std::string name() const override { return "anchor_zero"; }
};

// Alternates between offset 0 and 1 - size within each size class; sizes
// with equal standard part share a class.
class TwoSided : public MpasAlgorithm {
 public:
  EpsRational place(const Item& item, std::span<const IntervalAssignment> history) override;
  std::unique_ptr<MpasAlgorithm> snapshot() const override {
    return std::make_unique<TwoSided>(*this);
  }
  std::string name() const override { return "two_sided"; }

 private:
  std::map<Rational, std::int64_t> seen_;
};

// Uniform offset on the grid of multiples of 1/20000, clipped to 1 - size.
class RandomOffset : public MpasAlgorithm {
 public:
  static constexpr std::int64_t kGrid = 20000;

  explicit RandomOffset(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  EpsRational place(const Item& item, std::span<const IntervalAssignment> history) override;
  std::unique_ptr<MpasAlgorithm> snapshot() const override {
    return std::make_unique<RandomOffset>(*this);
  }
  std::string name() const override { return "random_offset"; }
  std::optional<std::uint64_t> seed() const override { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

// ---- registry ----

enum class Problem { kKnapsack, kMpas };

struct BaselineSpec {
  std::string name;
  Problem problem = Problem::kKnapsack;
  bool seeded = false;
};

const std::vector<BaselineSpec>& baseline_registry();

// Throws InvalidRequest for unknown names.
std::unique_ptr<KnapsackAlgorithm> make_knapsack_algorithm(const std::string& name,
                                                           std::uint64_t seed = 0);
std::unique_ptr<MpasAlgorithm> make_mpas_algorithm(const std::string& name,
                                                   std::uint64_t seed = 0);

std::vector<std::string> baseline_names(Problem problem);

}  // namespace lbforge

#endif  // LBFORGE_BASELINES_HPP
