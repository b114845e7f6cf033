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

// Referee for online removable multiple knapsack.
//
// k unit-capacity bins. Each arriving item is either rejected outright or
// packed into one bin, possibly evicting a set of that bin's items. The
// referee enforces the lazy-algorithm contract:
//   * outright rejection only when the item fits in no bin as is;
//   * evictions only from the target bin, and the evicted set must be
//     minimal (each evicted item, put back alone, would overflow);
//   * every bin load stays <= 1.
// Evicted items count as rejected from then on.

#ifndef LBFORGE_KNAPSACK_CORE_HPP
#define LBFORGE_KNAPSACK_CORE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lbforge/item.hpp"
#include "lbforge/numerics.hpp"

namespace lbforge {

enum class ProfitMode { kProportional, kUnit };

const char* to_string(ProfitMode m);

struct Action {
  enum class Kind { kReject, kPack };

  Kind kind = Kind::kReject;
  int bin = -1;
  std::vector<int> removals;  // ids of items evicted from `bin`

  static Action reject() { return Action{}; }
  static Action pack(int bin, std::vector<int> removals = {}) {
    return Action{Kind::kPack, bin, std::move(removals)};
  }
  bool is_reject() const { return kind == Kind::kReject; }

  std::string to_string() const;
  friend bool operator==(const Action&, const Action&) = default;
};

class KnapsackState {
 public:
  explicit KnapsackState(int bin_count);

  int bin_count() const { return static_cast<int>(bins_.size()); }
  const std::vector<Item>& bin(int b) const { return bins_.at(b); }
  const EpsRational& load(int b) const { return loads_.at(b); }
  const std::vector<EpsRational>& loads() const { return loads_; }
  // Items rejected outright or evicted later.
  const std::vector<Item>& rejected() const { return rejected_; }
  // Number of items that have arrived so far; also the next item's id.
  int arrived() const { return arrived_; }

  bool fits(int b, const EpsRational& size) const;

 private:
  friend KnapsackState apply(KnapsackState state, const Item& item,
                             const Action& action);

  std::vector<std::vector<Item>> bins_;
  std::vector<EpsRational> loads_;
  std::vector<Item> rejected_;
  int arrived_ = 0;
};

// Throws RefereeError describing the first contract violation, if any.
void validate(const KnapsackState& state, const Item& item, const Action& action);

// Validates, then returns the successor state.
KnapsackState apply(KnapsackState state, const Item& item, const Action& action);

bool fits_anywhere(const KnapsackState& state, const Item& item);

EpsRational profit(const KnapsackState& state, ProfitMode mode);

// All inclusion-minimal eviction sets (as item ids) that let `item` into bin
// `b`. Returns {{}} if the item fits as is, and nothing if it cannot fit
// even in an emptied bin.
std::vector<std::vector<int>> minimal_removal_sets(const KnapsackState& state,
                                                   int b, const Item& item);

// Every action the referee accepts for this arrival.
std::vector<Action> legal_actions(const KnapsackState& state, const Item& item);

// Online player contract. Implementations must be deterministic given their
// seed and the history they have observed, so that snapshot() followed by
// identical arrivals reproduces identical actions.
class KnapsackAlgorithm {
 public:
  virtual ~KnapsackAlgorithm() = default;

  virtual Action on_arrival(const Item& item, const KnapsackState& state) = 0;
  virtual std::unique_ptr<KnapsackAlgorithm> snapshot() const = 0;
  virtual std::string name() const = 0;
  virtual std::optional<std::uint64_t> seed() const { return std::nullopt; }
};

struct KnapsackStep {
  int item_id = 0;
  EpsRational size;
  Action action;
  std::vector<EpsRational> loads;  // after the action

  friend bool operator==(const KnapsackStep&, const KnapsackStep&) = default;
};

// One game: a referee-owned state plus the transcript of every arrival.
class KnapsackGame {
 public:
  explicit KnapsackGame(int bin_count) : state_(bin_count) {}

  // Presents an item of the given size, applies the algorithm's answer and
  // returns it.
  const Action& offer(KnapsackAlgorithm& alg, const EpsRational& size);

  const KnapsackState& state() const { return state_; }
  const std::vector<Item>& items() const { return items_; }
  const std::vector<KnapsackStep>& transcript() const { return transcript_; }

 private:
  KnapsackState state_;
  std::vector<Item> items_;
  std::vector<KnapsackStep> transcript_;
};

// Plays back a fixed list of actions, one per arrival.
class ScriptedKnapsackAlgorithm : public KnapsackAlgorithm {
 public:
  explicit ScriptedKnapsackAlgorithm(std::vector<Action> script, std::string label = "scripted")
      : script_(std::move(script)), label_(std::move(label)) {}

  Action on_arrival(const Item& item, const KnapsackState& state) override;
  std::unique_ptr<KnapsackAlgorithm> snapshot() const override {
    return std::make_unique<ScriptedKnapsackAlgorithm>(*this);
  }
  std::string name() const override { return label_; }

 private:
  std::vector<Action> script_;
  std::string label_;
};

}  // namespace lbforge

#endif  // LBFORGE_KNAPSACK_CORE_HPP
