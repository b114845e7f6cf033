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

#include "lbforge/baselines.hpp"

#include <algorithm>

#include "lbforge/errors.hpp"

namespace lbforge {

namespace {
const EpsRational kOne(1);
}  // namespace

Action FirstFitKeep::on_arrival(const Item& item, const KnapsackState& state) {
  for (int b = 0; b < state.bin_count(); ++b) {
    if (state.fits(b, item.size)) return Action::pack(b);
  }
  return Action::reject();
}

Action ReplaceIfLarger::on_arrival(const Item& item, const KnapsackState& state) {
  for (int b = 0; b < state.bin_count(); ++b) {
    if (state.fits(b, item.size)) return Action::pack(b);
  }
  std::optional<Action> best;
  EpsRational best_gain;
  for (int b = 0; b < state.bin_count(); ++b) {
    for (auto& removal : minimal_removal_sets(state, b, item)) {
      EpsRational removed;
      for (int id : removal) {
        for (const auto& x : state.bin(b)) {
          if (x.id == id) removed += x.size;
        }
      }
      const EpsRational gain = item.size - removed;
      if (gain > EpsRational(0) && (!best || gain > best_gain)) {
        best_gain = gain;
        best = Action::pack(b, std::move(removal));
      }
    }
  }
  return best ? *best : Action::reject();
}

Action RandomCompliant::on_arrival(const Item& item, const KnapsackState& state) {
  auto actions = legal_actions(state, item);
  const auto pick = static_cast<std::size_t>(rng_() % actions.size());
  return std::move(actions[pick]);
}

EpsRational AnchorZero::place(const Item&, std::span<const IntervalAssignment>) {
  return EpsRational(0);
}

EpsRational TwoSided::place(const Item& item, std::span<const IntervalAssignment>) {
  const std::int64_t count = seen_[item.size.standard_part()]++;
  return count % 2 == 0 ? EpsRational(0) : kOne - item.size;
}

EpsRational RandomOffset::place(const Item& item, std::span<const IntervalAssignment>) {
  const EpsRational limit = kOne - item.size;
  const Rational scaled = limit.standard_part() * Rational(kGrid);
  const std::int64_t top =
      std::max<std::int64_t>(0, (numerator(scaled) / denominator(scaled)).convert_to<std::int64_t>());
  const auto j = static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(top + 1));
  return std::min(EpsRational(Rational(j, kGrid)), limit);
}

const std::vector<BaselineSpec>& baseline_registry() {
  static const std::vector<BaselineSpec> registry = {
      {"first_fit_keep", Problem::kKnapsack, false},
      {"random_compliant", Problem::kKnapsack, true},
      {"replace_if_larger", Problem::kKnapsack, false},
      {"anchor_zero", Problem::kMpas, false},
      {"random_offset", Problem::kMpas, true},
      {"two_sided", Problem::kMpas, false},
  };
  return registry;
}

std::unique_ptr<KnapsackAlgorithm> make_knapsack_algorithm(const std::string& name,
                                                           std::uint64_t seed) {
  if (name == "first_fit_keep") return std::make_unique<FirstFitKeep>();
  if (name == "replace_if_larger") return std::make_unique<ReplaceIfLarger>();
  if (name == "random_compliant") return std::make_unique<RandomCompliant>(seed);
  throw InvalidRequest("unknown knapsack algorithm '" + name + "'");
}

std::unique_ptr<MpasAlgorithm> make_mpas_algorithm(const std::string& name,
                                                   std::uint64_t seed) {
  if (name == "anchor_zero") return std::make_unique<AnchorZero>();
  if (name == "two_sided") return std::make_unique<TwoSided>();
  if (name == "random_offset") return std::make_unique<RandomOffset>(seed);
  throw InvalidRequest("unknown MPAS algorithm '" + name + "'");
}

std::vector<std::string> baseline_names(Problem problem) {
  std::vector<std::string> names;
  for (const auto& entry : baseline_registry()) {
    if (entry.problem == problem) names.push_back(entry.name);
  }
  return names;
}

}  // namespace lbforge
