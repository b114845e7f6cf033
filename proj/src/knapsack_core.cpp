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

#include "lbforge/knapsack_core.hpp"

#include <algorithm>
#include <stdexcept>

#include "lbforge/errors.hpp"

namespace lbforge {

namespace {

const EpsRational kCapacity(1);
constexpr int kMaxEnumeratedBinSize = 20;

std::string describe(const Item& item) {
  return "item " + std::to_string(item.id) + " (size " + item.size.to_string() + ")";
}

}  // namespace

const char* to_string(Violation v) {
  switch (v) {
    case Violation::kIllegalReject: return "IllegalReject";
    case Violation::kNonMinimalRemoval: return "NonMinimalRemoval";
    case Violation::kOverflow: return "Overflow";
    case Violation::kBadBin: return "BadBin";
    case Violation::kBadRemoval: return "BadRemoval";
    case Violation::kOutOfOrder: return "OutOfOrder";
  }
  return "?";
}

const char* to_string(ProfitMode m) {
  return m == ProfitMode::kProportional ? "proportional" : "unit";
}

std::string Action::to_string() const {
  if (is_reject()) return "reject";
  std::string s = "pack(" + std::to_string(bin);
  if (!removals.empty()) {
    s += ", remove {";
    for (size_t i = 0; i < removals.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(removals[i]);
    }
    s += "}";
  }
  return s + ")";
}

KnapsackState::KnapsackState(int bin_count) {
  if (bin_count < 1) throw InvalidRequest("need at least one bin");
  bins_.resize(bin_count);
  loads_.resize(bin_count);
}

bool KnapsackState::fits(int b, const EpsRational& size) const {
  return loads_.at(b) + size <= kCapacity;
}

bool fits_anywhere(const KnapsackState& state, const Item& item) {
  for (int b = 0; b < state.bin_count(); ++b) {
    if (state.fits(b, item.size)) return true;
  }
  return false;
}

void validate(const KnapsackState& state, const Item& item, const Action& action) {
  if (item.id != state.arrived()) {
    throw RefereeError(Violation::kOutOfOrder,
                       describe(item) + " is not the next arrival (expected id " +
                           std::to_string(state.arrived()) + ")");
  }
  if (action.is_reject()) {
    if (fits_anywhere(state, item)) {
      throw RefereeError(Violation::kIllegalReject,
                         describe(item) + " rejected although some bin fits it");
    }
    return;
  }
  if (action.bin < 0 || action.bin >= state.bin_count()) {
    throw RefereeError(Violation::kBadBin, "bin " + std::to_string(action.bin) +
                                               " out of range for " + describe(item));
  }
  const auto& contents = state.bin(action.bin);
  std::vector<const Item*> removed;
  for (int id : action.removals) {
    auto it = std::find_if(contents.begin(), contents.end(),
                           [id](const Item& x) { return x.id == id; });
    if (it == contents.end()) {
      throw RefereeError(Violation::kBadRemoval,
                         "item " + std::to_string(id) + " is not in bin " +
                             std::to_string(action.bin));
    }
    if (std::find(removed.begin(), removed.end(), &*it) != removed.end()) {
      throw RefereeError(Violation::kBadRemoval,
                         "item " + std::to_string(id) + " removed twice");
    }
    removed.push_back(&*it);
  }
  EpsRational after = state.load(action.bin) + item.size;
  for (const Item* r : removed) after -= r->size;
  if (after > kCapacity) {
    throw RefereeError(Violation::kOverflow,
                       "bin " + std::to_string(action.bin) + " would hold " +
                           after.to_string() + " after packing " + describe(item));
  }
  for (const Item* r : removed) {
    if (after + r->size <= kCapacity) {
      throw RefereeError(Violation::kNonMinimalRemoval,
                         "removing " + describe(*r) + " from bin " +
                             std::to_string(action.bin) + " is not needed");
    }
  }
}

KnapsackState apply(KnapsackState state, const Item& item, const Action& action) {
  validate(state, item, action);
  ++state.arrived_;
  if (action.is_reject()) {
    state.rejected_.push_back(item);
    return state;
  }
  auto& contents = state.bins_[action.bin];
  auto& load = state.loads_[action.bin];
  for (int id : action.removals) {
    auto it = std::find_if(contents.begin(), contents.end(),
                           [id](const Item& x) { return x.id == id; });
    load -= it->size;
    state.rejected_.push_back(*it);
    contents.erase(it);
  }
  contents.push_back(item);
  load += item.size;
  return state;
}

EpsRational profit(const KnapsackState& state, ProfitMode mode) {
  EpsRational total;
  for (int b = 0; b < state.bin_count(); ++b) {
    if (mode == ProfitMode::kProportional) {
      total += state.load(b);
    } else {
      total += EpsRational(static_cast<long long>(state.bin(b).size()));
    }
  }
  return total;
}

std::vector<std::vector<int>> minimal_removal_sets(const KnapsackState& state,
                                                   int b, const Item& item) {
  if (state.fits(b, item.size)) return {{}};
  if (item.size > kCapacity) return {};
  const auto& contents = state.bin(b);
  const int n = static_cast<int>(contents.size());
  if (n > kMaxEnumeratedBinSize) {
    throw std::length_error("bin too large to enumerate eviction sets");
  }
  const EpsRational base = state.load(b) + item.size;
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    EpsRational after = base;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) after -= contents[i].size;
    }
    if (after > kCapacity) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      if ((mask & (1u << i)) && after + contents[i].size <= kCapacity) minimal = false;
    }
    if (!minimal) continue;
    std::vector<int> ids;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) ids.push_back(contents[i].id);
    }
    out.push_back(std::move(ids));
  }
  return out;
}

std::vector<Action> legal_actions(const KnapsackState& state, const Item& item) {
  std::vector<Action> actions;
  if (!fits_anywhere(state, item)) actions.push_back(Action::reject());
  for (int b = 0; b < state.bin_count(); ++b) {
    for (auto& removal : minimal_removal_sets(state, b, item)) {
      actions.push_back(Action::pack(b, std::move(removal)));
    }
  }
  return actions;
}

const Action& KnapsackGame::offer(KnapsackAlgorithm& alg, const EpsRational& size) {
  Item item{state_.arrived(), size};
  Action action = alg.on_arrival(item, state_);
  state_ = apply(state_, item, action);
  items_.push_back(item);
  transcript_.push_back({item.id, item.size, std::move(action), state_.loads()});
  return transcript_.back().action;
}

Action ScriptedKnapsackAlgorithm::on_arrival(const Item& item, const KnapsackState&) {
  if (item.id < 0 || item.id >= static_cast<int>(script_.size())) {
    throw std::out_of_range("script has no action for item " + std::to_string(item.id));
  }
  return script_[item.id];
}

}  // namespace lbforge
