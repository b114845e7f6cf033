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

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lbforge/errors.hpp"

namespace lbforge {

namespace {

const EpsRational kOne(1);

// Items are visited in non-increasing size order. Bins with equal loads are
// interchangeable, so only the first of them is tried.
class KnapsackSearch {
 public:
  KnapsackSearch(std::span<const Item> items, int k, ProfitMode mode)
      : items_(items), k_(k), loads_(k), bin_of_(items.size(), -1) {
    order_.resize(items.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return items[a].size > items[b].size;
    });
    value_.reserve(items.size());
    for (std::size_t i : order_) {
      value_.push_back(mode == ProfitMode::kProportional ? items[i].size : EpsRational(1));
    }
    suffix_.resize(items.size() + 1);
    for (std::size_t i = items.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + value_[i];
    best_bin_of_ = bin_of_;
  }

  PackingSolution solve() {
    search(0);
    PackingSolution out;
    out.bins.resize(k_);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (best_bin_of_[i] >= 0) out.bins[best_bin_of_[i]].push_back(items_[order_[i]].id);
    }
    for (auto& bin : out.bins) std::sort(bin.begin(), bin.end());
    out.objective = best_;
    return out;
  }

 private:
  void search(std::size_t i) {
    if (i == order_.size()) {
      if (current_ > best_) {
        best_ = current_;
        best_bin_of_ = bin_of_;
      }
      return;
    }
    if (current_ + suffix_[i] <= best_) return;
    const EpsRational& size = items_[order_[i]].size;
    for (int b = 0; b < k_; ++b) {
      if (loads_[b] + size > kOne) continue;
      bool seen = false;
      for (int c = 0; c < b && !seen; ++c) seen = loads_[c] == loads_[b];
      if (seen) continue;
      loads_[b] += size;
      current_ += value_[i];
      bin_of_[i] = b;
      search(i + 1);
      bin_of_[i] = -1;
      current_ -= value_[i];
      loads_[b] -= size;
    }
    search(i + 1);
  }

  std::span<const Item> items_;
  int k_;
  std::vector<std::size_t> order_;
  std::vector<EpsRational> value_;
  std::vector<EpsRational> suffix_;
  std::vector<EpsRational> loads_;
  std::vector<int> bin_of_;
  std::vector<int> best_bin_of_;
  EpsRational current_;
  EpsRational best_;
};

// Smallest integer n with n >= x.
long long ceil_eps(const EpsRational& x) {
  const Rational& s = x.standard_part();
  BigInt q = numerator(s) / denominator(s);  // truncates toward zero
  if (Rational(q) > s) --q;                  // floor
  long long fl = q.convert_to<long long>();
  if (Rational(fl) == s) return x.infinitesimal_part() > 0 ? fl + 1 : fl;
  return fl + 1;
}

class BinPackingSearch {
 public:
  explicit BinPackingSearch(std::vector<EpsRational> sizes) : sizes_(std::move(sizes)) {
    std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
    EpsRational total;
    for (const auto& s : sizes_) total += s;
    lower_ = static_cast<int>(ceil_eps(total));
    best_ = first_fit_decreasing();
  }

  int solve() {
    if (best_ > lower_) {
      loads_.clear();
      search(0);
    }
    return best_;
  }

 private:
  int first_fit_decreasing() const {
    std::vector<EpsRational> loads;
    for (const auto& s : sizes_) {
      auto it = std::find_if(loads.begin(), loads.end(),
                             [&](const EpsRational& l) { return l + s <= kOne; });
      if (it == loads.end()) {
        loads.push_back(s);
      } else {
        *it += s;
      }
    }
    return static_cast<int>(loads.size());
  }

  void search(std::size_t i) {
    if (best_ == lower_) return;
    const int used = static_cast<int>(loads_.size());
    if (std::max(used, lower_) >= best_) return;
    if (i == sizes_.size()) {
      best_ = used;
      return;
    }
    const EpsRational& s = sizes_[i];
    for (int b = 0; b < used; ++b) {
      if (loads_[b] + s > kOne) continue;
      bool seen = false;
      for (int c = 0; c < b && !seen; ++c) seen = loads_[c] == loads_[b];
      if (seen) continue;
      loads_[b] += s;
      search(i + 1);
      loads_[b] -= s;
    }
    if (used + 1 < best_) {
      loads_.push_back(s);
      search(i + 1);
      loads_.pop_back();
    }
  }

  std::vector<EpsRational> sizes_;
  std::vector<EpsRational> loads_;
  int lower_ = 0;
  int best_ = 0;
};

}  // namespace

PackingSolution brute_knapsack(std::span<const Item> items, int k, ProfitMode mode) {
  if (items.size() > kMaxKnapsackOracleItems) {
    throw TooLarge("knapsack oracle is limited to " +
                   std::to_string(kMaxKnapsackOracleItems) + " items");
  }
  if (k < 1) throw InvalidRequest("need at least one bin");
  return KnapsackSearch(items, k, mode).solve();
}

int brute_bin_packing(std::span<const EpsRational> sizes) {
  if (sizes.size() > kMaxBinPackingOracleItems) {
    throw TooLarge("bin packing oracle is limited to " +
                   std::to_string(kMaxBinPackingOracleItems) + " items");
  }
  for (const auto& s : sizes) {
    if (!(EpsRational(0) < s) || s > kOne) {
      throw InvalidRequest("item size " + s.to_string() + " outside (0, 1]");
    }
  }
  if (sizes.empty()) return 0;
  return BinPackingSearch({sizes.begin(), sizes.end()}).solve();
}

bool verify_packing(std::span<const Item> items, int k, const PackingSolution& solution) {
  if (static_cast<int>(solution.bins.size()) > k) return false;
  std::vector<bool> used(items.size(), false);
  for (const auto& bin : solution.bins) {
    EpsRational load;
    for (int id : bin) {
      auto it = std::find_if(items.begin(), items.end(),
                             [id](const Item& x) { return x.id == id; });
      if (it == items.end()) return false;
      const auto pos = static_cast<std::size_t>(it - items.begin());
      if (used[pos]) return false;
      used[pos] = true;
      load += it->size;
    }
    if (load > kOne) return false;
  }
  return true;
}

EpsRational packing_profit(std::span<const Item> items, const PackingSolution& solution,
                           ProfitMode mode) {
  EpsRational total;
  for (const auto& bin : solution.bins) {
    for (int id : bin) {
      if (mode == ProfitMode::kUnit) {
        total += EpsRational(1);
        continue;
      }
      auto it = std::find_if(items.begin(), items.end(),
                             [id](const Item& x) { return x.id == id; });
      if (it == items.end()) throw std::out_of_range("unknown item id " + std::to_string(id));
      total += it->size;
    }
  }
  return total;
}

bool verify_assignment(std::span<const IntervalAssignment> assignments) {
  return std::all_of(assignments.begin(), assignments.end(),
                     [](const IntervalAssignment& a) { return is_valid(a); });
}

}  // namespace lbforge
