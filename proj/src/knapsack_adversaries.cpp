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

#include "lbforge/knapsack_adversaries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lbforge/errors.hpp"

namespace lbforge {

namespace {

const EpsRational kOne(1);

Rational limit_ratio(const EpsRational& opt, const EpsRational& alg) {
  if (alg.standard_part() == 0) {
    throw std::logic_error("algorithm profit vanishes in the limit");
  }
  return opt.standard_part() / alg.standard_part();
}

std::vector<Action> actions_of(const std::vector<KnapsackStep>& transcript) {
  std::vector<Action> script;
  script.reserve(transcript.size());
  for (const auto& step : transcript) script.push_back(step.action);
  return script;
}

OptConstruction checked(std::span<const Item> items, int k, PackingSolution packing,
                        ProfitMode mode) {
  if (!verify_packing(items, k, packing)) {
    throw InfeasibleConstruction("constructed optimum is not a feasible packing");
  }
  EpsRational p = packing_profit(items, packing, mode);
  packing.objective = p;
  return {std::move(packing), std::move(p)};
}

}  // namespace

const char* to_string(Thm1Branch b) {
  return b == Thm1Branch::kBigItems ? "big-items" : "theta-items";
}

const char* to_string(Thm2Branch b) {
  return b == Thm2Branch::kThirdPlusEps ? "third-plus-eps" : "two-thirds-minus-3eps";
}

EpsRational thm1_alpha() { return make(Rational(1, 2), Rational(-2)); }
EpsRational thm1_beta() { return make(Rational(1, 2), Rational(-1)); }

Thm1Certificate run_thm1(KnapsackAlgorithm& alg, int k, const Thm1Options& options) {
  if (k < 2) throw InvalidRequest("the knapsack adversary needs k >= 2");
  Thm1Certificate cert;
  cert.k = k;
  cert.mode = options.mode;
  cert.rule = options.rule;
  cert.alpha = thm1_alpha();
  cert.beta = thm1_beta();
  cert.algorithm = alg.name();
  cert.seed = alg.seed();

  KnapsackGame game(k);
  AdaptiveSizer sizer(cert.alpha, cert.beta);

  // Phase one. With k bins, k items and every size below 1/2, a bin with at
  // most one item always has room, so outright rejection is never legal and
  // every eviction set is a single item.
  for (int i = 0; i < k; ++i) {
    const EpsRational size = sizer.next_size();
    std::vector<std::size_t> counts(k);
    for (int b = 0; b < k; ++b) counts[b] = game.state().bin(b).size();
    const Action& action = game.offer(alg, size);
    if (action.is_reject() || action.removals.size() > 1) {
      throw std::logic_error("referee accepted an impossible phase-one action");
    }
    SizeClass cls;
    if (!action.removals.empty()) {
      cls = cert.classes.at(action.removals.front());
    } else {
      cls = counts[action.bin] == 0 ? SizeClass::kLargish : SizeClass::kSmallish;
    }
    sizer.classify(cls);
    cert.classes.push_back(cls);
  }

  for (int b = 0; b < k; ++b) {
    if (game.state().bin(b).size() == 2) ++cert.gamma;
  }
  cert.theta = sizer.threshold();
  cert.branch = chooses_big_items(k, cert.gamma, options.rule) ? Thm1Branch::kBigItems
                                                               : Thm1Branch::kThetaItems;

  if (cert.branch == Thm1Branch::kBigItems) {
    const EpsRational size = kOne - cert.beta;
    for (int i = 0; i < k; ++i) game.offer(alg, size);
  } else {
    const EpsRational size = kOne - cert.theta;
    const int count = cert.gamma + (k - cert.gamma) / 2;
    for (int i = 0; i < count; ++i) game.offer(alg, size);
  }

  cert.alg_profit = profit(game.state(), options.mode);
  std::span<const Item> items(game.items());
  auto opt = construct_opt_thm1(items.first(k), items.subspan(k), k, cert.gamma,
                                cert.branch, cert.theta, options.mode);
  cert.opt_profit = opt.profit;
  cert.opt_packing = std::move(opt.packing);
  cert.ratio_limit = limit_ratio(cert.opt_profit, cert.alg_profit);
  cert.reference_bound = thm1_guarantee(k, options.rule);
  cert.transcript = game.transcript();
  return cert;
}

OptConstruction construct_opt_thm1(std::span<const Item> phase1,
                                   std::span<const Item> phase2, int k, int gamma,
                                   Thm1Branch branch, const EpsRational& theta,
                                   ProfitMode mode) {
  std::vector<Item> all(phase1.begin(), phase1.end());
  all.insert(all.end(), phase2.begin(), phase2.end());
  PackingSolution packing;

  if (branch == Thm1Branch::kBigItems) {
    if (phase2.size() != phase1.size()) {
      throw InfeasibleConstruction("big-items branch needs one big item per phase-one item");
    }
    for (std::size_t i = 0; i < phase1.size(); ++i) {
      packing.bins.push_back({phase1[i].id, phase2[i].id});
    }
    return checked(all, k, std::move(packing), mode);
  }

  std::vector<Item> smallish;
  std::vector<Item> rest;
  for (const auto& item : phase1) {
    (item.size < theta && static_cast<int>(smallish.size()) < gamma ? smallish : rest)
        .push_back(item);
  }
  if (static_cast<int>(smallish.size()) < gamma ||
      phase2.size() < static_cast<std::size_t>(gamma)) {
    throw InfeasibleConstruction("not enough smallish or 1-theta items to pair");
  }
  for (int i = 0; i < gamma; ++i) packing.bins.push_back({smallish[i].id, phase2[i].id});
  for (std::size_t i = gamma; i < phase2.size(); ++i) packing.bins.push_back({phase2[i].id});
  for (std::size_t i = 0; i < rest.size(); i += 2) {
    std::vector<int> bin{rest[i].id};
    if (i + 1 < rest.size()) bin.push_back(rest[i + 1].id);
    packing.bins.push_back(std::move(bin));
  }
  return checked(all, k, std::move(packing), mode);
}

Thm1Certificate replay_thm1(const Thm1Certificate& cert) {
  ScriptedKnapsackAlgorithm script(actions_of(cert.transcript), cert.algorithm);
  Thm1Certificate again = run_thm1(script, cert.k, {cert.mode, cert.rule});
  again.seed = cert.seed;
  return again;
}

// ---------------------------------------------------------------------------

EpsRational thm2_big_size() { return make(Rational(2, 3), Rational(-1)); }
EpsRational thm2_small_size() { return make(Rational(1, 3), Rational(3)); }

EpsRational thm2_branch_size(Thm2Branch b) {
  return b == Thm2Branch::kThirdPlusEps ? make(Rational(1, 3), Rational(1))
                                        : make(Rational(2, 3), Rational(-3));
}

std::vector<Item> thm2_instance(int k, Thm2Branch branch) {
  std::vector<Item> items;
  int id = 0;
  for (int i = 0; i < 2 * k; ++i) items.push_back({id++, thm2_big_size()});
  for (int i = 0; i < 2 * k; ++i) items.push_back({id++, thm2_small_size()});
  for (int i = 0; i < k; ++i) items.push_back({id++, thm2_branch_size(branch)});
  return items;
}

OptConstruction construct_opt_thm2(int k, Thm2Branch branch) {
  if (k < 1) throw InvalidRequest("need at least one bin");
  const auto items = thm2_instance(k, branch);
  PackingSolution packing;
  const int partner_base = branch == Thm2Branch::kThirdPlusEps ? 0 : 2 * k;
  for (int j = 0; j < k; ++j) packing.bins.push_back({partner_base + j, 4 * k + j});
  return checked(items, k, std::move(packing), ProfitMode::kProportional);
}

namespace {

void play_thm2_phase1(KnapsackGame& game, KnapsackAlgorithm& alg, int k) {
  for (int i = 0; i < 2 * k; ++i) game.offer(alg, thm2_big_size());
  for (int i = 0; i < 2 * k; ++i) game.offer(alg, thm2_small_size());
}

int count_lone_big(const KnapsackState& state) {
  const EpsRational big = thm2_big_size();
  int x = 0;
  for (int b = 0; b < state.bin_count(); ++b) {
    const auto& bin = state.bin(b);
    if (bin.size() == 1 && bin.front().size == big) ++x;
  }
  return x;
}

}  // namespace

Thm2Certificate run_thm2(KnapsackAlgorithm& alg, int k) {
  if (k < 2) throw InvalidRequest("the knapsack adversary needs k >= 2");
  Thm2Certificate cert;
  cert.k = k;
  cert.algorithm = alg.name();
  cert.seed = alg.seed();

  KnapsackGame game(k);
  play_thm2_phase1(game, alg, k);
  cert.x = count_lone_big(game.state());
  cert.x_mean = Rational(cert.x);
  cert.branch = 2 * cert.x <= k ? Thm2Branch::kThirdPlusEps : Thm2Branch::kTwoThirdsMinus3Eps;
  const EpsRational size = thm2_branch_size(cert.branch);
  for (int i = 0; i < k; ++i) game.offer(alg, size);

  cert.alg_profit = profit(game.state(), ProfitMode::kProportional);
  auto opt = construct_opt_thm2(k, cert.branch);
  cert.opt_profit = opt.profit;
  cert.opt_packing = std::move(opt.packing);
  cert.ratio = limit_ratio(cert.opt_profit, cert.alg_profit);
  cert.reference_bound = thm2_bound(k);
  cert.transcript = game.transcript();
  return cert;
}

Thm2Certificate run_thm2_estimated(const KnapsackAlgorithmFactory& factory, int k,
                                   int trials, std::uint64_t seed) {
  if (k < 2) throw InvalidRequest("the knapsack adversary needs k >= 2");
  if (trials < 1) throw InvalidRequest("need at least one trial");

  std::vector<KnapsackGame> games;
  std::vector<std::unique_ptr<KnapsackAlgorithm>> algs;
  std::vector<int> xs;
  for (int i = 0; i < trials; ++i) {
    algs.push_back(factory(seed + static_cast<std::uint64_t>(i)));
    games.emplace_back(k);
    play_thm2_phase1(games.back(), *algs.back(), k);
    xs.push_back(count_lone_big(games.back().state()));
  }

  Thm2Certificate cert;
  cert.k = k;
  cert.estimated = true;
  cert.trials = trials;
  cert.seed = seed;
  cert.algorithm = algs.front()->name();

  long long x_sum = 0;
  for (int x : xs) x_sum += x;
  cert.x_mean = Rational(x_sum, trials);
  if (trials > 1) {
    const double mean = static_cast<double>(x_sum) / trials;
    double var = 0;
    for (int x : xs) var += (x - mean) * (x - mean);
    var /= (trials - 1);
    cert.x_ci_half_width = 1.96 * std::sqrt(var / trials);
  }
  cert.x = static_cast<int>(std::lround(cert.x_mean.convert_to<double>()));
  cert.branch = cert.x_mean <= Rational(k, 2) ? Thm2Branch::kThirdPlusEps
                                              : Thm2Branch::kTwoThirdsMinus3Eps;

  const EpsRational size = thm2_branch_size(cert.branch);
  EpsRational total;
  for (int i = 0; i < trials; ++i) {
    for (int j = 0; j < k; ++j) games[i].offer(*algs[i], size);
    total += profit(games[i].state(), ProfitMode::kProportional);
  }
  cert.alg_profit = total / Rational(trials);
  auto opt = construct_opt_thm2(k, cert.branch);
  cert.opt_profit = opt.profit;
  cert.opt_packing = std::move(opt.packing);
  cert.ratio = limit_ratio(cert.opt_profit, cert.alg_profit);
  cert.reference_bound = Rational(6, 5);
  return cert;
}

Thm2Certificate replay_thm2(const Thm2Certificate& cert) {
  if (cert.estimated) throw InvalidRequest("estimated certificates carry no transcript");
  ScriptedKnapsackAlgorithm script(actions_of(cert.transcript), cert.algorithm);
  Thm2Certificate again = run_thm2(script, cert.k);
  again.seed = cert.seed;
  return again;
}

}  // namespace lbforge
