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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion holds. Tolerances are pinned below and never adjusted.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "../support/reference_rules.hpp"
#include "../support/test_players.hpp"
#include "lbforge/baselines.hpp"
#include "lbforge/bounds.hpp"
#include "lbforge/certificate.hpp"
#include "lbforge/errors.hpp"
#include "lbforge/knapsack_adversaries.hpp"
#include "lbforge/mpas_adversaries.hpp"
#include "lbforge/oracles.hpp"

namespace lbforge {
namespace {

constexpr double kThm1ConstantTol = 1e-6;
constexpr double kTauTol = 1e-5;
constexpr double kRTol = 1e-6;
constexpr double kLimitTol = 2e-3;
constexpr double kExpectedTau = 0.212072;
constexpr double kExpectedR = 1.2691534;
constexpr int kRandomSeeds = 100;
constexpr int kFuzzGames = 1000;
constexpr int kFuzzProfiles = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report.
class Checker {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << " (" << checks_ << " checks";
    if (failures_ > 0) os << ", " << failures_ << " failed: " << notes_.str();
    os << ")";
    return {failures_ == 0, os.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::ostringstream notes_;
};

std::string fmt(const Rational& r) { return format_rational(r); }

Outcome constants() {
  Checker c;
  const double exact = 0.75 + std::sqrt(33.0) / 12.0;
  const double value = static_cast<double>(thm1_constant());
  c.require(std::fabs(value - exact) <= kThm1ConstantTol, "thm1_constant");
  c.require(std::fabs(value - 1.2287135) <= kThm1ConstantTol, "thm1_constant vs 1.2287135");
  const auto sol = solve_tau_r();
  c.require(std::fabs(sol.tau - kExpectedTau) <= kTauTol, "tau");
  c.require(std::fabs(sol.r - kExpectedR) <= kRTol, "R");
  char buf[160];
  std::snprintf(buf, sizeof buf, "thm1_constant=%.10f tau=%.7f R=%.7f", value, sol.tau, sol.r);
  return c.outcome(buf);
}

Outcome small_k_table() {
  Checker c;
  const Rational thm1[] = {Rational(4, 3),  Rational(5, 4),   Rational(6, 5),
                           Rational(5, 4),  Rational(5, 4),   Rational(11, 9),
                           Rational(16, 13), Rational(5, 4),  Rational(16, 13)};
  for (int k = 2; k <= 10; ++k) {
    c.require(thm1_table_value(k) == thm1[k - 2], "thm1 k=" + std::to_string(k));
  }
  const std::pair<int, Rational> thm2[] = {
      {3, Rational(9, 7)}, {5, Rational(5, 4)}, {7, Rational(21, 17)}, {9, Rational(27, 22)}};
  for (const auto& [k, v] : thm2) {
    c.require(thm2_bound(k) == v, "thm2 k=" + std::to_string(k));
  }
  return c.outcome("k=2..10 min-max table and odd-k two-size bounds exact");
}

Outcome universal_knapsack() {
  Checker c;
  struct Row {
    std::string label;
    Rational thm1;
    Rational thm2;
    int k;
  };
  std::vector<std::future<std::vector<Row>>> jobs;
  auto play = [](std::string name, std::uint64_t seed) {
    std::vector<Row> rows;
    for (int k = 2; k <= 10; ++k) {
      auto a1 = make_knapsack_algorithm(name, seed);
      auto a2 = make_knapsack_algorithm(name, seed);
      rows.push_back({name + "/" + std::to_string(seed), run_thm1(*a1, k).ratio_limit,
                      run_thm2(*a2, k).ratio, k});
    }
    return rows;
  };
  for (const auto& name : baseline_names(Problem::kKnapsack)) {
    if (name == "random_compliant") continue;
    jobs.push_back(std::async(std::launch::async, play, name, 0));
  }
  for (int seed = 0; seed < kRandomSeeds; ++seed) {
    jobs.push_back(std::async(std::launch::async, play, "random_compliant", seed));
  }
  Rational worst1(100);
  Rational worst2(100);
  for (auto& job : jobs) {
    for (const auto& row : job.get()) {
      c.require(row.thm1 >= thm1_table_value(row.k),
                "thm1 " + row.label + " k=" + std::to_string(row.k) + " ratio " + fmt(row.thm1));
      c.require(row.thm2 >= thm2_bound(row.k),
                "thm2 " + row.label + " k=" + std::to_string(row.k) + " ratio " + fmt(row.thm2));
      worst1 = std::min(worst1, row.thm1 / thm1_table_value(row.k));
      worst2 = std::min(worst2, row.thm2 / thm2_bound(row.k));
    }
  }
  return c.outcome("smallest ratio/bound thm1=" + fmt(worst1) + " thm2=" + fmt(worst2));
}

Outcome mpas_deterministic() {
  Checker c;
  std::ostringstream summary;
  std::vector<std::future<std::pair<std::string, Thm3Certificate>>> jobs;
  for (std::int64_t n : {100, 1000}) {
    for (const auto& name : baseline_names(Problem::kMpas)) {
      jobs.push_back(std::async(std::launch::async, [n, name] {
        auto alg = make_mpas_algorithm(name, 1);
        return std::make_pair(name, run_thm3(*alg, n));
      }));
    }
  }
  for (auto& job : jobs) {
    const auto [name, cert] = job.get();
    const Rational bound = Rational(5, 4) - Rational(1, 6 * cert.n);
    c.require(cert.reference_bound == bound, "reference N=" + std::to_string(cert.n));
    c.require(cert.ratio >= bound,
              name + " N=" + std::to_string(cert.n) + " ratio " + fmt(cert.ratio));
    summary << name << "@" << cert.n << "=" << fmt(cert.ratio) << " ";
  }
  return c.outcome(summary.str() + "vs 5/4-1/(6N)");
}

Outcome yao_certificate() {
  Checker c;
  std::ostringstream summary;
  for (const auto& name : baseline_names(Problem::kMpas)) {
    auto alg = make_mpas_algorithm(name, 1);
    const auto cert = run_thm4(*alg, 12, 5, 3);
    c.require(cert.reference_bound == Rational(77, 62), "finite bound 77/62");
    c.require(cert.ratio >= Rational(77, 62), name + " ratio " + fmt(cert.ratio));
    summary << name << "=" << fmt(cert.ratio) << " ";
  }
  const double limit = finite_n_bound(1000000, std::llround(0.212072 * 1e6)).convert_to<double>();
  c.require(std::fabs(limit - kExpectedR) <= kLimitTol, "finite bound at N=10^6");
  char buf[80];
  std::snprintf(buf, sizeof buf, "finite bound at N=10^6: %.7f", limit);
  return c.outcome(summary.str() + buf);
}

Outcome oracle_equivalence() {
  Checker c;
  long knapsack_cases = 0;
  long mpas_cases = 0;

  std::vector<std::pair<std::string, std::uint64_t>> players;
  for (const auto& name : baseline_names(Problem::kKnapsack)) {
    if (name != "random_compliant") players.push_back({name, 0});
  }
  for (std::uint64_t s = 0; s < 40; ++s) players.push_back({"random_compliant", s});

  for (int k = 2; k <= 7; ++k) {
    for (const auto& [name, seed] : players) {
      for (auto mode : {ProfitMode::kProportional, ProfitMode::kUnit}) {
        for (auto rule : {BranchRule::kThreshold, BranchRule::kBestBound}) {
          auto alg = make_knapsack_algorithm(name, seed);
          const auto cert = run_thm1(*alg, k, {mode, rule});
          if (cert.transcript.size() > kMaxKnapsackOracleItems) continue;
          std::vector<Item> items;
          for (const auto& step : cert.transcript) items.push_back({step.item_id, step.size});
          const auto best = brute_knapsack(items, k, mode);
          ++knapsack_cases;
          c.require(best.objective == cert.opt_profit,
                    "thm1 k=" + std::to_string(k) + " " + name + " opt " +
                        cert.opt_profit.to_string() + " vs " + best.objective.to_string());
        }
      }
      auto alg = make_knapsack_algorithm(name, seed);
      const auto cert = run_thm2(*alg, k);
      if (cert.transcript.size() <= kMaxKnapsackOracleItems) {
        const auto items = thm2_instance(k, cert.branch);
        ++knapsack_cases;
        c.require(brute_knapsack(items, k, ProfitMode::kProportional).objective ==
                      cert.opt_profit,
                  "thm2 k=" + std::to_string(k));
      }
    }
  }

  auto check_thm3 = [&](MpasAlgorithm& alg) {
    const auto cert = run_thm3(alg, 1);
    if (cert.transcript.size() > kMaxBinPackingOracleItems) return;
    std::vector<EpsRational> sizes;
    for (const auto& a : cert.transcript) sizes.push_back(a.size);
    ++mpas_cases;
    c.require(brute_bin_packing(sizes) == cert.opt_upper,
              "thm3 " + alg.name() + " opt " + std::to_string(cert.opt_upper));
  };
  for (const auto& name : baseline_names(Problem::kMpas)) {
    auto alg = make_mpas_algorithm(name, 5);
    check_thm3(*alg);
  }
  for (std::int64_t quota = 0; quota <= 12; ++quota) {
    testing::QuotaMpas alg(1, quota);
    check_thm3(alg);
  }

  for (std::int64_t n = 4; n <= 10; n += 2) {
    for (std::int64_t m = 1; m <= 4; ++m) {
      for (std::int64_t q = 1; q <= n / 2; ++q) {
        if ((m * n) % q != 0) continue;
        const std::int64_t extra = q == n / 2 ? 0 : m * n / q;
        if (n * m + extra > static_cast<std::int64_t>(kMaxBinPackingOracleItems)) continue;
        std::vector<EpsRational> sizes(n * m, EpsRational(Rational(1, n)));
        for (std::int64_t i = 0; i < extra; ++i) sizes.push_back(EpsRational(Rational(n - q, n)));
        const auto opt = construct_opt_thm4(n, m, q);
        ++mpas_cases;
        c.require(brute_bin_packing(sizes) == opt.cost,
                  "thm4 N=" + std::to_string(n) + " M=" + std::to_string(m) +
                      " q=" + std::to_string(q));
      }
    }
  }
  return c.outcome(std::to_string(knapsack_cases) + " knapsack and " +
                   std::to_string(mpas_cases) + " MPAS instances");
}

Outcome model_invariants() {
  Checker c;
  testing::SizeGen gen(424242);
  long steps = 0;
  for (int game = 0; game < kFuzzGames; ++game) {
    const int k = gen.uniform(1, 4);
    RandomCompliant alg(game);
    KnapsackGame g(k);
    const int n = gen.uniform(1, 12);
    for (int i = 0; i < n; ++i) {
      const KnapsackState before = g.state();
      const Item item{i, gen.size()};
      const Action action = g.offer(alg, item.size);
      ++steps;
      c.require(testing::reference_legal(before, item, action),
                "game " + std::to_string(game) + " action " + action.to_string());
      for (int b = 0; b < k; ++b) {
        c.require(g.state().load(b) <= EpsRational(1), "load above capacity");
      }
    }
  }

  for (int trial = 0; trial < kFuzzProfiles; ++trial) {
    const int n = gen.uniform(0, 14);
    std::vector<IntervalAssignment> as;
    EpsRational total;
    for (int i = 0; i < n; ++i) {
      const EpsRational size = gen.size(10);
      EpsRational offset(Rational(gen.uniform(0, 20), 20));
      if (gen.uniform(0, 2) == 0) offset += EpsRational::epsilon(Rational(gen.uniform(-3, 3)));
      const EpsRational room = EpsRational(1) - size;
      if (offset > room) offset = room;
      if (offset < EpsRational(0)) offset = EpsRational(0);
      as.push_back({i, size, offset});
      total += size;
    }
    const auto f = build_profile(as);
    const auto g = rearrange(f);
    c.require(integral(f) == total, "integral of f");
    c.require(integral(g) == integral(f), "integral of g");
    c.require(peak(f) == g.value_at(EpsRational(0)), "peak = g(0)");
    for (std::int64_t v = 1; v <= peak(f); ++v) {
      c.require(f.measure_at_least(v) == g.measure_at_least(v), "layer measure");
    }
  }
  return c.outcome(std::to_string(kFuzzGames) + " games/" + std::to_string(steps) +
                   " moves, " + std::to_string(kFuzzProfiles) + " profiles");
}

Outcome determinism() {
  Checker c;
  std::vector<json> certs;
  for (int k = 2; k <= 6; ++k) {
    for (const auto& name : baseline_names(Problem::kKnapsack)) {
      auto a1 = make_knapsack_algorithm(name, 100 + k);
      certs.push_back(to_json(run_thm1(*a1, k)));
      auto a2 = make_knapsack_algorithm(name, 200 + k);
      certs.push_back(to_json(run_thm2(*a2, k)));
    }
  }
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (const auto& name : baseline_names(Problem::kMpas)) {
      auto alg = make_mpas_algorithm(name, 300 + n);
      certs.push_back(to_json(run_thm3(*alg, n)));
    }
    for (std::int64_t quota : {2 * n + 1, 3 * n, 5 * n}) {
      testing::QuotaMpas alg(n, quota);
      certs.push_back(to_json(run_thm3(alg, n)));
    }
  }
  for (const auto& name : baseline_names(Problem::kMpas)) {
    auto alg = make_mpas_algorithm(name, 400);
    certs.push_back(to_json(run_thm4(*alg, 12, 5, 3)));
  }
  for (const auto& cert : certs) {
    const json parsed = json::parse(cert.dump());
    const auto outcome = replay_certificate(parsed);
    const std::string label = parsed.at("adversary").get<std::string>() + " " +
                              parsed.at("algorithm").at("name").get<std::string>();
    c.require(outcome.identical(), label + " replay ratio");
    c.require(ratio_consistent(parsed), label + " recomputed ratio");
    c.require(outcome.certificate.at("ratio") == parsed.at("ratio"), label + " serialized ratio");
  }
  return c.outcome(std::to_string(certs.size()) + " certificates replayed");
}

}  // namespace
}  // namespace lbforge

int main() {
  using lbforge::Outcome;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"constants", lbforge::constants},
      {"small-k table", lbforge::small_k_table},
      {"universal knapsack lower bounds", lbforge::universal_knapsack},
      {"deterministic MPAS bound", lbforge::mpas_deterministic},
      {"Yao certificate", lbforge::yao_certificate},
      {"oracle equivalence", lbforge::oracle_equivalence},
      {"model invariants", lbforge::model_invariants},
      {"replay determinism", lbforge::determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", index, name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
