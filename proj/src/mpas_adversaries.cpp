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

#include "lbforge/mpas_adversaries.hpp"

#include <future>
#include <stdexcept>

#include "lbforge/bounds.hpp"
#include "lbforge/errors.hpp"
#include "lbforge/oracles.hpp"

namespace lbforge {

namespace {

const EpsRational kOne(1);
const EpsRational kHalf(Rational(1, 2));

MpasOpt finish(std::vector<IntervalAssignment> assignments, std::int64_t stated_cost) {
  if (!verify_assignment(assignments)) {
    throw InfeasibleConstruction("constructed schedule leaves [0,1)");
  }
  const std::int64_t cost = peak(build_profile(assignments));
  if (cost > stated_cost) {
    throw InfeasibleConstruction("constructed schedule has peak " + std::to_string(cost) +
                                 ", expected at most " + std::to_string(stated_cost));
  }
  return {std::move(assignments), cost};
}

}  // namespace

const char* to_string(Thm3Branch b) {
  switch (b) {
    case Thm3Branch::kStopHigh: return "stop-high";
    case Thm3Branch::kStopLow: return "stop-low";
    case Thm3Branch::kTwoThirds: return "two-thirds";
    case Thm3Branch::kThetaItems: return "theta-items";
  }
  return "?";
}

EpsRational thm3_alpha() { return make(Rational(1, 3), Rational(-2)); }
EpsRational thm3_beta() { return make(Rational(1, 3), Rational(-1)); }

Thm3Certificate run_thm3(MpasAlgorithm& alg, std::int64_t n) {
  if (n < 1) throw InvalidRequest("N must be at least 1");
  Thm3Certificate cert;
  cert.n = n;
  cert.algorithm = alg.name();
  cert.seed = alg.seed();

  MpasGame game;
  AdaptiveSizer sizer(thm3_alpha(), thm3_beta());
  for (std::int64_t i = 0; i < 12 * n; ++i) {
    const auto& a = game.place(alg, sizer.next_size());
    const SizeClass cls = a.contains(kHalf) ? SizeClass::kSmallish : SizeClass::kLargish;
    if (cls == SizeClass::kSmallish) {
      ++cert.q;
    } else if (a.end() <= kHalf) {
      ++cert.low;
    } else {
      ++cert.high;
    }
    sizer.classify(cls);
    cert.classes.push_back(cls);
  }
  cert.theta = sizer.threshold();

  const std::int64_t q = cert.q;
  if (q >= 5 * n) {
    cert.branch = Thm3Branch::kStopHigh;
  } else if (q <= 2 * n) {
    cert.branch = Thm3Branch::kStopLow;
  } else if (q >= 3 * n) {
    cert.branch = Thm3Branch::kTwoThirds;
  } else {
    cert.branch = Thm3Branch::kThetaItems;
  }

  if (cert.branch == Thm3Branch::kTwoThirds) {
    const EpsRational size(Rational(2, 3));
    for (std::int64_t i = 0; i < 12 * n; ++i) game.place(alg, size);
  } else if (cert.branch == Thm3Branch::kThetaItems) {
    cert.q_prime = 3 * (q / 3);
    const EpsRational size = kOne - cert.theta;
    for (std::int64_t i = 0; i < cert.q_prime; ++i) game.place(alg, size);
  }

  cert.transcript = game.assignments();
  cert.alg_peak = peak(build_profile(cert.transcript));

  std::vector<Item> phase1;
  std::vector<Item> phase2;
  for (const auto& a : cert.transcript) {
    (a.item_id < 12 * n ? phase1 : phase2).push_back({a.item_id, a.size});
  }
  auto opt = construct_opt_thm3(phase1, phase2, cert.branch, cert.theta, n, cert.q_prime);
  cert.opt_upper = opt.cost;
  cert.opt_assignment = std::move(opt.assignments);
  cert.ratio = Rational(cert.alg_peak, cert.opt_upper);
  cert.reference_bound = thm3_bound(n);
  return cert;
}

MpasOpt construct_opt_thm3(std::span<const Item> phase1, std::span<const Item> phase2,
                           Thm3Branch branch, const EpsRational& theta, std::int64_t n,
                           std::int64_t q_prime) {
  if (static_cast<std::int64_t>(phase1.size()) != 12 * n) {
    throw InfeasibleConstruction("phase one must hold 12N items");
  }
  const EpsRational thirds[3] = {EpsRational(0), EpsRational(Rational(1, 3)),
                                 EpsRational(Rational(2, 3))};
  std::vector<IntervalAssignment> out;

  switch (branch) {
    case Thm3Branch::kStopHigh:
    case Thm3Branch::kStopLow: {
      for (std::size_t i = 0; i < phase1.size(); ++i) {
        out.push_back({phase1[i].id, phase1[i].size, thirds[i % 3]});
      }
      return finish(std::move(out), 4 * n);
    }
    case Thm3Branch::kTwoThirds: {
      for (const auto& item : phase1) out.push_back({item.id, item.size, EpsRational(0)});
      for (const auto& item : phase2) out.push_back({item.id, item.size, thirds[1]});
      return finish(std::move(out), 12 * n);
    }
    case Thm3Branch::kThetaItems: {
      if (q_prime % 3 != 0 || static_cast<std::int64_t>(phase2.size()) != q_prime) {
        throw InfeasibleConstruction("theta branch needs Q' divisible by 3 items of 1-theta");
      }
      std::int64_t paired = 0;
      std::size_t slot = 0;
      for (const auto& item : phase1) {
        if (paired < q_prime && item.size < theta) {
          out.push_back({item.id, item.size, EpsRational(0)});
          ++paired;
        } else {
          out.push_back({item.id, item.size, thirds[slot++ % 3]});
        }
      }
      if (paired < q_prime) throw InfeasibleConstruction("fewer than Q' smallish items");
      for (const auto& item : phase2) out.push_back({item.id, item.size, theta});
      return finish(std::move(out), (12 * n + 2 * q_prime) / 3);
    }
  }
  throw std::logic_error("unhandled branch");
}

Thm3Certificate replay_thm3(const Thm3Certificate& cert) {
  ScriptedMpasAlgorithm script;
  for (const auto& a : cert.transcript) script.record(a.item_id, a.size, a.offset);
  Thm3Certificate again = run_thm3(script, cert.n);
  again.algorithm = cert.algorithm;
  again.seed = cert.seed;
  return again;
}

// ---------------------------------------------------------------------------

namespace {

void check_thm4_params(std::int64_t n, std::int64_t m, std::int64_t t) {
  if (n < 4 || n % 2 != 0) throw InvalidRequest("N must be even and at least 4");
  if (m < 1) throw InvalidRequest("M must be at least 1");
  if (t < 1 || t > n / 2 - 1) throw InvalidRequest("t must lie in [1, N/2 - 1]");
  for (std::int64_t q = t; q <= n / 2 - 1; ++q) {
    if ((m * n) % q != 0) {
      throw InvalidRequest("DivisibilityViolated: " + std::to_string(q) +
                           " does not divide MN = " + std::to_string(m * n));
    }
  }
}

}  // namespace

MpasOpt construct_opt_thm4(std::int64_t n, std::int64_t m, std::int64_t q) {
  if (n < 4 || n % 2 != 0 || q < 1 || q > n / 2 || (m * n) % q != 0) {
    throw InvalidRequest("invalid instance parameters");
  }
  const std::int64_t group = m * n / q;
  std::vector<IntervalAssignment> out;
  int id = 0;
  const EpsRational unit(Rational(1, n));
  for (std::int64_t j = 0; j < q; ++j) {
    for (std::int64_t i = 0; i < group; ++i) {
      out.push_back({id++, unit, EpsRational(Rational(j, n))});
    }
  }
  // The prefix-only instance spreads the same MN items over N slots of M.
  if (q == n / 2) {
    out.clear();
    id = 0;
    for (std::int64_t j = 0; j < n; ++j) {
      for (std::int64_t i = 0; i < m; ++i) {
        out.push_back({id++, unit, EpsRational(Rational(j, n))});
      }
    }
    return finish(std::move(out), m);
  }
  const EpsRational long_size(Rational(n - q, n));
  for (std::int64_t i = 0; i < group; ++i) {
    out.push_back({id++, long_size, EpsRational(Rational(q, n))});
  }
  return finish(std::move(out), group);
}

YaoCertificate run_thm4(MpasAlgorithm& alg, std::int64_t n, std::int64_t m, std::int64_t t) {
  check_thm4_params(n, m, t);
  YaoCertificate cert;
  cert.n = n;
  cert.m = m;
  cert.t = t;
  cert.algorithm = alg.name();
  cert.seed = alg.seed();

  MpasGame prefix;
  const EpsRational unit(Rational(1, n));
  for (std::int64_t i = 0; i < n * m; ++i) prefix.place(alg, unit);
  cert.prefix = prefix.assignments();
  const CoverageProfile f = build_profile(cert.prefix);
  const Rearrangement g = rearrange(f);

  std::vector<std::future<YaoInstance>> pending;
  for (std::int64_t q = t; q <= n / 2 - 1; ++q) {
    std::shared_ptr<MpasAlgorithm> fork = alg.snapshot();
    if (!fork) throw InvalidRequest("SnapshotUnsupported: " + alg.name() + " cannot be forked");
    pending.push_back(std::async(std::launch::async, [=, &prefix, &g]() {
      MpasGame game = prefix;
      const std::int64_t count = m * n / q;
      const EpsRational size(Rational(n - q, n));
      for (std::int64_t i = 0; i < count; ++i) game.place(*fork, size);
      YaoInstance inst;
      inst.q = q;
      inst.probability = Rational(2, n);
      inst.alg_cost = peak(build_profile(game.assignments()));
      inst.opt_cost = construct_opt_thm4(n, m, q).cost;
      inst.analytic_lower = g.value_at(EpsRational(Rational(2 * q, n))) + count;
      inst.continuation.assign(game.assignments().begin() + n * m, game.assignments().end());
      return inst;
    }));
  }
  for (auto& p : pending) cert.instances.push_back(p.get());

  YaoInstance alone;
  alone.q = n / 2;
  alone.probability = Rational(2 * t, n);
  alone.alg_cost = peak(f);
  alone.opt_cost = construct_opt_thm4(n, m, n / 2).cost;
  alone.analytic_lower = g.value_at(EpsRational(0));
  cert.instances.push_back(std::move(alone));

  for (const auto& inst : cert.instances) {
    cert.e_alg += inst.probability * Rational(inst.alg_cost);
    cert.e_opt += inst.probability * Rational(inst.opt_cost);
  }
  cert.ratio = cert.e_alg / cert.e_opt;
  cert.reference_bound = finite_n_bound(n, t);
  return cert;
}

YaoCertificate replay_thm4(const YaoCertificate& cert) {
  ScriptedMpasAlgorithm script;
  for (const auto& a : cert.prefix) script.record(a.item_id, a.size, a.offset);
  for (const auto& inst : cert.instances) {
    for (const auto& a : inst.continuation) script.record(a.item_id, a.size, a.offset);
  }
  YaoCertificate again = run_thm4(script, cert.n, cert.m, cert.t);
  again.algorithm = cert.algorithm;
  again.seed = cert.seed;
  return again;
}

}  // namespace lbforge
