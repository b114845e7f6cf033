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

#ifndef LBFORGE_MPAS_ADVERSARIES_HPP
#define LBFORGE_MPAS_ADVERSARIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lbforge/adaptive_sizing.hpp"
#include "lbforge/mpas_core.hpp"
#include "lbforge/numerics.hpp"

namespace lbforge {

struct MpasOpt {
  std::vector<IntervalAssignment> assignments;
  std::int64_t cost = 0;
};

// ---------------------------------------------------------------------------
// Deterministic adversary. 12N adaptive items in (1/3 - 2e, 1/3 - e); an
// item is smallish iff its interval covers 1/2. With Q smallish items:
//   Q >= 5N         stop                              (kStopHigh)
//   Q <= 2N         stop                              (kStopLow)
//   3N <= Q < 5N    12N items of size 2/3             (kTwoThirds)
//   2N < Q < 3N     Q' = 3 floor(Q/3) items of 1-theta (kThetaItems)
// ---------------------------------------------------------------------------

enum class Thm3Branch { kStopHigh, kStopLow, kTwoThirds, kThetaItems };

const char* to_string(Thm3Branch b);

struct Thm3Certificate {
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t q_prime = 0;  // 0 unless kThetaItems
  std::int64_t low = 0;      // largish items ending at or before 1/2
  std::int64_t high = 0;     // largish items starting after 1/2
  Thm3Branch branch = Thm3Branch::kStopLow;
  EpsRational theta;
  std::string algorithm;
  std::optional<std::uint64_t> seed;
  std::int64_t alg_peak = 0;
  std::int64_t opt_upper = 0;
  Rational ratio;            // alg_peak / opt_upper
  Rational reference_bound;  // 5/4 - 1/(6N)
  std::vector<SizeClass> classes;
  std::vector<IntervalAssignment> transcript;
  std::vector<IntervalAssignment> opt_assignment;

  bool passes() const { return ratio >= reference_bound; }
};

EpsRational thm3_alpha();  // 1/3 - 2e
EpsRational thm3_beta();   // 1/3 - e

// Throws InvalidAssignment if the algorithm leaves [0,1), InvalidRequest if
// n < 1.
Thm3Certificate run_thm3(MpasAlgorithm& alg, std::int64_t n);

// Explicit offline schedule for a finished game; `phase2` holds the second
// phase sizes in arrival order with ids continuing after phase one. Throws
// InfeasibleConstruction if the schedule is invalid or costs more than the
// branch's stated value.
MpasOpt construct_opt_thm3(std::span<const Item> phase1, std::span<const Item> phase2,
                           Thm3Branch branch, const EpsRational& theta, std::int64_t n,
                           std::int64_t q_prime);

Thm3Certificate replay_thm3(const Thm3Certificate& cert);

// ---------------------------------------------------------------------------
// Yao-distribution adversary: a prefix of N*M items of size 1/N, then for
// q in [t, N/2-1] the instance I_q appends MN/q items of size 1 - q/N; the
// prefix alone is I_{N/2}. p_{N/2} = 2t/N and p_q = 2/N.
// ---------------------------------------------------------------------------

struct YaoInstance {
  std::int64_t q = 0;  // N/2 denotes the prefix-only instance
  Rational probability;
  std::int64_t alg_cost = 0;
  std::int64_t opt_cost = 0;
  // g(2q/N) + MN/q, or g(0) for the prefix-only instance.
  std::int64_t analytic_lower = 0;
  std::vector<IntervalAssignment> continuation;
};

struct YaoCertificate {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t t = 0;
  std::string algorithm;
  std::optional<std::uint64_t> seed;
  std::vector<IntervalAssignment> prefix;
  std::vector<YaoInstance> instances;  // q = t..N/2-1, then N/2
  Rational e_alg;
  Rational e_opt;
  Rational ratio;
  Rational reference_bound;  // finite_n_bound(N, t)

  bool passes() const { return ratio >= reference_bound; }
};

// Throws InvalidRequest when N is odd or < 4, t is out of [1, N/2-1], some q
// does not divide MN, or the algorithm cannot be snapshotted.
YaoCertificate run_thm4(MpasAlgorithm& alg, std::int64_t n, std::int64_t m, std::int64_t t);

// The offline schedule for I_q (q = N/2 for the prefix alone).
MpasOpt construct_opt_thm4(std::int64_t n, std::int64_t m, std::int64_t q);

YaoCertificate replay_thm4(const YaoCertificate& cert);

}  // namespace lbforge

#endif  // LBFORGE_MPAS_ADVERSARIES_HPP
