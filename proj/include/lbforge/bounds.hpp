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

// Closed-form lower-bound values guaranteed by the adversaries.

#ifndef LBFORGE_BOUNDS_HPP
#define LBFORGE_BOUNDS_HPP

#include <cstdint>

#include "lbforge/numerics.hpp"

namespace lbforge {

// ---- removable knapsack, deterministic two-phase adversary ----

// Smallest gamma >= 0 with (2*gamma + 5k)^2 >= 33k^2, i.e. the integer
// form of gamma >= k(sqrt(33) - 5)/2. Requires k >= 1.
int gamma_threshold(int k);

// Ratio forced by k items of size 1 - beta when gamma bins hold two items.
Rational big_items_bound(int k, int gamma);

// Ratio forced by the 1 - theta items:
// (3k + gamma - ((k - gamma) mod 2)) / (2k + 2gamma).
Rational theta_items_bound(int k, int gamma);

// How the adversary picks its second phase from gamma.
enum class BranchRule {
  kThreshold,  // big items iff gamma >= gamma_threshold(k)
  kBestBound,  // whichever branch forces the larger ratio (ties: big items)
};

const char* to_string(BranchRule r);

// True iff the adversary issues the big items for this gamma.
bool chooses_big_items(int k, int gamma, BranchRule rule);

// min over gamma in [0, floor(k/2)] of the bound of the branch the rule picks.
Rational thm1_guarantee(int k, BranchRule rule = BranchRule::kThreshold);

// The min-max value: min over gamma of max(both branch bounds).
inline Rational thm1_table_value(int k) {
  return thm1_guarantee(k, BranchRule::kBestBound);
}

// 3/4 + sqrt(33)/12.
long double thm1_constant();

// ---- removable knapsack, randomized two-size adversary ----

// 6/5 for even k, 6k/(5k - 1) for odd k.
Rational thm2_bound(int k);

// ---- MPAS ----

// 5/4 - 1/(6N).
Rational thm3_bound(std::int64_t n);

// (1/2 + S) / (t/N + S) with S = sum_{q=t}^{N/2-1} 1/q, exact. Uses binary
// splitting so that N in the millions stays affordable.
// Requires N even and 1 <= t <= N/2 - 1; throws InvalidRequest otherwise.
Rational finite_n_bound(std::int64_t n, std::int64_t t);

// argmax over t of finite_n_bound(n, t); smallest t on ties.
std::int64_t best_t(std::int64_t n);

// R(tau) = 1 + (1/2 - tau) / (tau - ln(2 tau)) on (0, 1/2].
double tau_objective(double tau);

struct BoundSolution {
  double tau = 0;
  double r = 0;
  int iterations = 0;
};

// Maximizes tau_objective over (0, 1/2) by golden-section search.
BoundSolution solve_tau_r(double tolerance = 1e-9);

}  // namespace lbforge

#endif  // LBFORGE_BOUNDS_HPP
