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

#include "lbforge/bounds.hpp"

#include <cmath>
#include <optional>
#include <utility>

#include "lbforge/errors.hpp"

namespace lbforge {

int gamma_threshold(int k) {
  if (k < 1) throw InvalidRequest("gamma_threshold needs k >= 1");
  const std::int64_t kk = k;
  std::int64_t g = 0;
  while ((2 * g + 5 * kk) * (2 * g + 5 * kk) < 33 * kk * kk) ++g;
  return static_cast<int>(g);
}

Rational big_items_bound(int k, int gamma) {
  return Rational(2 * k, 2 * k - gamma);
}

Rational theta_items_bound(int k, int gamma) {
  return Rational(3 * k + gamma - (k - gamma) % 2, 2 * k + 2 * gamma);
}

const char* to_string(BranchRule r) {
  return r == BranchRule::kThreshold ? "threshold" : "best-bound";
}

bool chooses_big_items(int k, int gamma, BranchRule rule) {
  if (rule == BranchRule::kThreshold) return gamma >= gamma_threshold(k);
  return big_items_bound(k, gamma) >= theta_items_bound(k, gamma);
}

Rational thm1_guarantee(int k, BranchRule rule) {
  if (k < 2) throw InvalidRequest("the knapsack adversary needs k >= 2");
  std::optional<Rational> best;
  for (int g = 0; g <= k / 2; ++g) {
    Rational v = chooses_big_items(k, g, rule) ? big_items_bound(k, g)
                                               : theta_items_bound(k, g);
    if (!best || v < *best) best = std::move(v);
  }
  return *best;
}

long double thm1_constant() {
  return 0.75L + std::sqrt(33.0L) / 12.0L;
}

Rational thm2_bound(int k) {
  if (k < 2) throw InvalidRequest("the knapsack adversary needs k >= 2");
  if (k % 2 == 0) return Rational(6, 5);
  return Rational(6 * k, 5 * k - 1);
}

Rational thm3_bound(std::int64_t n) {
  return Rational(5, 4) - Rational(1, 6 * n);
}

namespace {

// sum_{q=lo}^{hi-1} 1/q as an unreduced fraction.
std::pair<BigInt, BigInt> harmonic_range(std::int64_t lo, std::int64_t hi) {
  if (hi - lo == 1) return {BigInt(1), BigInt(lo)};
  const std::int64_t mid = lo + (hi - lo) / 2;
  auto [p1, q1] = harmonic_range(lo, mid);
  auto [p2, q2] = harmonic_range(mid, hi);
  return {p1 * q2 + p2 * q1, q1 * q2};
}

void check_yao_params(std::int64_t n, std::int64_t t) {
  if (n < 4 || n % 2 != 0) throw InvalidRequest("N must be even and at least 4");
  if (t < 1 || t > n / 2 - 1) throw InvalidRequest("t must lie in [1, N/2 - 1]");
}

}  // namespace

Rational finite_n_bound(std::int64_t n, std::int64_t t) {
  check_yao_params(n, t);
  auto [p, q] = harmonic_range(t, n / 2);
  // Both sides scaled by 2NQ.
  const BigInt big_n(n);
  BigInt num = big_n * q + 2 * big_n * p;
  BigInt den = 2 * BigInt(t) * q + 2 * big_n * p;
  return Rational(num, den);
}

std::int64_t best_t(std::int64_t n) {
  check_yao_params(n, 1);
  const std::int64_t hi = n / 2 - 1;
  constexpr std::int64_t kExactScanLimit = 2000;
  if (n <= kExactScanLimit) {
    Rational sum(0);
    std::int64_t arg = hi;
    Rational best;
    for (std::int64_t t = hi; t >= 1; --t) {
      sum += Rational(1, t);
      Rational v = (Rational(1, 2) + sum) / (Rational(t, n) + sum);
      if (t == hi || v >= best) {
        best = std::move(v);
        arg = t;
      }
    }
    return arg;
  }
  // Floating scan to localize the maximum, then an exact comparison of the
  // neighbourhood.
  double sum = 0;
  double best = -1;
  std::int64_t guess = hi;
  for (std::int64_t t = hi; t >= 1; --t) {
    sum += 1.0 / static_cast<double>(t);
    const double v = (0.5 + sum) / (static_cast<double>(t) / n + sum);
    if (v >= best) {
      best = v;
      guess = t;
    }
  }
  std::int64_t arg = -1;
  Rational exact_best;
  for (std::int64_t t = std::max<std::int64_t>(1, guess - 2);
       t <= std::min(hi, guess + 2); ++t) {
    Rational v = finite_n_bound(n, t);
    if (arg < 0 || v > exact_best) {
      exact_best = std::move(v);
      arg = t;
    }
  }
  return arg;
}

double tau_objective(double tau) {
  return 1.0 + (0.5 - tau) / (tau - std::log(2.0 * tau));
}

BoundSolution solve_tau_r(double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = 0.5;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = tau_objective(c);
  double fd = tau_objective(d);
  int iterations = 0;
  while (hi - lo > tolerance) {
    ++iterations;
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = tau_objective(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = tau_objective(d);
    }
  }
  const double tau = (lo + hi) / 2.0;
  return {tau, tau_objective(tau), iterations};
}

}  // namespace lbforge
