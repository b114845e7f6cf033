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

// Batch runner behind the lbforge executable. Argument parsing lives in the
// tool; everything here works on an already-parsed RunRequest so tests can
// drive it directly.

#ifndef LBFORGE_CLI_HPP
#define LBFORGE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace lbforge {

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitBelowBound = 1;
inline constexpr int kExitContractViolation = 2;
inline constexpr int kExitInvalidRequest = 3;

inline constexpr const char* kSeedEnv = "LBFORGE_SEED";

struct RunRequest {
  // knapsack-lb, mpas-lb, bounds, oracle, table, replay
  std::string command;
  std::string adversary;  // thm1..thm4
  std::string alg;
  std::optional<std::uint64_t> seed;  // falls back to $LBFORGE_SEED, then 0
  std::optional<int> k;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> t;  // defaults to best_t(N)
  int trials = 1;
  std::string output;              // certificate or CSV path; stdout if empty
  std::string mode = "proportional";
  std::string rule = "threshold";
  int kmax = 10;
  std::string instance;            // oracle input file
  std::string problem = "knapsack";
  bool transcript = true;
  std::string certificate;         // replay input
};

// Seed used when the request does not carry one.
std::uint64_t default_seed();

int run(const RunRequest& request, std::ostream& out, std::ostream& err);

// Exact Thm1/Thm2 columns plus measured ratios of every knapsack baseline
// for k = 2..kmax, one row per k.
std::string table_csv(int kmax, std::uint64_t seed);

}  // namespace lbforge

#endif  // LBFORGE_CLI_HPP
