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

#include "lbforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "lbforge/baselines.hpp"
#include "lbforge/bounds.hpp"
#include "lbforge/certificate.hpp"
#include "lbforge/errors.hpp"
#include "lbforge/knapsack_adversaries.hpp"
#include "lbforge/mpas_adversaries.hpp"
#include "lbforge/oracles.hpp"

namespace lbforge {

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InvalidRequest(std::string(kSeedEnv) + " is not an unsigned integer");
  }
}

namespace {

std::string decimal(const Rational& r, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << r.convert_to<double>();
  return os.str();
}

ProfitMode parse_mode(const std::string& s) {
  if (s == "proportional") return ProfitMode::kProportional;
  if (s == "unit") return ProfitMode::kUnit;
  throw InvalidRequest("--mode must be proportional or unit");
}

BranchRule parse_rule(const std::string& s) {
  if (s == "threshold") return BranchRule::kThreshold;
  if (s == "best-bound") return BranchRule::kBestBound;
  throw InvalidRequest("--rule must be threshold or best-bound");
}

template <typename T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw InvalidRequest(std::string("missing ") + flag);
  return *v;
}

// Writes the certificate and reports a summary; returns the exit code.
int emit(const RunRequest& req, const json& cert, std::ostream& out, std::ostream& err) {
  std::ostringstream summary;
  summary << cert.at("adversary").get<std::string>() << " "
          << cert.at("parameters").dump() << " alg=" << cert.at("algorithm").at("name").get<std::string>()
          << " ratio=" << cert.at("ratio").get<std::string>() << " ("
          << decimal(rational_from_json(cert.at("ratio"))) << ") reference="
          << cert.at("reference_bound").get<std::string>() << " ("
          << decimal(rational_from_json(cert.at("reference_bound"))) << ") "
          << (cert.at("pass").get<bool>() ? "PASS" : "FAIL");
  if (req.output.empty()) {
    out << cert.dump(2) << "\n";
    err << summary.str() << "\n";
  } else {
    std::ofstream file(req.output);
    if (!file) throw InvalidRequest("cannot write " + req.output);
    file << cert.dump(2) << "\n";
    out << summary.str() << "\n";
  }
  return cert.at("pass").get<bool>() ? kExitPass : kExitBelowBound;
}

int run_knapsack(const RunRequest& req, std::uint64_t seed, std::ostream& out,
                 std::ostream& err) {
  const int k = require(req.k, "--k");
  if (k < 1) throw InvalidRequest("--k must be at least 1");
  if (req.alg.empty()) throw InvalidRequest("missing --alg");
  if (req.adversary == "thm1") {
    auto alg = make_knapsack_algorithm(req.alg, seed);
    const auto cert = run_thm1(*alg, k, {parse_mode(req.mode), parse_rule(req.rule)});
    return emit(req, to_json(cert, req.transcript), out, err);
  }
  if (req.adversary == "thm2") {
    if (req.trials < 1) throw InvalidRequest("--trials must be positive");
    if (req.trials == 1) {
      auto alg = make_knapsack_algorithm(req.alg, seed);
      return emit(req, to_json(run_thm2(*alg, k), req.transcript), out, err);
    }
    make_knapsack_algorithm(req.alg, seed);  // reject unknown names up front
    const std::string name = req.alg;
    const auto cert = run_thm2_estimated(
        [name](std::uint64_t s) { return make_knapsack_algorithm(name, s); }, k, req.trials,
        seed);
    return emit(req, to_json(cert, req.transcript), out, err);
  }
  throw InvalidRequest("knapsack-lb needs --adversary thm1 or thm2");
}

int run_mpas(const RunRequest& req, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (req.alg.empty()) throw InvalidRequest("missing --alg");
  auto alg = make_mpas_algorithm(req.alg, seed);
  const std::int64_t n = require(req.n, "--N");
  if (req.adversary == "thm3") {
    return emit(req, to_json(run_thm3(*alg, n), req.transcript), out, err);
  }
  if (req.adversary == "thm4") {
    const std::int64_t m = req.m.value_or(1);
    const std::int64_t t = req.t ? *req.t : best_t(n);
    return emit(req, to_json(run_thm4(*alg, n, m, t), req.transcript), out, err);
  }
  throw InvalidRequest("mpas-lb needs --adversary thm3 or thm4");
}

int run_bounds(const RunRequest& req, std::ostream& out) {
  const int kmax = std::max(req.kmax, 2);
  const BoundSolution sol = solve_tau_r();
  out << std::setprecision(10) << "thm1_constant " << static_cast<double>(thm1_constant())
      << "\n";
  out << "tau " << sol.tau << "\n";
  out << "R " << sol.r << "\n";
  out << "k,thm1,thm1_decimal,thm2,thm2_decimal\n";
  for (int k = 2; k <= kmax; ++k) {
    const Rational a = thm1_table_value(k);
    const Rational b = thm2_bound(k);
    out << k << "," << format_rational(a) << "," << decimal(a) << "," << format_rational(b)
        << "," << decimal(b) << "\n";
  }
  return kExitPass;
}

EpsRational parse_eps(const std::string& line) {
  std::istringstream is(line);
  std::string std_part;
  std::string inf_part;
  is >> std_part;
  if (!(is >> inf_part)) inf_part = "0";
  std::string extra;
  if (is >> extra) throw InvalidRequest("too many fields in '" + line + "'");
  try {
    return EpsRational(parse_rational(std_part), parse_rational(inf_part));
  } catch (const std::invalid_argument&) {
    throw InvalidRequest("cannot parse item '" + line + "'");
  }
}

int run_oracle(const RunRequest& req, std::ostream& out) {
  std::ifstream in(req.instance);
  if (!in) throw InvalidRequest("cannot read instance file '" + req.instance + "'");
  std::vector<EpsRational> sizes;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    sizes.push_back(parse_eps(line));
  }
  json result;
  if (req.problem == "knapsack") {
    const int k = require(req.k, "--k");
    std::vector<Item> items;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      items.push_back({static_cast<int>(i), sizes[i]});
    }
    const auto sol = brute_knapsack(items, k, parse_mode(req.mode));
    result = {{"problem", "knapsack"}, {"k", k}, {"bins", sol.bins}, {"objective", sol.objective}};
  } else if (req.problem == "mpas") {
    result = {{"problem", "mpas"}, {"peak", brute_bin_packing(sizes)}};
  } else {
    throw InvalidRequest("--problem must be knapsack or mpas");
  }
  out << result.dump(2) << "\n";
  return kExitPass;
}

int run_table(const RunRequest& req, std::uint64_t seed, std::ostream& out) {
  if (req.kmax < 2) throw InvalidRequest("--kmax must be at least 2");
  const std::string csv = table_csv(req.kmax, seed);
  if (req.output.empty()) {
    out << csv;
  } else {
    std::ofstream file(req.output);
    if (!file) throw InvalidRequest("cannot write " + req.output);
    file << csv;
  }
  return kExitPass;
}

int run_replay(const RunRequest& req, std::ostream& out) {
  std::ifstream in(req.certificate);
  if (!in) throw InvalidRequest("cannot read certificate '" + req.certificate + "'");
  json cert;
  try {
    in >> cert;
  } catch (const json::exception& e) {
    throw InvalidRequest(std::string("malformed certificate: ") + e.what());
  }
  const auto outcome = replay_certificate(cert);
  out << "recorded=" << format_rational(outcome.recorded)
      << " replayed=" << format_rational(outcome.replayed) << " "
      << (outcome.identical() ? "IDENTICAL" : "MISMATCH") << "\n";
  return outcome.identical() ? kExitPass : kExitContractViolation;
}

}  // namespace

std::string table_csv(int kmax, std::uint64_t seed) {
  if (kmax < 2) throw InvalidRequest("kmax must be at least 2");
  const auto names = baseline_names(Problem::kKnapsack);

  struct Cell {
    Rational thm1;
    Rational thm2;
  };
  // Keyed by (k, algorithm) so assembly order never depends on scheduling.
  std::map<std::pair<int, std::string>, std::future<Cell>> pending;
  for (int k = 2; k <= kmax; ++k) {
    for (const auto& name : names) {
      pending.emplace(std::make_pair(k, name), std::async(std::launch::async, [=] {
                        auto a1 = make_knapsack_algorithm(name, seed);
                        auto a2 = make_knapsack_algorithm(name, seed);
                        return Cell{run_thm1(*a1, k).ratio_limit, run_thm2(*a2, k).ratio};
                      }));
    }
  }

  std::ostringstream os;
  os << "k,thm1,thm1_decimal,thm2,thm2_decimal";
  for (const auto& name : names) os << ",thm1_" << name << ",thm2_" << name;
  os << ",seed\n";
  for (int k = 2; k <= kmax; ++k) {
    const Rational a = thm1_table_value(k);
    const Rational b = thm2_bound(k);
    os << k << "," << format_rational(a) << "," << decimal(a) << "," << format_rational(b) << ","
       << decimal(b);
    for (const auto& name : names) {
      const Cell c = pending.at({k, name}).get();
      os << "," << format_rational(c.thm1) << "," << format_rational(c.thm2);
    }
    os << "," << seed << "\n";
  }
  return os.str();
}

int run(const RunRequest& req, std::ostream& out, std::ostream& err) {
  try {
    const std::uint64_t seed = req.seed ? *req.seed : default_seed();
    if (req.command == "knapsack-lb") return run_knapsack(req, seed, out, err);
    if (req.command == "mpas-lb") return run_mpas(req, seed, out, err);
    if (req.command == "bounds") return run_bounds(req, out);
    if (req.command == "oracle") return run_oracle(req, out);
    if (req.command == "table") return run_table(req, seed, out);
    if (req.command == "replay") return run_replay(req, out);
    throw InvalidRequest("unknown command '" + req.command + "'");
  } catch (const RefereeError& e) {
    err << "contract violation: " << e.what() << "\n";
    return kExitContractViolation;
  } catch (const InvalidAssignment& e) {
    err << "contract violation: " << e.what() << "\n";
    return kExitContractViolation;
  } catch (const InfeasibleConstruction& e) {
    err << "contract violation: " << e.what() << "\n";
    return kExitContractViolation;
  } catch (const InvalidRequest& e) {
    err << "invalid request: " << e.what() << "\n";
    return kExitInvalidRequest;
  } catch (const TooLarge& e) {
    err << "invalid request: " << e.what() << "\n";
    return kExitInvalidRequest;
  } catch (const SizerError& e) {
    err << "invalid request: " << e.what() << "\n";
    return kExitInvalidRequest;
  } catch (const json::exception& e) {
    err << "invalid request: " << e.what() << "\n";
    return kExitInvalidRequest;
  }
}

}  // namespace lbforge
