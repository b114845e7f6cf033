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

#include <iostream>

#include "CLI11.hpp"
#include "lbforge/cli.hpp"

namespace {

void add_common(CLI::App* sub, lbforge::RunRequest& req) {
  sub->add_option("--seed", req.seed, "RNG seed (default: $LBFORGE_SEED or 0)");
  sub->add_option("-o,--output", req.output, "Write the result here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  lbforge::RunRequest req;
  CLI::App app{"lbforge: adversarial lower-bound certificates for online packing"};
  app.require_subcommand(1);

  auto* knap = app.add_subcommand("knapsack-lb", "Run a removable-knapsack adversary");
  knap->add_option("--adversary", req.adversary, "thm1 or thm2")->required();
  knap->add_option("--alg", req.alg, "Baseline name")->required();
  knap->add_option("--k", req.k, "Number of bins")->required();
  knap->add_option("--trials", req.trials, "Seeded repetitions (thm2 estimated mode)");
  knap->add_option("--mode", req.mode, "proportional or unit (thm1)");
  knap->add_option("--rule", req.rule, "threshold or best-bound (thm1)");
  knap->add_flag("!--no-transcript", req.transcript, "Omit the transcript");
  add_common(knap, req);

  auto* mpas = app.add_subcommand("mpas-lb", "Run an appointment-scheduling adversary");
  mpas->add_option("--adversary", req.adversary, "thm3 or thm4")->required();
  mpas->add_option("--alg", req.alg, "Baseline name")->required();
  mpas->add_option("--N", req.n, "Instance scale")->required();
  mpas->add_option("--M", req.m, "Prefix multiplicity (thm4, default 1)");
  mpas->add_option("--t", req.t, "Smallest continuation index (thm4, default best)");
  mpas->add_flag("!--no-transcript", req.transcript, "Omit the transcript");
  add_common(mpas, req);

  auto* bounds = app.add_subcommand("bounds", "Print the limiting constants and small-k table");
  bounds->add_option("--kmax", req.kmax, "Largest k in the table");

  auto* oracle = app.add_subcommand("oracle", "Solve a small instance file exactly");
  oracle->add_option("--problem", req.problem, "knapsack or mpas");
  oracle->add_option("--instance", req.instance, "One size per line: a/b [c/d]")->required();
  oracle->add_option("--k", req.k, "Number of bins (knapsack)");
  oracle->add_option("--mode", req.mode, "proportional or unit");

  auto* table = app.add_subcommand("table", "CSV of exact and measured knapsack ratios");
  table->add_option("--kmax", req.kmax, "Largest k");
  add_common(table, req);

  auto* replay = app.add_subcommand("replay", "Replay a certificate from its transcript");
  replay->add_option("certificate", req.certificate, "Certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lbforge::kExitInvalidRequest;
  }
  req.command = app.get_subcommands().front()->get_name();
  return lbforge::run(req, std::cout, std::cerr);
}
