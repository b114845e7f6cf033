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

#include "lbforge/certificate.hpp"

#include <stdexcept>

#include "lbforge/errors.hpp"

namespace lbforge {

void to_json(json& j, const EpsRational& x) {
  j = json{{"std", format_rational(x.standard_part())},
           {"inf", format_rational(x.infinitesimal_part())}};
}

void from_json(const json& j, EpsRational& x) {
  x = EpsRational(parse_rational(j.at("std").get<std::string>()),
                  parse_rational(j.at("inf").get<std::string>()));
}

json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

namespace {

json seed_json(const std::optional<std::uint64_t>& seed) {
  return seed ? json(*seed) : json(nullptr);
}

std::optional<std::uint64_t> seed_from(const json& j) {
  const auto& s = j.at("algorithm").at("seed");
  if (s.is_null()) return std::nullopt;
  return s.get<std::uint64_t>();
}

json umbrella(const char* adversary, json parameters, const std::string& alg,
              const std::optional<std::uint64_t>& seed, json measured, json optimum,
              const Rational& ratio, const Rational& reference, bool pass) {
  return json{
      {"schema", kCertificateSchema},
      {"adversary", adversary},
      {"parameters", std::move(parameters)},
      {"algorithm", {{"name", alg}, {"seed", seed_json(seed)}}},
      {"measured", std::move(measured)},
      {"optimum", std::move(optimum)},
      {"ratio", rational_to_json(ratio)},
      {"ratio_decimal", ratio.convert_to<double>()},
      {"reference_bound", rational_to_json(reference)},
      {"reference_decimal", reference.convert_to<double>()},
      {"tolerance", "0/1"},
      {"pass", pass},
  };
}

void expect_adversary(const json& j, const char* adversary) {
  if (!j.contains("schema") || j.at("schema") != kCertificateSchema) {
    throw InvalidRequest("not an lbforge/1 certificate");
  }
  if (j.at("adversary") != adversary) {
    throw InvalidRequest(std::string("expected a ") + adversary + " certificate");
  }
}

json action_json(const Action& a) {
  if (a.is_reject()) return json{{"type", "reject"}};
  return json{{"type", "pack"}, {"bin", a.bin}, {"remove", a.removals}};
}

Action action_from(const json& j) {
  if (j.at("type") == "reject") return Action::reject();
  return Action::pack(j.at("bin").get<int>(), j.at("remove").get<std::vector<int>>());
}

json steps_json(const std::vector<KnapsackStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) {
    out.push_back({{"id", s.item_id}, {"size", s.size}, {"action", action_json(s.action)},
                   {"loads", s.loads}});
  }
  return out;
}

std::vector<KnapsackStep> steps_from(const json& j) {
  std::vector<KnapsackStep> out;
  for (const auto& s : j) {
    out.push_back({s.at("id").get<int>(), s.at("size").get<EpsRational>(),
                   action_from(s.at("action")), s.at("loads").get<std::vector<EpsRational>>()});
  }
  return out;
}

json assignments_json(const std::vector<IntervalAssignment>& as) {
  json out = json::array();
  for (const auto& a : as) out.push_back({{"id", a.item_id}, {"size", a.size}, {"offset", a.offset}});
  return out;
}

std::vector<IntervalAssignment> assignments_from(const json& j) {
  std::vector<IntervalAssignment> out;
  for (const auto& a : j) {
    out.push_back({a.at("id").get<int>(), a.at("size").get<EpsRational>(),
                   a.at("offset").get<EpsRational>()});
  }
  return out;
}

json classes_json(const std::vector<SizeClass>& cs) {
  json out = json::array();
  for (auto c : cs) out.push_back(to_string(c));
  return out;
}

std::vector<SizeClass> classes_from(const json& j) {
  std::vector<SizeClass> out;
  for (const auto& c : j) {
    out.push_back(c == "smallish" ? SizeClass::kSmallish : SizeClass::kLargish);
  }
  return out;
}

ProfitMode mode_from(const std::string& s) {
  if (s == "proportional") return ProfitMode::kProportional;
  if (s == "unit") return ProfitMode::kUnit;
  throw InvalidRequest("unknown profit mode '" + s + "'");
}

BranchRule rule_from(const std::string& s) {
  if (s == "threshold") return BranchRule::kThreshold;
  if (s == "best-bound") return BranchRule::kBestBound;
  throw InvalidRequest("unknown branch rule '" + s + "'");
}

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& s, const Enum (&values)[N]) {
  for (Enum v : values) {
    if (s == to_string(v)) return v;
  }
  throw InvalidRequest("unknown branch '" + s + "'");
}

Rational as_rational(const json& j) {
  if (j.is_string()) return rational_from_json(j);
  return j.get<EpsRational>().standard_part();
}

}  // namespace

// ---- thm1 ----

json to_json(const Thm1Certificate& c, bool with_transcript) {
  json j = umbrella("thm1", {{"k", c.k}, {"mode", to_string(c.mode)}, {"rule", to_string(c.rule)}},
                    c.algorithm, c.seed, c.alg_profit, c.opt_profit, c.ratio_limit,
                    c.reference_bound, c.passes());
  j["details"] = {{"gamma", c.gamma},
                  {"branch", to_string(c.branch)},
                  {"alpha", c.alpha},
                  {"beta", c.beta},
                  {"theta", c.theta},
                  {"classes", classes_json(c.classes)},
                  {"opt_packing", c.opt_packing.bins}};
  j["transcript"] = with_transcript ? steps_json(c.transcript) : json(nullptr);
  return j;
}

Thm1Certificate thm1_from_json(const json& j) {
  expect_adversary(j, "thm1");
  Thm1Certificate c;
  const auto& p = j.at("parameters");
  c.k = p.at("k").get<int>();
  c.mode = mode_from(p.at("mode").get<std::string>());
  c.rule = rule_from(p.at("rule").get<std::string>());
  c.algorithm = j.at("algorithm").at("name").get<std::string>();
  c.seed = seed_from(j);
  c.alg_profit = j.at("measured").get<EpsRational>();
  c.opt_profit = j.at("optimum").get<EpsRational>();
  c.ratio_limit = rational_from_json(j.at("ratio"));
  c.reference_bound = rational_from_json(j.at("reference_bound"));
  const auto& d = j.at("details");
  c.gamma = d.at("gamma").get<int>();
  c.branch = enum_from(d.at("branch").get<std::string>(),
                       {Thm1Branch::kBigItems, Thm1Branch::kThetaItems});
  c.alpha = d.at("alpha").get<EpsRational>();
  c.beta = d.at("beta").get<EpsRational>();
  c.theta = d.at("theta").get<EpsRational>();
  c.classes = classes_from(d.at("classes"));
  c.opt_packing.bins = d.at("opt_packing").get<std::vector<std::vector<int>>>();
  c.opt_packing.objective = c.opt_profit;
  if (!j.at("transcript").is_null()) c.transcript = steps_from(j.at("transcript"));
  return c;
}

// ---- thm2 ----

json to_json(const Thm2Certificate& c, bool with_transcript) {
  json j = umbrella("thm2",
                    {{"k", c.k},
                     {"mode", c.estimated ? "estimated" : "deterministic"},
                     {"trials", c.trials}},
                    c.algorithm, c.seed, c.alg_profit, c.opt_profit, c.ratio,
                    c.reference_bound, c.passes());
  j["details"] = {{"x", c.x},
                  {"x_mean", rational_to_json(c.x_mean)},
                  {"x_ci_half_width", c.x_ci_half_width},
                  {"branch", to_string(c.branch)},
                  {"opt_packing", c.opt_packing.bins}};
  j["transcript"] = with_transcript && !c.estimated ? steps_json(c.transcript) : json(nullptr);
  return j;
}

Thm2Certificate thm2_from_json(const json& j) {
  expect_adversary(j, "thm2");
  Thm2Certificate c;
  const auto& p = j.at("parameters");
  c.k = p.at("k").get<int>();
  c.estimated = p.at("mode") == "estimated";
  c.trials = p.at("trials").get<int>();
  c.algorithm = j.at("algorithm").at("name").get<std::string>();
  c.seed = seed_from(j);
  c.alg_profit = j.at("measured").get<EpsRational>();
  c.opt_profit = j.at("optimum").get<EpsRational>();
  c.ratio = rational_from_json(j.at("ratio"));
  c.reference_bound = rational_from_json(j.at("reference_bound"));
  const auto& d = j.at("details");
  c.x = d.at("x").get<int>();
  c.x_mean = rational_from_json(d.at("x_mean"));
  c.x_ci_half_width = d.at("x_ci_half_width").get<double>();
  c.branch = enum_from(d.at("branch").get<std::string>(),
                       {Thm2Branch::kThirdPlusEps, Thm2Branch::kTwoThirdsMinus3Eps});
  c.opt_packing.bins = d.at("opt_packing").get<std::vector<std::vector<int>>>();
  c.opt_packing.objective = c.opt_profit;
  if (!j.at("transcript").is_null()) c.transcript = steps_from(j.at("transcript"));
  return c;
}

// ---- thm3 ----

json to_json(const Thm3Certificate& c, bool with_transcript) {
  json j = umbrella("thm3", {{"N", c.n}}, c.algorithm, c.seed,
                    rational_to_json(Rational(c.alg_peak)),
                    rational_to_json(Rational(c.opt_upper)), c.ratio, c.reference_bound,
                    c.passes());
  j["details"] = {{"Q", c.q},
                  {"Q_prime", c.q_prime},
                  {"low", c.low},
                  {"high", c.high},
                  {"branch", to_string(c.branch)},
                  {"theta", c.theta},
                  {"classes", with_transcript ? classes_json(c.classes) : json(nullptr)},
                  {"opt_assignment",
                   with_transcript ? assignments_json(c.opt_assignment) : json(nullptr)}};
  j["transcript"] = with_transcript ? assignments_json(c.transcript) : json(nullptr);
  return j;
}

Thm3Certificate thm3_from_json(const json& j) {
  expect_adversary(j, "thm3");
  Thm3Certificate c;
  c.n = j.at("parameters").at("N").get<std::int64_t>();
  c.algorithm = j.at("algorithm").at("name").get<std::string>();
  c.seed = seed_from(j);
  c.alg_peak = rational_from_json(j.at("measured")).convert_to<std::int64_t>();
  c.opt_upper = rational_from_json(j.at("optimum")).convert_to<std::int64_t>();
  c.ratio = rational_from_json(j.at("ratio"));
  c.reference_bound = rational_from_json(j.at("reference_bound"));
  const auto& d = j.at("details");
  c.q = d.at("Q").get<std::int64_t>();
  c.q_prime = d.at("Q_prime").get<std::int64_t>();
  c.low = d.at("low").get<std::int64_t>();
  c.high = d.at("high").get<std::int64_t>();
  c.branch = enum_from(d.at("branch").get<std::string>(),
                       {Thm3Branch::kStopHigh, Thm3Branch::kStopLow, Thm3Branch::kTwoThirds,
                        Thm3Branch::kThetaItems});
  c.theta = d.at("theta").get<EpsRational>();
  if (!d.at("classes").is_null()) c.classes = classes_from(d.at("classes"));
  if (!d.at("opt_assignment").is_null()) c.opt_assignment = assignments_from(d.at("opt_assignment"));
  if (!j.at("transcript").is_null()) c.transcript = assignments_from(j.at("transcript"));
  return c;
}

// ---- thm4 ----

json to_json(const YaoCertificate& c, bool with_transcript) {
  json j = umbrella("thm4", {{"N", c.n}, {"M", c.m}, {"t", c.t}}, c.algorithm, c.seed,
                    rational_to_json(c.e_alg), rational_to_json(c.e_opt), c.ratio,
                    c.reference_bound, c.passes());
  json dist = json::array();
  for (const auto& inst : c.instances) {
    dist.push_back({{"q", inst.q},
                    {"p", rational_to_json(inst.probability)},
                    {"alg_cost", rational_to_json(Rational(inst.alg_cost))},
                    {"opt_cost", rational_to_json(Rational(inst.opt_cost))},
                    {"analytic_lower", rational_to_json(Rational(inst.analytic_lower))}});
  }
  j["details"] = {{"distribution", std::move(dist)},
                  {"finite_n_bound", rational_to_json(c.reference_bound)}};
  if (with_transcript) {
    json cont = json::array();
    for (const auto& inst : c.instances) {
      if (!inst.continuation.empty()) {
        cont.push_back({{"q", inst.q}, {"assignments", assignments_json(inst.continuation)}});
      }
    }
    j["transcript"] = {{"prefix", assignments_json(c.prefix)}, {"continuations", std::move(cont)}};
  } else {
    j["transcript"] = nullptr;
  }
  return j;
}

YaoCertificate thm4_from_json(const json& j) {
  expect_adversary(j, "thm4");
  YaoCertificate c;
  const auto& p = j.at("parameters");
  c.n = p.at("N").get<std::int64_t>();
  c.m = p.at("M").get<std::int64_t>();
  c.t = p.at("t").get<std::int64_t>();
  c.algorithm = j.at("algorithm").at("name").get<std::string>();
  c.seed = seed_from(j);
  c.e_alg = rational_from_json(j.at("measured"));
  c.e_opt = rational_from_json(j.at("optimum"));
  c.ratio = rational_from_json(j.at("ratio"));
  c.reference_bound = rational_from_json(j.at("reference_bound"));
  for (const auto& d : j.at("details").at("distribution")) {
    YaoInstance inst;
    inst.q = d.at("q").get<std::int64_t>();
    inst.probability = rational_from_json(d.at("p"));
    inst.alg_cost = rational_from_json(d.at("alg_cost")).convert_to<std::int64_t>();
    inst.opt_cost = rational_from_json(d.at("opt_cost")).convert_to<std::int64_t>();
    inst.analytic_lower = rational_from_json(d.at("analytic_lower")).convert_to<std::int64_t>();
    c.instances.push_back(std::move(inst));
  }
  const auto& t = j.at("transcript");
  if (!t.is_null()) {
    c.prefix = assignments_from(t.at("prefix"));
    for (const auto& cont : t.at("continuations")) {
      const auto q = cont.at("q").get<std::int64_t>();
      for (auto& inst : c.instances) {
        if (inst.q == q) inst.continuation = assignments_from(cont.at("assignments"));
      }
    }
  }
  return c;
}

// ---- generic ----

bool ratio_consistent(const json& certificate) {
  const Rational recorded = rational_from_json(certificate.at("ratio"));
  const Rational measured = as_rational(certificate.at("measured"));
  const Rational optimum = as_rational(certificate.at("optimum"));
  const std::string adversary = certificate.at("adversary").get<std::string>();
  // Maximization games report opt/alg, minimization games alg/opt.
  const bool maximize = adversary == "thm1" || adversary == "thm2";
  if ((maximize ? measured : optimum) == 0) return false;
  const Rational recomputed = maximize ? optimum / measured : measured / optimum;
  return recomputed == recorded;
}

ReplayOutcome replay_certificate(const json& certificate) {
  const std::string adversary = certificate.at("adversary").get<std::string>();
  if (certificate.at("transcript").is_null()) {
    throw InvalidRequest("certificate was written without a transcript");
  }
  ReplayOutcome out;
  out.recorded = rational_from_json(certificate.at("ratio"));
  if (adversary == "thm1") {
    auto again = replay_thm1(thm1_from_json(certificate));
    out.replayed = again.ratio_limit;
    out.certificate = to_json(again);
  } else if (adversary == "thm2") {
    auto again = replay_thm2(thm2_from_json(certificate));
    out.replayed = again.ratio;
    out.certificate = to_json(again);
  } else if (adversary == "thm3") {
    auto again = replay_thm3(thm3_from_json(certificate));
    out.replayed = again.ratio;
    out.certificate = to_json(again);
  } else if (adversary == "thm4") {
    auto again = replay_thm4(thm4_from_json(certificate));
    out.replayed = again.ratio;
    out.certificate = to_json(again);
  } else {
    throw InvalidRequest("unknown adversary '" + adversary + "'");
  }
  return out;
}

}  // namespace lbforge
