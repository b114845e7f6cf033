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

// Certificate JSON ("schema": "lbforge/1").
//
// Every certificate shares the umbrella fields
//   schema, adversary, parameters, algorithm {name, seed}, measured,
//   optimum, ratio, ratio_decimal, reference_bound, tolerance, pass,
//   details, transcript
// Exact rationals are "num/den" strings and eps-numbers are
// {"std": "num/den", "inf": "num/den"}. Decimal fields are informational.

#ifndef LBFORGE_CERTIFICATE_HPP
#define LBFORGE_CERTIFICATE_HPP

#include <string>

#include "json.hpp"
#include "lbforge/knapsack_adversaries.hpp"
#include "lbforge/mpas_adversaries.hpp"
#include "lbforge/numerics.hpp"

namespace lbforge {

using nlohmann::json;

inline constexpr const char* kCertificateSchema = "lbforge/1";

void to_json(json& j, const EpsRational& x);
void from_json(const json& j, EpsRational& x);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Thm1Certificate& c, bool with_transcript = true);
json to_json(const Thm2Certificate& c, bool with_transcript = true);
json to_json(const Thm3Certificate& c, bool with_transcript = true);
json to_json(const YaoCertificate& c, bool with_transcript = true);

// Inverse of to_json; throws InvalidRequest on schema mismatch or missing
// fields.
Thm1Certificate thm1_from_json(const json& j);
Thm2Certificate thm2_from_json(const json& j);
Thm3Certificate thm3_from_json(const json& j);
YaoCertificate thm4_from_json(const json& j);

// Recomputes the ratio from the serialized measured/optimum fields and
// compares it with the stored one.
bool ratio_consistent(const json& certificate);

struct ReplayOutcome {
  Rational recorded;
  Rational replayed;
  json certificate;  // regenerated from the replay
  bool identical() const { return recorded == replayed; }
};

// Feeds the transcript back through the named adversary.
ReplayOutcome replay_certificate(const json& certificate);

}  // namespace lbforge

#endif  // LBFORGE_CERTIFICATE_HPP
