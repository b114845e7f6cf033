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

#include "lbforge/adaptive_sizing.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "lbforge/errors.hpp"

namespace lbforge {
namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

SizerErrc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SizerError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no SizerError";
  return SizerErrc::kInvalidRange;
}

TEST(AdaptiveSizer, RejectsEmptyRange) {
  EXPECT_EQ(code_of([] { AdaptiveSizer(EpsRational(1), EpsRational(R(1, 2))); }),
            SizerErrc::kInvalidRange);
  EXPECT_EQ(code_of([] { AdaptiveSizer(EpsRational(R(1, 2)), EpsRational(R(1, 2))); }),
            SizerErrc::kInvalidRange);
  EXPECT_NO_THROW(AdaptiveSizer(make(R(1, 2), R(-2)), make(R(1, 2), R(-1))));
}

TEST(AdaptiveSizer, EmitsMidpoints) {
  AdaptiveSizer s(make(R(1, 3), R(-2)), make(R(1, 3), R(-1)));
  EXPECT_EQ(s.next_size(), make(R(1, 3), R(-3, 2)));
  s.classify(SizeClass::kLargish);
  EXPECT_EQ(s.upper(), make(R(1, 3), R(-3, 2)));
  EXPECT_EQ(s.lower(), make(R(1, 3), R(-2)));
}

TEST(AdaptiveSizer, TraceFromLargishThenSmallish) {
  AdaptiveSizer s(make(R(1, 2), R(-2)), make(R(1, 2), R(-1)));
  EXPECT_EQ(s.threshold(), make(R(1, 2), R(-3, 2)));
  EXPECT_EQ(s.next_size(), make(R(1, 2), R(-3, 2)));
  s.classify(SizeClass::kLargish);
  EXPECT_EQ(s.next_size(), make(R(1, 2), R(-7, 4)));
  s.classify(SizeClass::kSmallish);
  EXPECT_EQ(s.lower(), make(R(1, 2), R(-7, 4)));
  EXPECT_EQ(s.threshold(), make(R(1, 2), R(-13, 8)));
  ASSERT_EQ(s.log().size(), 2u);
  EXPECT_EQ(s.log()[1].cls, SizeClass::kSmallish);
}

TEST(AdaptiveSizer, ContractErrors) {
  AdaptiveSizer s(make(R(1, 2), R(-2)), make(R(1, 2), R(-1)));
  EXPECT_EQ(code_of([&] { s.classify(SizeClass::kSmallish); }), SizerErrc::kNothingPending);
  s.next_size();
  EXPECT_EQ(code_of([&] { s.next_size(); }), SizerErrc::kPendingClassification);
  EXPECT_EQ(code_of([&] { s.threshold(); }), SizerErrc::kPendingClassification);
}

// Property: every smallish size is below theta, every largish size above,
// and all sizes stay strictly inside (alpha, beta).
TEST(AdaptiveSizerProperty, ThresholdSeparatesClasses) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const EpsRational alpha = make(R(1, 2), R(-2));
    const EpsRational beta = make(R(1, 2), R(-1));
    AdaptiveSizer s(alpha, beta);
    const int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      const EpsRational x = s.next_size();
      EXPECT_GT(x, alpha);
      EXPECT_LT(x, beta);
      s.classify(rng() % 2 ? SizeClass::kSmallish : SizeClass::kLargish);
    }
    const EpsRational theta = s.threshold();
    for (const auto& e : s.log()) {
      if (e.cls == SizeClass::kSmallish) {
        EXPECT_LT(e.size, theta);
      } else {
        EXPECT_GT(e.size, theta);
      }
    }
  }
}

}  // namespace
}  // namespace lbforge
