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

#include "lbforge/errors.hpp"

namespace lbforge {

const char* to_string(SizeClass c) {
  return c == SizeClass::kSmallish ? "smallish" : "largish";
}

AdaptiveSizer::AdaptiveSizer(EpsRational alpha, EpsRational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), a_(alpha_), b_(beta_) {
  if (!(alpha_ < beta_)) {
    throw SizerError(SizerErrc::kInvalidRange,
                     "sizer range is empty: " + alpha_.to_string() +
                         " >= " + beta_.to_string());
  }
}

EpsRational AdaptiveSizer::next_size() {
  if (pending_) {
    throw SizerError(SizerErrc::kPendingClassification,
                     "previous size has not been classified");
  }
  pending_ = midpoint(a_, b_);
  return *pending_;
}

void AdaptiveSizer::classify(SizeClass cls) {
  if (!pending_) {
    throw SizerError(SizerErrc::kNothingPending, "no size awaiting classification");
  }
  if (cls == SizeClass::kSmallish) {
    a_ = *pending_;
  } else {
    b_ = *pending_;
  }
  log_.push_back({std::move(*pending_), cls});
  pending_.reset();
}

EpsRational AdaptiveSizer::threshold() const {
  if (pending_) {
    throw SizerError(SizerErrc::kPendingClassification,
                     "threshold requested while a size is pending");
  }
  return midpoint(a_, b_);
}

}  // namespace lbforge
