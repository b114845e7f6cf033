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

#ifndef LBFORGE_ADAPTIVE_SIZING_HPP
#define LBFORGE_ADAPTIVE_SIZING_HPP

#include <optional>
#include <vector>

#include "lbforge/numerics.hpp"

namespace lbforge {

enum class SizeClass { kSmallish, kLargish };

const char* to_string(SizeClass c);

// Adaptive item sizing.
//
// Sizes are emitted one at a time from the open interval (a, b). After the
// algorithm has handled an item the caller classifies it: smallish moves a
// up to the item's size, largish moves b down to it. Whatever happens, the
// final threshold (a+b)/2 lies strictly between every smallish and every
// largish size.
//
// Invariant: alpha <= a < b <= beta, and at most one size is pending.
class AdaptiveSizer {
 public:
  struct Entry {
    EpsRational size;
    SizeClass cls;
  };

  // Throws SizerError(kInvalidRange) unless alpha < beta.
  AdaptiveSizer(EpsRational alpha, EpsRational beta);

  // Returns (a+b)/2 and marks it pending. Throws kPendingClassification if
  // the previous size has not been classified yet.
  EpsRational next_size();

  // Throws kNothingPending when no size is outstanding.
  void classify(SizeClass cls);

  // Throws kPendingClassification while a size is outstanding.
  EpsRational threshold() const;

  const EpsRational& alpha() const { return alpha_; }
  const EpsRational& beta() const { return beta_; }
  const EpsRational& lower() const { return a_; }
  const EpsRational& upper() const { return b_; }
  const std::optional<EpsRational>& pending() const { return pending_; }
  const std::vector<Entry>& log() const { return log_; }

 private:
  EpsRational alpha_;
  EpsRational beta_;
  EpsRational a_;
  EpsRational b_;
  std::optional<EpsRational> pending_;
  std::vector<Entry> log_;
};

}  // namespace lbforge

#endif  // LBFORGE_ADAPTIVE_SIZING_HPP
