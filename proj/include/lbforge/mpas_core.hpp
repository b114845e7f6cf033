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

// Minimum peak appointment scheduling: every item of size g is given an
// interval [x, x+g) inside [0, 1); the cost is the largest number of
// intervals covering a single point. Containment is left-closed throughout:
// z is covered by [x, x+g) iff x <= z < x+g.

#ifndef LBFORGE_MPAS_CORE_HPP
#define LBFORGE_MPAS_CORE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lbforge/item.hpp"
#include "lbforge/numerics.hpp"

namespace lbforge {

struct IntervalAssignment {
  int item_id = 0;
  EpsRational size;
  EpsRational offset;

  EpsRational end() const { return offset + size; }
  bool contains(const EpsRational& z) const { return offset <= z && z < end(); }

  friend bool operator==(const IntervalAssignment&, const IntervalAssignment&) = default;
};

// 0 < size <= 1 and 0 <= offset <= 1 - size.
bool is_valid(const IntervalAssignment& a);

// A right-continuous step function on [0, 1). Piece i covers
// [pieces[i].start, pieces[i+1].start), the last one ends at 1.
class StepFunction {
 public:
  struct Piece {
    EpsRational start;
    std::int64_t value = 0;

    friend bool operator==(const Piece&, const Piece&) = default;
  };

  StepFunction() : pieces_{{EpsRational(0), 0}} {}
  explicit StepFunction(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  EpsRational piece_end(std::size_t i) const;
  EpsRational piece_length(std::size_t i) const { return piece_end(i) - pieces_[i].start; }

  // Requires 0 <= z < 1.
  std::int64_t value_at(const EpsRational& z) const;
  std::int64_t max_value() const;
  EpsRational integral() const;
  // Total length where the function is >= v.
  EpsRational measure_at_least(std::int64_t v) const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 protected:
  std::vector<Piece> pieces_;
};

// The coverage function f.
class CoverageProfile : public StepFunction {
 public:
  using StepFunction::StepFunction;
};

// Non-increasing rearrangement g of a coverage profile.
class Rearrangement : public StepFunction {
 public:
  using StepFunction::StepFunction;
};

// Exact endpoint sweep. Throws InvalidAssignment on any interval outside [0,1).
CoverageProfile build_profile(std::span<const IntervalAssignment> assignments);

std::int64_t peak(const StepFunction& p);
EpsRational integral(const StepFunction& p);
Rearrangement rearrange(const CoverageProfile& p);

// Online player contract: return the offset x for the arriving item.
class MpasAlgorithm {
 public:
  virtual ~MpasAlgorithm() = default;

  virtual EpsRational place(const Item& item,
                            std::span<const IntervalAssignment> history) = 0;
  // Independent copy that behaves identically on identical futures, or
  // nullptr when the algorithm cannot be forked.
  virtual std::unique_ptr<MpasAlgorithm> snapshot() const = 0;
  virtual std::string name() const = 0;
  virtual std::optional<std::uint64_t> seed() const { return std::nullopt; }
};

class MpasGame {
 public:
  // Asks the algorithm for an offset, validates and records it.
  const IntervalAssignment& place(MpasAlgorithm& alg, const EpsRational& size);

  const std::vector<IntervalAssignment>& assignments() const { return assignments_; }
  int arrived() const { return static_cast<int>(assignments_.size()); }

 private:
  std::vector<IntervalAssignment> assignments_;
};

// Replays recorded offsets. Keyed by (arrival position, size) so that forked
// continuations of a shared prefix can be told apart by their item sizes.
class ScriptedMpasAlgorithm : public MpasAlgorithm {
 public:
  void record(int position, const EpsRational& size, const EpsRational& offset) {
    script_[{position, size}] = offset;
  }

  EpsRational place(const Item& item, std::span<const IntervalAssignment> history) override;
  std::unique_ptr<MpasAlgorithm> snapshot() const override {
    return std::make_unique<ScriptedMpasAlgorithm>(*this);
  }
  std::string name() const override { return "scripted"; }

 private:
  std::map<std::pair<int, EpsRational>, EpsRational> script_;
};

}  // namespace lbforge

#endif  // LBFORGE_MPAS_CORE_HPP
