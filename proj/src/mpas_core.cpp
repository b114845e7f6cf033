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

#include "lbforge/mpas_core.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "lbforge/errors.hpp"

namespace lbforge {

namespace {
const EpsRational kZero(0);
const EpsRational kOne(1);
}  // namespace

bool is_valid(const IntervalAssignment& a) {
  return kZero < a.size && a.size <= kOne && kZero <= a.offset && a.end() <= kOne;
}

StepFunction::StepFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty() || !pieces_.front().start.is_zero()) {
    throw std::invalid_argument("step function must start at 0");
  }
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (!(pieces_[i - 1].start < pieces_[i].start) || !(pieces_[i].start < kOne)) {
      throw std::invalid_argument("step function breakpoints must increase inside [0,1)");
    }
  }
}

EpsRational StepFunction::piece_end(std::size_t i) const {
  return i + 1 < pieces_.size() ? pieces_[i + 1].start : kOne;
}

std::int64_t StepFunction::value_at(const EpsRational& z) const {
  if (z < kZero || !(z < kOne)) throw std::out_of_range("point outside [0,1)");
  // Last piece whose start is <= z.
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), z,
                             [](const EpsRational& v, const Piece& p) { return v < p.start; });
  return std::prev(it)->value;
}

std::int64_t StepFunction::max_value() const {
  std::int64_t m = 0;
  for (const auto& p : pieces_) m = std::max(m, p.value);
  return m;
}

EpsRational StepFunction::integral() const {
  EpsRational total;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].value != 0) total += piece_length(i) * Rational(pieces_[i].value);
  }
  return total;
}

EpsRational StepFunction::measure_at_least(std::int64_t v) const {
  EpsRational total;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].value >= v) total += piece_length(i);
  }
  return total;
}

CoverageProfile build_profile(std::span<const IntervalAssignment> assignments) {
  std::vector<std::pair<EpsRational, int>> events;
  events.reserve(2 * assignments.size());
  for (const auto& a : assignments) {
    if (!is_valid(a)) {
      throw InvalidAssignment("item " + std::to_string(a.item_id) + " of size " +
                              a.size.to_string() + " at offset " +
                              a.offset.to_string() + " leaves [0,1)");
    }
    events.emplace_back(a.offset, +1);
    events.emplace_back(a.end(), -1);
  }
  std::sort(events.begin(), events.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<StepFunction::Piece> pieces{{kZero, 0}};
  std::int64_t current = 0;
  for (std::size_t i = 0; i < events.size();) {
    const EpsRational& at = events[i].first;
    std::size_t j = i;
    while (j < events.size() && events[j].first == at) current += events[j++].second;
    if (at < kOne) {
      if (pieces.back().start == at) {
        pieces.back().value = current;
      } else if (pieces.back().value != current) {
        pieces.push_back({at, current});
      }
    }
    i = j;
  }
  return CoverageProfile(std::move(pieces));
}

std::int64_t peak(const StepFunction& p) { return p.max_value(); }

EpsRational integral(const StepFunction& p) { return p.integral(); }

Rearrangement rearrange(const CoverageProfile& p) {
  std::map<std::int64_t, EpsRational, std::greater<>> layers;
  for (std::size_t i = 0; i < p.pieces().size(); ++i) {
    layers[p.pieces()[i].value] += p.piece_length(i);
  }
  std::vector<StepFunction::Piece> pieces;
  EpsRational at;
  for (const auto& [value, length] : layers) {
    pieces.push_back({at, value});
    at += length;
  }
  return Rearrangement(std::move(pieces));
}

const IntervalAssignment& MpasGame::place(MpasAlgorithm& alg, const EpsRational& size) {
  const Item item{arrived(), size};
  IntervalAssignment a{item.id, size, alg.place(item, assignments_)};
  if (!is_valid(a)) {
    throw InvalidAssignment(alg.name() + " placed item " + std::to_string(a.item_id) +
                            " of size " + size.to_string() + " at offset " +
                            a.offset.to_string());
  }
  assignments_.push_back(std::move(a));
  return assignments_.back();
}

EpsRational ScriptedMpasAlgorithm::place(const Item& item,
                                         std::span<const IntervalAssignment>) {
  auto it = script_.find({item.id, item.size});
  if (it == script_.end()) {
    throw std::out_of_range("script has no offset for item " + std::to_string(item.id));
  }
  return it->second;
}

}  // namespace lbforge
