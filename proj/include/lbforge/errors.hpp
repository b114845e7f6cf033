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

#ifndef LBFORGE_ERRORS_HPP
#define LBFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lbforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SizerErrc { kInvalidRange, kPendingClassification, kNothingPending };

class SizerError : public Error {
 public:
  SizerError(SizerErrc code, const std::string& what) : Error(what), code_(code) {}
  SizerErrc code() const { return code_; }

 private:
  SizerErrc code_;
};

// A knapsack action that breaks the lazy-algorithm contract.
enum class Violation {
  kIllegalReject,
  kNonMinimalRemoval,
  kOverflow,
  kBadBin,
  kBadRemoval,
  kOutOfOrder,
};

const char* to_string(Violation v);

class RefereeError : public Error {
 public:
  RefereeError(Violation v, const std::string& what) : Error(what), violation_(v) {}
  Violation violation() const { return violation_; }

 private:
  Violation violation_;
};

// An MPAS algorithm returned an interval outside [0, 1).
class InvalidAssignment : public Error {
 public:
  using Error::Error;
};

// A constructive optimum failed its own feasibility check.
class InfeasibleConstruction : public Error {
 public:
  using Error::Error;
};

// Instance exceeds an exhaustive solver's size guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// Bad adversary parameters (divisibility, ranges, missing snapshot support).
class InvalidRequest : public Error {
 public:
  using Error::Error;
};

}  // namespace lbforge

#endif  // LBFORGE_ERRORS_HPP
