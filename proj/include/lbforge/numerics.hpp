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

#ifndef LBFORGE_NUMERICS_HPP
#define LBFORGE_NUMERICS_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace lbforge {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

// Always "num/den", including integers ("3/1").
std::string format_rational(const Rational& r);

// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::strong_ordering compare(const Rational& x, const Rational& y);

// A number std + inf*eps where eps is a formal positive infinitesimal.
//
// Only the operations that keep values linear in eps are provided: sums,
// differences and scaling by a plain rational. Ordering is lexicographic on
// (std, inf), which agrees with the real order for every sufficiently small
// concrete eps > 0.
class EpsRational {
 public:
  EpsRational() = default;
  EpsRational(Rational standard, Rational infinitesimal = Rational(0))
      : std_(std::move(standard)), inf_(std::move(infinitesimal)) {}
  EpsRational(long long standard) : std_(standard) {}

  // The value coeff*eps.
  static EpsRational epsilon(const Rational& coeff = Rational(1)) {
    return EpsRational(Rational(0), coeff);
  }

  const Rational& standard_part() const { return std_; }
  const Rational& infinitesimal_part() const { return inf_; }
  bool is_zero() const { return std_ == 0 && inf_ == 0; }

  // Substitutes a concrete positive eps.
  Rational evaluate_at(const Rational& eps) const { return std_ + inf_ * eps; }

  EpsRational& operator+=(const EpsRational& o) {
    std_ += o.std_;
    inf_ += o.inf_;
    return *this;
  }
  EpsRational& operator-=(const EpsRational& o) {
    std_ -= o.std_;
    inf_ -= o.inf_;
    return *this;
  }
  EpsRational& operator*=(const Rational& s) {
    std_ *= s;
    inf_ *= s;
    return *this;
  }
  EpsRational& operator/=(const Rational& s) {
    std_ /= s;
    inf_ /= s;
    return *this;
  }

  friend EpsRational operator+(EpsRational a, const EpsRational& b) { return a += b; }
  friend EpsRational operator-(EpsRational a, const EpsRational& b) { return a -= b; }
  friend EpsRational operator*(EpsRational a, const Rational& s) { return a *= s; }
  friend EpsRational operator*(const Rational& s, EpsRational a) { return a *= s; }
  friend EpsRational operator/(EpsRational a, const Rational& s) { return a /= s; }
  friend EpsRational operator-(const EpsRational& a) {
    return EpsRational(-a.std_, -a.inf_);
  }

  friend bool operator==(const EpsRational& a, const EpsRational& b) {
    return a.std_ == b.std_ && a.inf_ == b.inf_;
  }
  friend std::strong_ordering operator<=>(const EpsRational& a,
                                          const EpsRational& b) {
    if (auto c = compare(a.std_, b.std_); c != 0) return c;
    return compare(a.inf_, b.inf_);
  }

  // Human readable, e.g. "1/2 - 3/2e".
  std::string to_string() const;

 private:
  Rational std_;
  Rational inf_;
};

inline EpsRational make(const Rational& standard, const Rational& infinitesimal) {
  return EpsRational(standard, infinitesimal);
}

inline Rational standard_part(const EpsRational& x) { return x.standard_part(); }

std::ostream& operator<<(std::ostream& os, const EpsRational& x);

// Midpoint (a+b)/2.
inline EpsRational midpoint(const EpsRational& a, const EpsRational& b) {
  return (a + b) / Rational(2);
}

}  // namespace lbforge

#endif  // LBFORGE_NUMERICS_HPP
