// Copyright 2026 The mvfep Authors
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

#ifndef MVFEP_RATIONAL_HPP
#define MVFEP_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvfep/errors.hpp"

namespace mvfep {

/// Arbitrary-precision integer. Backed by GMP.
using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. The scalar type of every computation in this library:
/// Fourier-Motzkin elimination squares coefficient bit-lengths per round,
/// so fixed-width arithmetic is not an option.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit
  Rational(const Integer& n) : v_(n) {}                  // NOLINT: implicit

  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw DivisionByZero();
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Accepts "p/q" and "p" (optional sign on p). Rejects q = 0.
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return wrap(a.v_ + b.v_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return wrap(a.v_ - b.v_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return wrap(a.v_ * b.v_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return wrap(a.v_ / b.v_);
  }

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  Rational& operator/=(const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    v_ /= b.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Renders "p/q", or just "p" when q = 1.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static Rational wrap(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  mpq_class v_;  // canonical: gcd(|num|, den) = 1, den > 0
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Smallest positive integer k such that k*v is an integer for every v.
/// Zeros are discarded first; an effectively empty list is an error.
Integer lcm_of_denominators(std::span<const Rational> values);

}  // namespace mvfep

#endif  // MVFEP_RATIONAL_HPP
