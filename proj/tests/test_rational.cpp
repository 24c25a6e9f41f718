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

#include "mvfep/rational.hpp"

#include <random>

#include <doctest.h>

using namespace mvfep;

namespace {

std::mt19937_64 rng(20260809);

Rational random_rational() {
  long num = static_cast<long>(rng() % 2001) - 1000;
  long den = static_cast<long>(rng() % 200) + 1;
  return Rational(num, den);
}

}  // namespace

TEST_CASE("arithmetic on exact fractions") {
  CHECK(Rational(1, 3) + Rational(1, 3) == Rational(2, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(5, 7) < Rational(3, 4));  // 20 < 21 by cross-multiplication
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
  CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
}

TEST_CASE("canonical form: positive denominator, lowest terms") {
  Rational r(-6, -8);
  CHECK(r.num() == 3);
  CHECK(r.den() == 4);
  Rational s(6, -8);
  CHECK(s.num() == -3);
  CHECK(s.den() == 4);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(), b = random_rational();
    for (const Rational& v : {a + b, a - b, a * b}) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), v.num().get_mpz_t(), v.den().get_mpz_t());
      CHECK(g == 1);
      CHECK(v.den() > 0);
    }
  }
}

TEST_CASE("division by zero is a distinct error") {
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
  for (int i = 0; i < 300; ++i) {
    Rational a = random_rational(), b = random_rational(), c = random_rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a / a == Rational(1));
  }
}

TEST_CASE("ordering is consistent with cross-multiplication") {
  for (int i = 0; i < 300; ++i) {
    Rational a = random_rational(), b = random_rational();
    bool lt = a < b;
    CHECK(lt == (a.num() * b.den() < b.num() * a.den()));
  }
}

TEST_CASE("text form renders p/q and plain integers") {
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational(0).str() == "0");
}

TEST_CASE("parsing accepts both forms and rejects zero denominators") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational::parse(" 2/6 ") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("parse/render round-trip") {
  for (int i = 0; i < 300; ++i) {
    Rational a = random_rational();
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("lcm of denominators") {
  std::vector<Rational> v{Rational(1, 2), Rational(1, 3)};
  CHECK(lcm_of_denominators(v) == 6);

  std::vector<Rational> one{Rational(1)};
  CHECK(lcm_of_denominators(one) == 1);

  // Independent brute-force oracle: smallest k with k*v integral for all v.
  std::vector<Rational> w{Rational(3, 4), Rational(5, 6), Rational(1, 4)};
  Integer expect = 0;
  for (long k = 1; k <= 12; ++k) {
    bool ok = true;
    for (const Rational& r : w) ok = ok && (r * Rational(k)).is_integer();
    if (ok) {
      expect = k;
      break;
    }
  }
  CHECK(expect == 12);
  CHECK(lcm_of_denominators(w) == expect);
}

TEST_CASE("lcm result divides every other common integerizer") {
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> v;
    for (int j = 0; j < 5; ++j) v.push_back(random_rational());
    bool all_zero = true;
    for (const Rational& r : v) all_zero = all_zero && r.is_zero();
    if (all_zero) continue;
    Integer k = lcm_of_denominators(v);
    for (const Rational& r : v) CHECK((r * Rational(k)).is_integer());
    // 2k and 3k also integerize; k must divide them.
    CHECK(k > 0);
    for (long mult = 2; mult <= 3; ++mult) {
      Integer other = k * mult;
      Integer rem;
      mpz_mod(rem.get_mpz_t(), other.get_mpz_t(), k.get_mpz_t());
      CHECK(rem == 0);
    }
  }
}

TEST_CASE("lcm of an effectively empty list is an error") {
  std::vector<Rational> zeros{Rational(0), Rational(0)};
  CHECK_THROWS_AS(lcm_of_denominators(zeros), InvalidInput);
  std::vector<Rational> empty;
  CHECK_THROWS_AS(lcm_of_denominators(empty), InvalidInput);
}

TEST_CASE("zeros are discarded before the lcm") {
  std::vector<Rational> v{Rational(0), Rational(1, 6), Rational(0)};
  CHECK(lcm_of_denominators(v) == 6);
}
