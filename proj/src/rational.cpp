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

#include <ostream>

namespace mvfep {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw ParseError("invalid rational '" + std::string(whole) + "'");
  }
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) {
    throw ParseError("invalid rational '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw ParseError("invalid rational '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(text), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  // Trim surrounding spaces; the grammar itself has none.
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);

  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw ParseError("invalid rational '" + std::string(text) +
                     "': zero denominator");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer acc = 0;
  for (const Rational& v : values) {
    if (v.is_zero()) continue;
    if (acc == 0) {
      acc = v.den();
    } else {
      Integer l;
      mpz_lcm(l.get_mpz_t(), acc.get_mpz_t(), v.den().get_mpz_t());
      acc = l;
    }
  }
  if (acc == 0) throw InvalidInput("lcm_of_denominators: no nonzero values");
  return acc;
}

}  // namespace mvfep
