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

#include "mvfep/chain_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace mvfep {

namespace {

const Rational& as_rational(const ChainElem& e) {
  const Rational* r = std::get_if<Rational>(&e);
  if (r == nullptr) throw InvalidInput("element is not a rational-valued element");
  return *r;
}

const ChangElem& as_chang(const ChainElem& e) {
  const ChangElem* c = std::get_if<ChangElem>(&e);
  if (c == nullptr) throw InvalidInput("element is not a Chang-algebra pair");
  return *c;
}

int as_index(const ChainElem& e) {
  const int* i = std::get_if<int>(&e);
  if (i == nullptr) throw InvalidInput("element is not a table-algebra index");
  return *i;
}

int lex_compare(const ChangElem& x, const ChangElem& y) {
  int c = cmp(x.a, y.a);
  if (c != 0) return c;
  return cmp(x.b, y.b);
}

Integer parse_mpz(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw ParseError("invalid integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw ParseError("invalid integer '" + s + "'");
  }
  return Integer(s, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- L_k

FiniteChainOracle::FiniteChainOracle(Integer k) : k_(std::move(k)) {
  if (k_ < 1) throw InvalidInput("finite chain: k must be >= 1");
}

std::string FiniteChainOracle::name() const { return "lk:" + k_.get_str(); }

ChainElem FiniteChainOracle::oplus(const ChainElem& x, const ChainElem& y) const {
  Rational s = as_rational(x) + as_rational(y);
  return s > Rational(1) ? Rational(1) : s;
}

ChainElem FiniteChainOracle::neg(const ChainElem& x) const {
  return Rational(1) - as_rational(x);
}

int FiniteChainOracle::compare(const ChainElem& x, const ChainElem& y) const {
  const Rational &a = as_rational(x), &b = as_rational(y);
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

void FiniteChainOracle::validate(const ChainElem& x) const {
  const Rational& v = as_rational(x);
  if (v.sign() < 0 || v > Rational(1)) {
    throw InvalidInput("element " + v.str() + " outside [0,1]");
  }
  if (!(v * Rational(k_)).is_integer()) {
    throw InvalidInput("element " + v.str() + " is not a multiple of 1/" +
                       k_.get_str());
  }
}

std::string FiniteChainOracle::format(const ChainElem& x) const {
  return as_rational(x).str();
}

ChainElem FiniteChainOracle::parse(std::string_view text) const {
  ChainElem e = Rational::parse(text);
  validate(e);
  return e;
}

// ---------------------------------------------------------------- Q cap [0,1]

ChainElem RationalChainOracle::oplus(const ChainElem& x, const ChainElem& y) const {
  Rational s = as_rational(x) + as_rational(y);
  return s > Rational(1) ? Rational(1) : s;
}

ChainElem RationalChainOracle::neg(const ChainElem& x) const {
  return Rational(1) - as_rational(x);
}

int RationalChainOracle::compare(const ChainElem& x, const ChainElem& y) const {
  const Rational &a = as_rational(x), &b = as_rational(y);
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

void RationalChainOracle::validate(const ChainElem& x) const {
  const Rational& v = as_rational(x);
  if (v.sign() < 0 || v > Rational(1)) {
    throw InvalidInput("element " + v.str() + " outside [0,1]");
  }
}

std::string RationalChainOracle::format(const ChainElem& x) const {
  return as_rational(x).str();
}

ChainElem RationalChainOracle::parse(std::string_view text) const {
  ChainElem e = Rational::parse(text);
  validate(e);
  return e;
}

// ---------------------------------------------------------------- Chang

ChainElem ChangAlgebraOracle::oplus(const ChainElem& x, const ChainElem& y) const {
  const ChangElem &p = as_chang(x), &q = as_chang(y);
  ChangElem sum{p.a + q.a, p.b + q.b};
  ChangElem u{1, 0};
  return lex_compare(sum, u) > 0 ? u : sum;
}

ChainElem ChangAlgebraOracle::neg(const ChainElem& x) const {
  const ChangElem& p = as_chang(x);
  return ChangElem{1 - p.a, -p.b};
}

int ChangAlgebraOracle::compare(const ChainElem& x, const ChainElem& y) const {
  return lex_compare(as_chang(x), as_chang(y));
}

void ChangAlgebraOracle::validate(const ChainElem& x) const {
  const ChangElem& p = as_chang(x);
  bool ok = (p.a == 0 && p.b >= 0) || (p.a == 1 && p.b <= 0);
  if (!ok) {
    throw InvalidInput("pair (" + p.a.get_str() + "," + p.b.get_str() +
                       ") outside [(0,0), (1,0)]");
  }
}

std::string ChangAlgebraOracle::format(const ChainElem& x) const {
  const ChangElem& p = as_chang(x);
  return "(" + p.a.get_str() + "," + p.b.get_str() + ")";
}

ChainElem ChangAlgebraOracle::parse(std::string_view text) const {
  std::string_view s = trim(text);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') {
    throw ParseError("invalid pair '" + std::string(text) +
                     "', expected (a,b)");
  }
  s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError("invalid pair '" + std::string(text) +
                     "', expected (a,b)");
  }
  ChangElem e{parse_mpz(trim(s.substr(0, comma))),
              parse_mpz(trim(s.substr(comma + 1)))};
  ChainElem elem = e;
  validate(elem);
  return elem;
}

// ---------------------------------------------------------------- table chain

TableChainOracle::TableChainOracle(FiniteMvAlgebra alg) : alg_(std::move(alg)) {
  if (!alg_.is_chain()) {
    throw InvalidInput("table oracle requires a linearly ordered algebra");
  }
  std::vector<int> order(static_cast<std::size_t>(alg_.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return a != b && alg_.le(a, b) && !alg_.le(b, a); });
  rank_.assign(order.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    rank_[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
  }
}

int TableChainOracle::index_of(const ChainElem& x) const {
  int i = as_index(x);
  if (i < 0 || i >= alg_.size()) {
    throw InvalidInput("table element index out of range");
  }
  return i;
}

ChainElem TableChainOracle::oplus(const ChainElem& x, const ChainElem& y) const {
  return alg_.oplus(index_of(x), index_of(y));
}

ChainElem TableChainOracle::neg(const ChainElem& x) const {
  return alg_.neg(index_of(x));
}

int TableChainOracle::compare(const ChainElem& x, const ChainElem& y) const {
  return rank_[static_cast<std::size_t>(index_of(x))] -
         rank_[static_cast<std::size_t>(index_of(y))];
}

void TableChainOracle::validate(const ChainElem& x) const { index_of(x); }

std::string TableChainOracle::format(const ChainElem& x) const {
  return alg_.name_of(index_of(x));
}

ChainElem TableChainOracle::parse(std::string_view text) const {
  for (int i = 0; i < alg_.size(); ++i) {
    if (alg_.name_of(i) == text) return i;
  }
  throw ParseError("unknown table element '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- helpers

std::unique_ptr<ChainOracle> make_oracle(std::string_view selector) {
  std::string_view s = trim(selector);
  if (s == "qunit") return std::make_unique<RationalChainOracle>();
  if (s == "chang") return std::make_unique<ChangAlgebraOracle>();
  if (s.substr(0, 3) == "lk:") {
    Integer k = parse_mpz(trim(s.substr(3)));
    if (k < 1) {
      throw ParseError("invalid chain size in '" + std::string(selector) + "'");
    }
    return std::make_unique<FiniteChainOracle>(k);
  }
  throw ParseError("unknown algebra '" + std::string(selector) +
                   "', expected lk:<k>, qunit or chang");
}

std::vector<ChainElem> parse_element_list(const ChainOracle& oracle,
                                          std::string_view text) {
  std::vector<ChainElem> out;
  std::string item;
  int depth = 0;
  bool pending = false;  // a top-level comma promised one more element
  auto flush = [&]() {
    std::string_view t = trim(item);
    if (t.empty()) throw ParseError("empty element in list");
    out.push_back(oracle.parse(t));
    item.clear();
    pending = false;
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
      pending = true;
    } else {
      item += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in element list");
  if (!trim(item).empty() || pending || out.empty()) flush();
  return out;
}

PartialSubalgebra sample_partial(const ChainOracle& oracle,
                                 std::span<const ChainElem> elements) {
  const int n = static_cast<int>(elements.size());
  for (int i = 0; i < n; ++i) {
    oracle.validate(elements[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      if (oracle.eq(elements[static_cast<std::size_t>(i)],
                    elements[static_cast<std::size_t>(j)])) {
        throw InvalidInput("duplicate element " +
                           oracle.format(elements[static_cast<std::size_t>(i)]));
      }
    }
  }

  auto position = [&](const ChainElem& v) -> std::optional<int> {
    for (int i = 0; i < n; ++i) {
      if (oracle.eq(elements[static_cast<std::size_t>(i)], v)) return i;
    }
    return std::nullopt;
  };

  PartialSubalgebra part;
  part.labels.reserve(static_cast<std::size_t>(n));
  for (const ChainElem& e : elements) part.labels.push_back(oracle.format(e));
  part.oplus.assign(static_cast<std::size_t>(n),
                    std::vector<std::optional<int>>(static_cast<std::size_t>(n)));
  part.neg.assign(static_cast<std::size_t>(n), std::nullopt);
  part.zero_pos = position(oracle.zero());
  part.one_pos = position(oracle.one());
  for (int i = 0; i < n; ++i) {
    const ChainElem& xi = elements[static_cast<std::size_t>(i)];
    part.neg[static_cast<std::size_t>(i)] = position(oracle.neg(xi));
    for (int j = 0; j < n; ++j) {
      const ChainElem& xj = elements[static_cast<std::size_t>(j)];
      part.oplus[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          position(oracle.oplus(xi, xj));
    }
  }
  return part;
}

}  // namespace mvfep
