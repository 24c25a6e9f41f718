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

#ifndef MVFEP_CHAIN_ORACLE_HPP
#define MVFEP_CHAIN_ORACLE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mvfep/mv_algebra.hpp"
#include "mvfep/rational.hpp"

namespace mvfep {

/// Element of the unit interval of the lexicographic group Z x Z with
/// strong unit (1,0). Elements (0,n) with n >= 1 are infinitesimals.
struct ChangElem {
  Integer a;
  Integer b;

  friend bool operator==(const ChangElem& x, const ChangElem& y) {
    return x.a == y.a && x.b == y.b;
  }
};

/// Element of a linearly ordered oracle. Which alternative is valid depends
/// on the oracle variant; table-backed chains use carrier indices.
using ChainElem = std::variant<Rational, ChangElem, int>;

/// A linearly ordered MV-algebra presented operationally rather than by
/// tables: element-wise oplus/neg plus a total order.
class ChainOracle {
 public:
  virtual ~ChainOracle() = default;

  /// Oracle selector as used by the CLI: "lk:<k>", "qunit", "chang".
  virtual std::string name() const = 0;

  virtual ChainElem zero() const = 0;
  virtual ChainElem one() const = 0;
  virtual ChainElem oplus(const ChainElem& x, const ChainElem& y) const = 0;
  virtual ChainElem neg(const ChainElem& x) const = 0;
  /// Total order; returns <0, 0 or >0.
  virtual int compare(const ChainElem& x, const ChainElem& y) const = 0;
  /// Throws InvalidInput when the element does not belong to the carrier.
  virtual void validate(const ChainElem& x) const = 0;
  virtual std::string format(const ChainElem& x) const = 0;
  virtual ChainElem parse(std::string_view text) const = 0;

  bool eq(const ChainElem& x, const ChainElem& y) const {
    return compare(x, y) == 0;
  }
  bool le(const ChainElem& x, const ChainElem& y) const {
    return compare(x, y) <= 0;
  }
  ChainElem odot(const ChainElem& x, const ChainElem& y) const {
    return neg(oplus(neg(x), neg(y)));
  }
  ChainElem ominus(const ChainElem& x, const ChainElem& y) const {
    return odot(x, neg(y));
  }
};

/// L_k on {0, 1/k, ..., 1}. k may be arbitrarily large, so the carrier is
/// never materialized; elements are rationals with denominator dividing k.
class FiniteChainOracle final : public ChainOracle {
 public:
  explicit FiniteChainOracle(Integer k);

  const Integer& k() const { return k_; }

  std::string name() const override;
  ChainElem zero() const override { return Rational(0); }
  ChainElem one() const override { return Rational(1); }
  ChainElem oplus(const ChainElem& x, const ChainElem& y) const override;
  ChainElem neg(const ChainElem& x) const override;
  int compare(const ChainElem& x, const ChainElem& y) const override;
  void validate(const ChainElem& x) const override;
  std::string format(const ChainElem& x) const override;
  ChainElem parse(std::string_view text) const override;

 private:
  Integer k_;
};

/// The rational unit interval with truncated addition.
class RationalChainOracle final : public ChainOracle {
 public:
  std::string name() const override { return "qunit"; }
  ChainElem zero() const override { return Rational(0); }
  ChainElem one() const override { return Rational(1); }
  ChainElem oplus(const ChainElem& x, const ChainElem& y) const override;
  ChainElem neg(const ChainElem& x) const override;
  int compare(const ChainElem& x, const ChainElem& y) const override;
  void validate(const ChainElem& x) const override;
  std::string format(const ChainElem& x) const override;
  ChainElem parse(std::string_view text) const override;
};

/// Chang's algebra: the interval [(0,0), (1,0)] of Z x_lex Z with truncated
/// lexicographic addition x (+) y = min_lex(u, x+y) and neg x = u - x.
class ChangAlgebraOracle final : public ChainOracle {
 public:
  std::string name() const override { return "chang"; }
  ChainElem zero() const override { return ChangElem{0, 0}; }
  ChainElem one() const override { return ChangElem{1, 0}; }
  ChainElem oplus(const ChainElem& x, const ChainElem& y) const override;
  ChainElem neg(const ChainElem& x) const override;
  int compare(const ChainElem& x, const ChainElem& y) const override;
  void validate(const ChainElem& x) const override;
  std::string format(const ChainElem& x) const override;
  ChainElem parse(std::string_view text) const override;
};

/// Adapter presenting a linearly ordered table algebra as a chain oracle,
/// so quotients by prime filters can feed the embedding pipeline. Elements
/// are carrier indices.
class TableChainOracle final : public ChainOracle {
 public:
  explicit TableChainOracle(FiniteMvAlgebra alg);

  const FiniteMvAlgebra& algebra() const { return alg_; }

  std::string name() const override { return "table"; }
  ChainElem zero() const override { return alg_.zero(); }
  ChainElem one() const override { return alg_.one(); }
  ChainElem oplus(const ChainElem& x, const ChainElem& y) const override;
  ChainElem neg(const ChainElem& x) const override;
  int compare(const ChainElem& x, const ChainElem& y) const override;
  void validate(const ChainElem& x) const override;
  std::string format(const ChainElem& x) const override;
  ChainElem parse(std::string_view text) const override;

 private:
  int index_of(const ChainElem& x) const;

  FiniteMvAlgebra alg_;
  std::vector<int> rank_;  // rank_[element] = position in the total order
};

/// Builds the oracle selected by "lk:<k>", "qunit" or "chang".
std::unique_ptr<ChainOracle> make_oracle(std::string_view selector);

/// Splits a comma-separated element list, honoring parentheses, and parses
/// each item with the oracle's element syntax.
std::vector<ChainElem> parse_element_list(const ChainOracle& oracle,
                                          std::string_view text);

/// Partial subalgebra sampled from an oracle: x (+) y is recorded iff the
/// oracle's value is again one of the chosen elements; likewise neg.
PartialSubalgebra sample_partial(const ChainOracle& oracle,
                                 std::span<const ChainElem> elements);

/// Target-side operations of an oracle, for verify_partial_embedding.
struct OracleOps {
  using Elem = ChainElem;
  const ChainOracle& oracle;

  bool eq(const ChainElem& a, const ChainElem& b) const {
    return oracle.eq(a, b);
  }
  ChainElem oplus(const ChainElem& a, const ChainElem& b) const {
    return oracle.oplus(a, b);
  }
  ChainElem neg(const ChainElem& a) const { return oracle.neg(a); }
  ChainElem zero() const { return oracle.zero(); }
  ChainElem one() const { return oracle.one(); }
  std::string str(const ChainElem& a) const { return oracle.format(a); }
};

}  // namespace mvfep

#endif  // MVFEP_CHAIN_ORACLE_HPP
