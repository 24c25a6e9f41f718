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

#ifndef MVFEP_MV_ALGEBRA_HPP
#define MVFEP_MV_ALGEBRA_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvfep/errors.hpp"
#include "mvfep/rational.hpp"

namespace mvfep {

struct AxiomFailure {
  std::string axiom;          // "MV1".."MV6", or "adjointness"
  std::vector<int> witness;   // the offending element tuple
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomFailure> failures;
};

/// A finite MV-algebra presented by its Cayley tables. Elements are opaque
/// indices 0..n-1; pretty names live in an optional display layer.
/// Construction validates table shape only; check_axioms() decides whether
/// the tables actually satisfy MV1-MV6.
class FiniteMvAlgebra {
 public:
  FiniteMvAlgebra(std::vector<std::vector<int>> oplus_table,
                  std::vector<int> neg_table, int zero,
                  std::vector<std::string> names = {});

  /// The MV-chain on {0, 1/k, ..., 1} with truncated addition. k >= 1.
  static FiniteMvAlgebra chain(int k);

  /// The one-element algebra (0 = 1).
  static FiniteMvAlgebra trivial();

  /// Componentwise operations on the Cartesian carrier. The first factor is
  /// the most significant digit of the element index.
  static FiniteMvAlgebra direct_product(std::span<const FiniteMvAlgebra> factors);

  int size() const { return n_; }
  int zero() const { return zero_; }
  int one() const { return one_; }

  int oplus(int a, int b) const {
    check_element(a);
    check_element(b);
    return oplus_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  int neg(int a) const {
    check_element(a);
    return neg_[static_cast<std::size_t>(a)];
  }

  int odot(int a, int b) const { return neg(oplus(neg(a), neg(b))); }
  int arrow(int a, int b) const { return oplus(neg(a), b); }
  int ominus(int a, int b) const { return odot(a, neg(b)); }
  int join(int a, int b) const { return oplus(neg(oplus(neg(a), b)), b); }
  int meet(int a, int b) const { return neg(join(neg(a), neg(b))); }
  bool le(int a, int b) const { return arrow(a, b) == one_; }

  /// Exhaustive check of MV1-MV6 over all 1-, 2- and 3-tuples. Each failure
  /// cites the axiom tag and a witness tuple.
  AxiomReport check_axioms() const;

  /// x (.) y <= z iff x <= y -> z, over all triples.
  bool check_adjointness(AxiomFailure* witness = nullptr) const;

  /// Whether the derived order is total on the carrier.
  bool is_chain() const;

  const std::string& name_of(int a) const {
    check_element(a);
    return names_[static_cast<std::size_t>(a)];
  }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const FiniteMvAlgebra& a, const FiniteMvAlgebra& b) {
    return a.n_ == b.n_ && a.zero_ == b.zero_ && a.neg_ == b.neg_ &&
           a.oplus_ == b.oplus_;
  }

 private:
  void check_element(int a) const {
    if (a < 0 || a >= n_) {
      throw InvalidInput("element index " + std::to_string(a) +
                         " outside carrier of size " + std::to_string(n_));
    }
  }

  int n_;
  std::vector<std::vector<int>> oplus_;
  std::vector<int> neg_;
  int zero_;
  int one_;
  std::vector<std::string> names_;
};

/// A partial subalgebra in the sense of restriction: an operation value is
/// present iff the parent's result lies in the chosen carrier. Presence is
/// frozen at restriction time.
struct PartialSubalgebra {
  std::vector<std::string> labels;  // carrier elements, display form
  std::vector<std::vector<std::optional<int>>> oplus;  // defined -> position
  std::vector<std::optional<int>> neg;
  std::optional<int> zero_pos;  // position of the parent's 0, if present
  std::optional<int> one_pos;   // position of the parent's 1, if present

  int size() const { return static_cast<int>(labels.size()); }
};

/// Restriction of a table algebra to a duplicate-free subset of its carrier.
PartialSubalgebra restrict_to(const FiniteMvAlgebra& alg,
                              std::span<const int> carrier);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

/// Checks that an assignment is an embedding of a partial subalgebra:
/// injective and preserving every defined instance of oplus, neg, 0 and 1.
/// Ops abstracts the target algebra (table algebra or chain oracle).
template <typename Ops>
VerifyReport verify_partial_embedding(const PartialSubalgebra& dom,
                                      const Ops& ops,
                                      const std::vector<typename Ops::Elem>& image) {
  VerifyReport rep;
  if (static_cast<int>(image.size()) != dom.size()) {
    rep.fail("assignment is not total on the carrier");
    return rep;
  }
  const int n = dom.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (ops.eq(image[static_cast<std::size_t>(i)],
                 image[static_cast<std::size_t>(j)])) {
        rep.fail("not injective: " + dom.labels[static_cast<std::size_t>(i)] +
                 " and " + dom.labels[static_cast<std::size_t>(j)] +
                 " both map to " + ops.str(image[static_cast<std::size_t>(i)]));
      }
    }
  }
  if (dom.zero_pos &&
      !ops.eq(image[static_cast<std::size_t>(*dom.zero_pos)], ops.zero())) {
    rep.fail("0 maps to " +
             ops.str(image[static_cast<std::size_t>(*dom.zero_pos)]) +
             ", not to the target 0");
  }
  if (dom.one_pos &&
      !ops.eq(image[static_cast<std::size_t>(*dom.one_pos)], ops.one())) {
    rep.fail("1 maps to " +
             ops.str(image[static_cast<std::size_t>(*dom.one_pos)]) +
             ", not to the target 1");
  }
  for (int i = 0; i < n; ++i) {
    if (!dom.neg[static_cast<std::size_t>(i)]) continue;
    int t = *dom.neg[static_cast<std::size_t>(i)];
    if (!ops.eq(image[static_cast<std::size_t>(t)],
                ops.neg(image[static_cast<std::size_t>(i)]))) {
      rep.fail("neg not preserved at " + dom.labels[static_cast<std::size_t>(i)]);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& t = dom.oplus[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!t) continue;
      if (!ops.eq(image[static_cast<std::size_t>(*t)],
                  ops.oplus(image[static_cast<std::size_t>(i)],
                            image[static_cast<std::size_t>(j)]))) {
        rep.fail("oplus not preserved at (" +
                 dom.labels[static_cast<std::size_t>(i)] + ", " +
                 dom.labels[static_cast<std::size_t>(j)] + ")");
      }
    }
  }
  return rep;
}

/// Target-side operations of a table algebra, for verify_partial_embedding.
struct TableOps {
  using Elem = int;
  const FiniteMvAlgebra& alg;

  bool eq(int a, int b) const { return a == b; }
  int oplus(int a, int b) const { return alg.oplus(a, b); }
  int neg(int a) const { return alg.neg(a); }
  int zero() const { return alg.zero(); }
  int one() const { return alg.one(); }
  std::string str(int a) const { return alg.name_of(a); }
};

}  // namespace mvfep

#endif  // MVFEP_MV_ALGEBRA_HPP
