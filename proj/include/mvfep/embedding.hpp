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

#ifndef MVFEP_EMBEDDING_HPP
#define MVFEP_EMBEDDING_HPP

#include <optional>
#include <span>
#include <vector>

#include "mvfep/chain_oracle.hpp"
#include "mvfep/farkas.hpp"
#include "mvfep/filters.hpp"
#include "mvfep/mv_algebra.hpp"

namespace mvfep {

/// The solver certified a valuation system of a supposed MV-chain as
/// infeasible. That cannot happen for a genuine chain, so this error exposes
/// either a bug or a non-MV oracle. Carries the Farkas multiplier.
class OracleContradiction : public Error {
 public:
  OracleContradiction(const std::string& msg, std::vector<Rational> lam)
      : Error(msg), lambda(std::move(lam)) {}

  std::vector<Rational> lambda;
};

/// {x (+) y : x, y in X ∪ {0,1}}, sorted ascending by the oracle order.
/// Always starts with 0 and ends with 1. Zeros in X are stripped first;
/// duplicates are an error.
std::vector<ChainElem> closure_oplus(const ChainOracle& oracle,
                                     std::span<const ChainElem> x);

/// {x (-) y : x, y in X ∪ {0,1}} \ {0}, sorted ascending.
std::vector<ChainElem> ominus_closure(const ChainOracle& oracle,
                                      std::span<const ChainElem> x);

/// The exact rational system a valuation of a finite chain subset must
/// satisfy. Variables z_1..z_n stand for the nonzero closure elements
/// y_1 < ... < y_n = 1. For every unordered pair x, y of the base set with
/// x <= neg y there is one row: +1 at x and at y (+2 when x = y) and -1 at
/// x (+) y, asserting additivity where the truncated sum is a group sum.
struct ValuationSystem {
  std::vector<ChainElem> elements;  // y_0 = 0 < y_1 < ... < y_n = 1
  std::vector<ChainElem> base;      // generating set, sorted, 0 stripped
  std::vector<SparseRow> sum_rows;  // additivity rows over z_1..z_n, rhs 0
  // Generating pair of each row, as positions into `elements`; equal
  // positions mark the doubled x = y rows.
  std::vector<std::pair<int, int>> row_pairs;

  int vars() const { return static_cast<int>(elements.size()) - 1; }

  /// The assembled feasibility problem: z >= 1 and sum_rows * z = 0,
  /// stacked as (-E; A; -A) <= (-1; 0; 0).
  SparseSystem stacked() const;

  /// stacked() plus the bound rows z_j <= z_n. The bounds keep every
  /// valuation inside [0,1] and force the truncation behaviour the
  /// embedding needs; they are satisfied by the element values themselves,
  /// so feasibility is unaffected.
  SparseSystem solver_input() const;

  /// Position of an element in `elements`, by oracle equality.
  std::optional<int> position(const ChainOracle& oracle,
                              const ChainElem& e) const;
};

ValuationSystem build_valuation_system(const ChainOracle& oracle,
                                       std::span<const ChainElem> x);

/// A rationally valued map s on X ∪ {0,1} with s(0) = 0, s(1) = 1,
/// s(x) > 0 on X, and s(x (+) y) = s(x) + s(y) whenever x <= neg y and all
/// three lie in the domain. Obtained as s(x) = q_{j_x} / q_n from a point q
/// of the valuation system.
struct RationalValuation {
  std::vector<ChainElem> domain;  // {0} ∪ base ∪ {1}, ascending
  std::vector<Rational> values;   // s, parallel to domain
  std::vector<Rational> q;        // solver point over z_1..z_n
  ValuationSystem system;

  std::optional<Rational> value_of(const ChainOracle& oracle,
                                   const ChainElem& e) const;
};

/// Solves the valuation system. A Certificate arm is impossible for an
/// MV-chain and raises OracleContradiction; the result is re-verified
/// before returning.
RationalValuation rational_valuation(const ChainOracle& oracle,
                                     std::span<const ChainElem> x,
                                     const SolveOptions& opts = {});

/// Exhaustive check of the valuation conditions over X ∪ {0,1}, plus the
/// structural invariants: values in [0,1], q >= 1, sum_rows * q = 0, and
/// s given by the prescription from q.
VerifyReport verify_valuation(const RationalValuation& val,
                              const ChainOracle& oracle,
                              std::span<const ChainElem> x);

/// An embedding f of the partial subalgebra on X into the finite chain L_k.
struct ChainEmbedding {
  Integer k;
  std::vector<ChainElem> domain;  // X, in input order
  std::vector<Rational> image;    // f(x) in L_k, parallel to domain
  RationalValuation valuation;    // valuation of the ominus closure of X
};

/// Embeds a finite subset of a linearly ordered oracle into L_k: builds the
/// ominus closure Y = {x (-) y} \ {0}, obtains a valuation of Y, restricts
/// it to X and takes k as the lcm of the image denominators.
ChainEmbedding embed_chain(const ChainOracle& oracle,
                           std::span<const ChainElem> x,
                           const SolveOptions& opts = {});

/// Injectivity, strict order preservation, preservation of every defined
/// oplus/neg/0/1 instance, and image denominators dividing k.
VerifyReport verify_chain_embedding(const ChainOracle& oracle,
                                    const ChainEmbedding& emb);

/// An embedding of a finite MV-algebra into L_k^l: prime filters P_1..P_l
/// separate the carrier, each quotient (a chain) embeds into L_k, and
/// f(x)(i) is the image of x/P_i.
struct ProductEmbedding {
  Integer k;
  int l = 0;
  std::vector<Filter> filters;
  std::vector<std::vector<Rational>> image;  // element -> l values in L_k
};

ProductEmbedding embed_finite_mv(const FiniteMvAlgebra& alg,
                                 const SolveOptions& opts = {});

/// Injective total homomorphism check, exhaustive over all pairs.
VerifyReport verify_product_embedding(const FiniteMvAlgebra& alg,
                                      const ProductEmbedding& emb);

}  // namespace mvfep

#endif  // MVFEP_EMBEDDING_HPP
