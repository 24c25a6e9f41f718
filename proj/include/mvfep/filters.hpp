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

#ifndef MVFEP_FILTERS_HPP
#define MVFEP_FILTERS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mvfep/mv_algebra.hpp"

namespace mvfep {

/// A filter: contains 1, upward closed, closed under odot. Kernels of
/// congruences; the congruence lattice is the filter lattice.
struct Filter {
  std::vector<int> members;  // sorted ascending

  bool contains(int x) const;

  friend bool operator==(const Filter& a, const Filter& b) {
    return a.members == b.members;
  }
  friend bool operator<(const Filter& a, const Filter& b) {
    if (a.members.size() != b.members.size()) {
      return a.members.size() < b.members.size();
    }
    return a.members < b.members;
  }
};

/// The three defining closure conditions, checked exhaustively.
bool is_filter(const FiniteMvAlgebra& alg, const Filter& f);

/// Least filter containing the seed: odot products and upward closure,
/// iterated to a fixpoint.
Filter generated_filter(const FiniteMvAlgebra& alg, std::span<const int> seed);

/// All filters, by breadth-first search over generated filters (extend by
/// one generator at a time); the filter lattice is tiny compared to the
/// powerset. Sorted by size, then lexicographically.
std::vector<Filter> enumerate_filters(const FiniteMvAlgebra& alg,
                                      int size_cap = 64);

/// Primality by the pair test: x->y in F or y->x in F for all x, y.
bool is_prime(const FiniteMvAlgebra& alg, const Filter& f);

/// Maximal proper filter; maximality decided against the full enumeration
/// (pass it in to avoid re-enumerating).
bool is_ultra(const FiniteMvAlgebra& alg, const Filter& f,
              const std::vector<Filter>* all_filters = nullptr);

struct QuotientAlgebra {
  FiniteMvAlgebra algebra;
  std::vector<int> projection;  // parent element -> class index
};

/// Quotient by the congruence x ~ y iff (x->y)(.)(y->x) in F. Class
/// representatives are least element indices, which fixes the emitted
/// tables.
QuotientAlgebra quotient(const FiniteMvAlgebra& alg, const Filter& f);

/// A finite list of prime filters separating every pair of X: greedy over
/// the enumeration order, skipping pairs already separated.
std::vector<Filter> separating_prime_filters(const FiniteMvAlgebra& alg,
                                             std::span<const int> x);

/// A filter of subsets of the finite index set {0..universe-1}; subsets are
/// bitmasks. May be improper (contain the empty set).
struct SetFilter {
  int universe = 0;
  std::vector<std::uint32_t> members;  // sorted ascending

  bool contains(std::uint32_t mask) const;
  /// Throws InvalidInput unless nonempty, upward closed and meet closed.
  void validate() const;
};

struct ReducedProduct {
  FiniteMvAlgebra product;      // the direct product of the factors
  FiniteMvAlgebra algebra;      // product modulo the induced congruence
  std::vector<int> projection;  // product element -> class index
};

/// Product of the factors modulo the congruence relating x and y iff the
/// set of coordinates where they agree belongs to the filter.
ReducedProduct reduced_product(std::span<const FiniteMvAlgebra> factors,
                               const SetFilter& f);

}  // namespace mvfep

#endif  // MVFEP_FILTERS_HPP
