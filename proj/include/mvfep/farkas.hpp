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

#ifndef MVFEP_FARKAS_HPP
#define MVFEP_FARKAS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mvfep/rational.hpp"

namespace mvfep {

/// A system of linear inequalities A*x <= b over the rationals.
struct LinearSystem {
  std::vector<std::vector<Rational>> a;  // m rows, n columns each
  std::vector<Rational> b;               // m right-hand sides

  int rows() const { return static_cast<int>(a.size()); }
  int cols() const { return a.empty() ? 0 : static_cast<int>(a[0].size()); }

  /// Throws InvalidInput unless m, n >= 1 and all rows have equal width.
  void validate() const;
};

/// A point satisfying A*x <= b componentwise, exactly.
struct Solution {
  std::vector<Rational> x;
};

/// A nonnegative row vector with lambda*A = 0 and lambda*b < 0, proving
/// that no rational solution exists.
struct Certificate {
  std::vector<Rational> lambda;
};

/// Exactly one arm, always.
using FeasibilityResult = std::variant<Solution, Certificate>;

struct SolveOptions {
  /// Cap on live intermediate rows during elimination. Exceeding it is a
  /// resource error, not a wrong answer.
  std::size_t row_cap = 200000;
};

/// Row in sparse form: (column, value) pairs sorted by column, values
/// nonzero. Valuation systems are overwhelmingly sparse.
struct SparseRow {
  std::vector<std::pair<int, Rational>> coef;
  Rational rhs;
};

struct SparseSystem {
  int num_vars = 0;
  std::vector<SparseRow> rows;

  void validate() const;
};

LinearSystem to_dense(const SparseSystem& sys);

/// Decides A*x <= b by Fourier-Motzkin elimination with per-row multiplier
/// tracking, preceded by an exact Gaussian presolve of complementary row
/// pairs (rows occurring with both signs encode equalities). Deterministic
/// for a fixed system: variables are eliminated in ascending index order
/// and back-substitution picks the midpoint of a two-sided residual
/// interval, the finite bound of a one-sided one, and 0 otherwise.
FeasibilityResult solve_inequalities(const LinearSystem& sys,
                                     const SolveOptions& opts = {});

/// Same algorithm, sparse input; certificates still cover every input row.
FeasibilityResult solve_inequalities_sparse(const SparseSystem& sys,
                                            const SolveOptions& opts = {});

/// Exact re-check of the arm's defining conditions.
bool verify_result(const LinearSystem& sys, const FeasibilityResult& result);

/// Scales a nonnegative rational vector by the lcm of its denominators.
/// The certificate conditions are invariant under positive scaling.
std::vector<Integer> integerize_certificate(std::span<const Rational> lambda);

/// Row vector y with y*A >= 0 and y*c < 0, witnessing that no x >= 0
/// solves A*x = c.
struct DualVector {
  std::vector<Rational> y;
};

using EqualityResult = std::variant<Solution, DualVector>;

/// Decides whether some x >= 0 satisfies A*x = c, by reduction to
/// solve_inequalities on the stacked system {A*x <= c, -A*x <= -c, -x <= 0}.
/// The infeasibility witness y is derived from the stacked certificate and
/// re-verified against both of its defining conditions before returning.
EqualityResult solve_equality_nonneg(const std::vector<std::vector<Rational>>& a,
                                     const std::vector<Rational>& c,
                                     const SolveOptions& opts = {});

bool verify_equality_result(const std::vector<std::vector<Rational>>& a,
                            const std::vector<Rational>& c,
                            const EqualityResult& result);

}  // namespace mvfep

#endif  // MVFEP_FARKAS_HPP
