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

#include "mvfep/farkas.hpp"

#include <random>

#include <doctest.h>

using namespace mvfep;

namespace {

std::mt19937_64 rng(97531);

long ri(long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Rational random_coef() { return Rational(ri(-10, 10), ri(1, 10)); }

LinearSystem random_system(int max_vars = 12, int max_rows = 30) {
  int n = static_cast<int>(ri(1, max_vars));
  int m = static_cast<int>(ri(1, max_rows));
  LinearSystem sys;
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> row;
    for (int j = 0; j < n; ++j) {
      row.push_back(ri(0, 2) == 0 ? Rational(0) : random_coef());
    }
    sys.a.push_back(std::move(row));
    sys.b.push_back(random_coef());
  }
  return sys;
}

// Plant a known solution: b := A*x0 (+ slack on some rows).
LinearSystem planted_feasible() {
  LinearSystem sys = random_system();
  std::vector<Rational> x0;
  for (int j = 0; j < sys.cols(); ++j) x0.push_back(random_coef());
  for (int i = 0; i < sys.rows(); ++i) {
    Rational dot(0);
    for (int j = 0; j < sys.cols(); ++j) {
      dot += sys.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             x0[static_cast<std::size_t>(j)];
    }
    sys.b[static_cast<std::size_t>(i)] = dot + Rational(ri(0, 3));
  }
  return sys;
}

// Plant infeasibility: append a row making a positive combination sum to
// 0 <= -1.
LinearSystem planted_infeasible() {
  LinearSystem sys = random_system(12, 20);
  std::vector<Rational> combo(static_cast<std::size_t>(sys.cols()), Rational(0));
  Rational rhs(0);
  for (int i = 0; i < sys.rows(); ++i) {
    Rational mu(ri(0, 3), ri(1, 3));
    if (mu.is_zero() && i == 0) mu = Rational(1);
    for (int j = 0; j < sys.cols(); ++j) {
      combo[static_cast<std::size_t>(j)] +=
          mu * sys.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    rhs += mu * sys.b[static_cast<std::size_t>(i)];
  }
  std::vector<Rational> last;
  for (const Rational& v : combo) last.push_back(-v);
  sys.a.push_back(std::move(last));
  sys.b.push_back(-rhs - Rational(1));
  return sys;
}

}  // namespace

TEST_CASE("contradictory bounds yield the textbook certificate") {
  LinearSystem sys;
  sys.a = {{Rational(1)}, {Rational(-1)}};
  sys.b = {Rational(1), Rational(-2)};  // x <= 1 and x >= 2
  FeasibilityResult res = solve_inequalities(sys);
  REQUIRE(std::holds_alternative<Certificate>(res));
  CHECK(verify_result(sys, res));
  auto lambda_int = integerize_certificate(std::get<Certificate>(res).lambda);
  REQUIRE(lambda_int.size() == 2);
  CHECK(lambda_int[0] == 1);
  CHECK(lambda_int[1] == 1);
}

TEST_CASE("one-sided bound returns its finite bound") {
  LinearSystem sys;
  sys.a = {{Rational(-1)}};
  sys.b = {Rational(-1)};  // x >= 1
  FeasibilityResult res = solve_inequalities(sys);
  REQUIRE(std::holds_alternative<Solution>(res));
  CHECK(verify_result(sys, res));
  CHECK(std::get<Solution>(res).x[0] == Rational(1));
}

TEST_CASE("planted 3-variable system lands on the solution arm") {
  for (int t = 0; t < 20; ++t) {
    LinearSystem sys;
    std::vector<Rational> x0{random_coef(), random_coef(), random_coef()};
    for (int i = 0; i < 6; ++i) {
      std::vector<Rational> row{random_coef(), random_coef(), random_coef()};
      Rational dot(0);
      for (int j = 0; j < 3; ++j) dot += row[static_cast<std::size_t>(j)] * x0[static_cast<std::size_t>(j)];
      sys.a.push_back(std::move(row));
      sys.b.push_back(dot);
    }
    FeasibilityResult res = solve_inequalities(sys);
    REQUIRE(std::holds_alternative<Solution>(res));
    CHECK(verify_result(sys, res));
  }
}

TEST_CASE("dichotomy with verified arms over the three populations") {
  for (int t = 0; t < 60; ++t) {
    LinearSystem sys = planted_feasible();
    FeasibilityResult res = solve_inequalities(sys);
    CHECK(std::holds_alternative<Solution>(res));
    CHECK(verify_result(sys, res));
  }
  for (int t = 0; t < 60; ++t) {
    LinearSystem sys = planted_infeasible();
    FeasibilityResult res = solve_inequalities(sys);
    CHECK(std::holds_alternative<Certificate>(res));
    CHECK(verify_result(sys, res));
  }
  for (int t = 0; t < 60; ++t) {
    LinearSystem sys = random_system();
    FeasibilityResult res = solve_inequalities(sys);
    CHECK(verify_result(sys, res));
  }
}

TEST_CASE("a broken certificate fails verification") {
  LinearSystem sys;
  sys.a = {{Rational(1)}, {Rational(-1)}};
  sys.b = {Rational(1), Rational(-2)};
  // lambda*b = 0 violates the strict inequality.
  FeasibilityResult res = Certificate{{Rational(0), Rational(0)}};
  CHECK_FALSE(verify_result(sys, res));
  FeasibilityResult res2 = Certificate{{Rational(2), Rational(1)}};  // lambda*A != 0
  CHECK_FALSE(verify_result(sys, res2));
  FeasibilityResult good = Certificate{{Rational(1), Rational(1)}};
  CHECK(verify_result(sys, good));
}

TEST_CASE("integerize scales by the denominator lcm") {
  std::vector<Rational> lam{Rational(1, 2), Rational(1, 3)};
  auto out = integerize_certificate(lam);
  CHECK(out == std::vector<Integer>{3, 2});

  std::vector<Rational> already{Rational(0), Rational(0), Rational(1)};
  CHECK(integerize_certificate(already) == std::vector<Integer>{0, 0, 1});

  std::vector<Rational> mixed{Rational(2, 3), Rational(5, 6), Rational(0)};
  CHECK(integerize_certificate(mixed) == std::vector<Integer>{4, 5, 0});

  std::vector<Rational> negative{Rational(-1, 2)};
  CHECK_THROWS_AS(integerize_certificate(negative), InvalidInput);
}

TEST_CASE("integerizing preserves the certificate conditions") {
  for (int t = 0; t < 40; ++t) {
    LinearSystem sys = planted_infeasible();
    FeasibilityResult res = solve_inequalities(sys);
    REQUIRE(std::holds_alternative<Certificate>(res));
    const auto& lam = std::get<Certificate>(res).lambda;
    auto lam_int = integerize_certificate(lam);
    std::vector<Rational> as_rat;
    for (const Integer& v : lam_int) {
      CHECK(v >= 0);
      as_rat.push_back(Rational(v));
    }
    CHECK(verify_result(sys, FeasibilityResult{Certificate{as_rat}}));
  }
}

TEST_CASE("dimension mismatches are rejected") {
  LinearSystem sys;
  sys.a = {{Rational(1), Rational(2)}, {Rational(1)}};
  sys.b = {Rational(0), Rational(0)};
  CHECK_THROWS_AS(solve_inequalities(sys), InvalidInput);

  LinearSystem empty;
  CHECK_THROWS_AS(solve_inequalities(empty), InvalidInput);

  LinearSystem short_b;
  short_b.a = {{Rational(1)}};
  CHECK_THROWS_AS(solve_inequalities(short_b), InvalidInput);
}

TEST_CASE("deterministic for a fixed system") {
  LinearSystem sys = random_system();
  FeasibilityResult a = solve_inequalities(sys);
  FeasibilityResult b = solve_inequalities(sys);
  REQUIRE(a.index() == b.index());
  if (auto* sa = std::get_if<Solution>(&a)) {
    CHECK(sa->x == std::get<Solution>(b).x);
  } else {
    CHECK(std::get<Certificate>(a).lambda == std::get<Certificate>(b).lambda);
  }
}

TEST_CASE("row cap raises a resource error") {
  SolveOptions opts;
  opts.row_cap = 1;
  LinearSystem sys;
  sys.a = {{Rational(1), Rational(1)},
           {Rational(-1), Rational(2)},
           {Rational(2), Rational(-1)}};
  sys.b = {Rational(1), Rational(1), Rational(1)};
  CHECK_THROWS_AS(solve_inequalities(sys, opts), ResourceLimit);
}

TEST_CASE("equality form: no nonnegative preimage") {
  // A = (1), c = (-1): no x >= 0 with x = -1.
  std::vector<std::vector<Rational>> a{{Rational(1)}};
  std::vector<Rational> c{Rational(-1)};
  EqualityResult res = solve_equality_nonneg(a, c);
  REQUIRE(std::holds_alternative<DualVector>(res));
  const auto& y = std::get<DualVector>(res).y;
  REQUIRE(y.size() == 1);
  // y*A >= 0 and y*c < 0; y = (1) is the certificate here.
  CHECK(y[0] == Rational(1));
  CHECK(verify_equality_result(a, c, res));
}

TEST_CASE("equality form: identity system returns the target") {
  std::vector<std::vector<Rational>> a{{Rational(1), Rational(0)},
                                       {Rational(0), Rational(1)}};
  std::vector<Rational> c{Rational(1), Rational(2)};
  EqualityResult res = solve_equality_nonneg(a, c);
  REQUIRE(std::holds_alternative<Solution>(res));
  CHECK(std::get<Solution>(res).x == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(verify_equality_result(a, c, res));
}

TEST_CASE("equality form: randomized dichotomy") {
  for (int t = 0; t < 40; ++t) {
    int m = static_cast<int>(ri(1, 4)), n = static_cast<int>(ri(1, 4));
    std::vector<std::vector<Rational>> a;
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < n; ++j) row.push_back(random_coef());
      a.push_back(std::move(row));
    }
    std::vector<Rational> c;
    for (int i = 0; i < m; ++i) c.push_back(random_coef());
    EqualityResult res = solve_equality_nonneg(a, c);
    CHECK(verify_equality_result(a, c, res));
  }
}

TEST_CASE("sparse systems validate their shape") {
  SparseSystem sys;
  sys.num_vars = 2;
  sys.rows.push_back(SparseRow{{{0, Rational(1)}, {1, Rational(1)}}, Rational(1)});
  CHECK(std::holds_alternative<Solution>(solve_inequalities_sparse(sys)));

  SparseSystem unsorted;
  unsorted.num_vars = 2;
  unsorted.rows.push_back(
      SparseRow{{{1, Rational(1)}, {0, Rational(1)}}, Rational(1)});
  CHECK_THROWS_AS(solve_inequalities_sparse(unsorted), InvalidInput);

  SparseSystem out_of_range;
  out_of_range.num_vars = 1;
  out_of_range.rows.push_back(SparseRow{{{3, Rational(1)}}, Rational(0)});
  CHECK_THROWS_AS(solve_inequalities_sparse(out_of_range), InvalidInput);

  SparseSystem explicit_zero;
  explicit_zero.num_vars = 1;
  explicit_zero.rows.push_back(SparseRow{{{0, Rational(0)}}, Rational(0)});
  CHECK_THROWS_AS(solve_inequalities_sparse(explicit_zero), InvalidInput);
}

TEST_CASE("dense and sparse entry points agree") {
  for (int t = 0; t < 30; ++t) {
    LinearSystem sys = random_system(6, 10);
    SparseSystem sparse = {sys.cols(), {}};
    for (int i = 0; i < sys.rows(); ++i) {
      SparseRow row;
      for (int j = 0; j < sys.cols(); ++j) {
        const Rational& v = sys.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!v.is_zero()) row.coef.emplace_back(j, v);
      }
      row.rhs = sys.b[static_cast<std::size_t>(i)];
      sparse.rows.push_back(std::move(row));
    }
    FeasibilityResult a = solve_inequalities(sys);
    FeasibilityResult b = solve_inequalities_sparse(sparse);
    REQUIRE(a.index() == b.index());
    if (auto* sa = std::get_if<Solution>(&a)) {
      CHECK(sa->x == std::get<Solution>(b).x);
    } else {
      CHECK(std::get<Certificate>(a).lambda == std::get<Certificate>(b).lambda);
    }
  }
}

TEST_CASE("verification rejects wrong-length vectors") {
  LinearSystem sys;
  sys.a = {{Rational(1), Rational(0)}};
  sys.b = {Rational(1)};
  CHECK_FALSE(verify_result(sys, FeasibilityResult{Solution{{Rational(0)}}}));
  CHECK_FALSE(verify_result(
      sys, FeasibilityResult{Certificate{{Rational(0), Rational(0)}}}));
}
