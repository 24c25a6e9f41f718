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

#include "mvfep/mv_algebra.hpp"

#include <random>

#include <doctest.h>

using namespace mvfep;

namespace {

std::mt19937_64 rng(424242);

// Index of the element p/k in the canonical chain tables.
int idx(int p) { return p; }

}  // namespace

TEST_CASE("chain tables satisfy the axioms") {
  for (int k = 1; k <= 8; ++k) {
    FiniteMvAlgebra alg = FiniteMvAlgebra::chain(k);
    CHECK(alg.size() == k + 1);
    CHECK(alg.check_axioms().ok);
    CHECK(alg.check_adjointness());
    CHECK(alg.is_chain());
  }
}

TEST_CASE("the one-element algebra satisfies all identities") {
  FiniteMvAlgebra alg = FiniteMvAlgebra::trivial();
  CHECK(alg.check_axioms().ok);
  CHECK(alg.check_adjointness());
  CHECK(alg.is_chain());
  CHECK(alg.zero() == alg.one());
}

TEST_CASE("derived operations agree with the chain formulas") {
  FiniteMvAlgebra l3 = FiniteMvAlgebra::chain(3);
  // 2/3 (.) 2/3 = 1/3: max(x+y-1, 0) through the tables.
  CHECK(l3.odot(idx(2), idx(2)) == idx(1));
  // x -> x = 1 in any algebra.
  for (int x = 0; x < l3.size(); ++x) CHECK(l3.arrow(x, x) == l3.one());
  // 2/3 (-) 1/3 = 1/3 by table lookup.
  CHECK(l3.ominus(idx(2), idx(1)) == idx(1));

  FiniteMvAlgebra l4 = FiniteMvAlgebra::chain(4);
  for (int x = 0; x <= 4; ++x) {
    for (int y = 0; y <= 4; ++y) {
      CHECK(l4.oplus(x, y) == std::min(x + y, 4));
      CHECK(l4.odot(x, y) == std::max(x + y - 4, 0));
      CHECK(l4.join(x, y) == std::max(x, y));
      CHECK(l4.meet(x, y) == std::min(x, y));
      CHECK(l4.le(x, y) == (x <= y));
    }
    CHECK(l4.neg(x) == 4 - x);
  }
}

TEST_CASE("order, lattice and adjointness are consistent on valid algebras") {
  std::vector<FiniteMvAlgebra> algs;
  algs.push_back(FiniteMvAlgebra::chain(5));
  std::vector<FiniteMvAlgebra> fac;
  fac.push_back(FiniteMvAlgebra::chain(1));
  fac.push_back(FiniteMvAlgebra::chain(2));
  algs.push_back(FiniteMvAlgebra::direct_product(fac));
  for (const auto& alg : algs) {
    REQUIRE(alg.check_axioms().ok);
    CHECK(alg.check_adjointness());
    for (int a = 0; a < alg.size(); ++a) {
      for (int b = 0; b < alg.size(); ++b) {
        bool le = alg.le(a, b);
        CHECK(le == (alg.join(a, b) == b));
        CHECK(le == (alg.meet(a, b) == a));
      }
    }
  }
}

TEST_CASE("a single mutated table entry breaks the axioms") {
  FiniteMvAlgebra l3 = FiniteMvAlgebra::chain(3);
  std::vector<std::vector<int>> oplus;
  std::vector<int> neg;
  for (int i = 0; i < l3.size(); ++i) {
    neg.push_back(l3.neg(i));
    std::vector<int> row;
    for (int j = 0; j < l3.size(); ++j) row.push_back(l3.oplus(i, j));
    oplus.push_back(std::move(row));
  }
  oplus[1][1] = 0;  // 1/3 (+) 1/3 := 0
  FiniteMvAlgebra mutated(std::move(oplus), std::move(neg), 0);
  AxiomReport rep = mutated.check_axioms();
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());
  // The report cites an axiom tag and a witness tuple.
  CHECK_FALSE(rep.failures[0].axiom.empty());
  CHECK_FALSE(rep.failures[0].witness.empty());
}

TEST_CASE("adjointness can fail on a non-MV table") {
  // neg felt as identity is not an antitone involution.
  FiniteMvAlgebra bad({{0, 1}, {1, 1}}, {0, 1}, 0);
  CHECK_FALSE(bad.check_axioms().ok);
  AxiomFailure w;
  bool adj = bad.check_adjointness(&w);
  if (!adj) CHECK(w.witness.size() == 3);
}

TEST_CASE("chains are chains, proper products are not") {
  CHECK(FiniteMvAlgebra::chain(7).is_chain());
  std::vector<FiniteMvAlgebra> fac;
  fac.push_back(FiniteMvAlgebra::chain(1));
  fac.push_back(FiniteMvAlgebra::chain(1));
  FiniteMvAlgebra sq = FiniteMvAlgebra::direct_product(fac);
  CHECK_FALSE(sq.is_chain());  // (1,0) and (0,1) are incomparable
}

TEST_CASE("direct products") {
  std::vector<FiniteMvAlgebra> fac;
  fac.push_back(FiniteMvAlgebra::chain(1));
  fac.push_back(FiniteMvAlgebra::chain(1));
  FiniteMvAlgebra b4 = FiniteMvAlgebra::direct_product(fac);
  CHECK(b4.size() == 4);  // the four-element Boolean algebra
  CHECK(b4.check_axioms().ok);
  for (int x = 0; x < 4; ++x) CHECK(b4.oplus(x, x) == x);  // idempotent

  std::vector<FiniteMvAlgebra> single;
  single.push_back(FiniteMvAlgebra::chain(2));
  FiniteMvAlgebra copy = FiniteMvAlgebra::direct_product(single);
  CHECK(copy.size() == 3);
  CHECK(copy.check_axioms().ok);
  CHECK(copy.is_chain());

  std::vector<FiniteMvAlgebra> pair;
  pair.push_back(FiniteMvAlgebra::chain(2));
  pair.push_back(FiniteMvAlgebra::chain(3));
  FiniteMvAlgebra prod = FiniteMvAlgebra::direct_product(pair);
  CHECK(prod.size() == 12);
  CHECK(prod.check_axioms().ok);
  CHECK_FALSE(prod.is_chain());

  std::vector<FiniteMvAlgebra> none;
  CHECK_THROWS_AS(FiniteMvAlgebra::direct_product(none), InvalidInput);
}

TEST_CASE("projections of a product are surjective homomorphisms") {
  std::vector<FiniteMvAlgebra> fac;
  fac.push_back(FiniteMvAlgebra::chain(2));
  fac.push_back(FiniteMvAlgebra::chain(3));
  FiniteMvAlgebra prod = FiniteMvAlgebra::direct_product(fac);
  // First factor is the most significant mixed-radix digit.
  auto proj0 = [&](int x) { return x / fac[1].size(); };
  auto proj1 = [&](int x) { return x % fac[1].size(); };
  std::vector<bool> hit0(fac[0].size()), hit1(fac[1].size());
  for (int x = 0; x < prod.size(); ++x) {
    hit0[proj0(x)] = true;
    hit1[proj1(x)] = true;
    CHECK(proj0(prod.neg(x)) == fac[0].neg(proj0(x)));
    CHECK(proj1(prod.neg(x)) == fac[1].neg(proj1(x)));
    for (int y = 0; y < prod.size(); ++y) {
      CHECK(proj0(prod.oplus(x, y)) == fac[0].oplus(proj0(x), proj0(y)));
      CHECK(proj1(prod.oplus(x, y)) == fac[1].oplus(proj1(x), proj1(y)));
    }
  }
  for (bool h : hit0) CHECK(h);
  for (bool h : hit1) CHECK(h);
}

TEST_CASE("restriction keeps exactly the operations that land inside") {
  FiniteMvAlgebra l4 = FiniteMvAlgebra::chain(4);

  // {0, 1/2, 1}: closed under everything here.
  std::vector<int> x1{0, 2, 4};
  PartialSubalgebra p1 = restrict_to(l4, x1);
  CHECK(p1.oplus[1][1].has_value());      // 1/2 (+) 1/2 = 1
  CHECK(*p1.oplus[1][1] == 2);
  CHECK(p1.oplus[1][2].has_value());      // 1/2 (+) 1 = 1
  CHECK(*p1.oplus[1][2] == 2);
  CHECK(p1.neg[1].has_value());           // neg 1/2 = 1/2
  CHECK(*p1.neg[1] == 1);
  CHECK(p1.zero_pos == 0);
  CHECK(p1.one_pos == 2);

  // {1/4}: nothing is defined.
  std::vector<int> x2{1};
  PartialSubalgebra p2 = restrict_to(l4, x2);
  CHECK_FALSE(p2.oplus[0][0].has_value());  // 1/2 outside
  CHECK_FALSE(p2.neg[0].has_value());       // 3/4 outside
  CHECK_FALSE(p2.zero_pos.has_value());
  CHECK_FALSE(p2.one_pos.has_value());

  FiniteMvAlgebra l6 = FiniteMvAlgebra::chain(6);
  std::vector<int> x3{1, 2, 3};  // {1/6, 2/6, 3/6}
  PartialSubalgebra p3 = restrict_to(l6, x3);
  CHECK(p3.oplus[0][0].has_value());        // 1/6 (+) 1/6 = 2/6
  CHECK(*p3.oplus[0][0] == 1);
  CHECK_FALSE(p3.oplus[1][1].has_value());  // 2/6 (+) 2/6 = 4/6 outside

  std::vector<int> dup{1, 1};
  CHECK_THROWS_AS(restrict_to(l4, dup), InvalidInput);
  std::vector<int> foreign{0, 9};
  CHECK_THROWS_AS(restrict_to(l4, foreign), InvalidInput);
}

TEST_CASE("identity inclusion of a restriction always verifies") {
  for (int t = 0; t < 50; ++t) {
    int k = 1 + static_cast<int>(rng() % 8);
    FiniteMvAlgebra alg = FiniteMvAlgebra::chain(k);
    std::vector<int> carrier;
    for (int i = 0; i <= k; ++i) {
      if (rng() % 2 == 0) carrier.push_back(i);
    }
    if (carrier.empty()) carrier.push_back(static_cast<int>(rng() % (k + 1)));
    PartialSubalgebra part = restrict_to(alg, carrier);
    VerifyReport rep = verify_partial_embedding(part, TableOps{alg}, carrier);
    CHECK(rep.ok);
  }
}

TEST_CASE("embedding verification catches defects") {
  FiniteMvAlgebra l3 = FiniteMvAlgebra::chain(3);
  std::vector<int> carrier{0, 1, 2, 3};
  PartialSubalgebra part = restrict_to(l3, carrier);

  // Identity on the full carrier passes.
  CHECK(verify_partial_embedding(part, TableOps{l3}, carrier).ok);

  // A constant map is not injective.
  std::vector<int> constant{1, 1, 1, 1};
  VerifyReport rep = verify_partial_embedding(part, TableOps{l3}, constant);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());

  // Swapping interior elements breaks preservation.
  std::vector<int> swapped{0, 2, 1, 3};
  CHECK_FALSE(verify_partial_embedding(part, TableOps{l3}, swapped).ok);

  // Doubling into a doubled chain preserves everything.
  FiniteMvAlgebra l8 = FiniteMvAlgebra::chain(8);
  std::vector<int> quarter{0, 1};  // {0, 1/4} in L_4
  FiniteMvAlgebra l4 = FiniteMvAlgebra::chain(4);
  PartialSubalgebra quarter_part = restrict_to(l4, quarter);
  std::vector<int> doubled{0, 2};  // 1/4 = 2/8
  CHECK(verify_partial_embedding(quarter_part, TableOps{l8}, doubled).ok);

  // A partial map is rejected.
  std::vector<int> tooshort{0, 1};
  CHECK_FALSE(verify_partial_embedding(part, TableOps{l3}, tooshort).ok);
}

TEST_CASE("element access outside the carrier is an error") {
  FiniteMvAlgebra l2 = FiniteMvAlgebra::chain(2);
  CHECK_THROWS_AS(l2.oplus(0, 3), InvalidInput);
  CHECK_THROWS_AS(l2.neg(-1), InvalidInput);
  CHECK_THROWS_AS(l2.name_of(7), InvalidInput);
}

TEST_CASE("malformed tables are rejected at construction") {
  CHECK_THROWS_AS(FiniteMvAlgebra({{0, 1}}, {0, 1}, 0), InvalidInput);
  CHECK_THROWS_AS(FiniteMvAlgebra({{0, 9}, {1, 1}}, {1, 0}, 0), InvalidInput);
  CHECK_THROWS_AS(FiniteMvAlgebra({{0}}, {0}, 5), InvalidInput);
  CHECK_THROWS_AS(FiniteMvAlgebra({}, {}, 0), InvalidInput);
}
