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

#include "mvfep/embedding.hpp"

#include <algorithm>
#include <map>

namespace mvfep {

namespace {

void check_distinct(const ChainOracle& oracle, std::span<const ChainElem> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    oracle.validate(x[i]);
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (oracle.eq(x[i], x[j])) {
        throw InvalidInput("duplicate element " + oracle.format(x[i]));
      }
    }
  }
}

// Sorted ascending, deduplicated by oracle equality.
std::vector<ChainElem> sorted_unique(const ChainOracle& oracle,
                                     std::vector<ChainElem> v) {
  std::sort(v.begin(), v.end(), [&](const ChainElem& a, const ChainElem& b) {
    return oracle.compare(a, b) < 0;
  });
  v.erase(std::unique(v.begin(), v.end(),
                      [&](const ChainElem& a, const ChainElem& b) {
                        return oracle.eq(a, b);
                      }),
          v.end());
  return v;
}

// Strips zeros and sorts; duplicates are an error.
std::vector<ChainElem> prepare_base(const ChainOracle& oracle,
                                    std::span<const ChainElem> x) {
  check_distinct(oracle, x);
  std::vector<ChainElem> base;
  base.reserve(x.size());
  for (const ChainElem& e : x) {
    if (!oracle.eq(e, oracle.zero())) base.push_back(e);
  }
  std::sort(base.begin(), base.end(),
            [&](const ChainElem& a, const ChainElem& b) {
              return oracle.compare(a, b) < 0;
            });
  return base;
}

int position_in(const ChainOracle& oracle, const std::vector<ChainElem>& sorted,
                const ChainElem& e) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), e,
                             [&](const ChainElem& a, const ChainElem& b) {
                               return oracle.compare(a, b) < 0;
                             });
  if (it == sorted.end() || !oracle.eq(*it, e)) {
    throw Error("internal: closure element lookup failed");
  }
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

std::vector<ChainElem> closure_oplus(const ChainOracle& oracle,
                                     std::span<const ChainElem> x) {
  std::vector<ChainElem> pool = prepare_base(oracle, x);
  pool.push_back(oracle.zero());
  pool.push_back(oracle.one());
  pool = sorted_unique(oracle, std::move(pool));

  std::vector<ChainElem> sums;
  sums.reserve(pool.size() * (pool.size() + 1) / 2);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      sums.push_back(oracle.oplus(pool[i], pool[j]));
    }
  }
  return sorted_unique(oracle, std::move(sums));
}

SparseSystem ValuationSystem::stacked() const {
  const int n = vars();
  SparseSystem sys;
  sys.num_vars = n;
  sys.rows.reserve(static_cast<std::size_t>(n) + 2 * sum_rows.size());
  for (int j = 0; j < n; ++j) {
    sys.rows.push_back(SparseRow{{{j, Rational(-1)}}, Rational(-1)});
  }
  for (const SparseRow& r : sum_rows) sys.rows.push_back(r);
  for (const SparseRow& r : sum_rows) {
    SparseRow flipped = r;
    for (auto& [col, v] : flipped.coef) v = -v;
    flipped.rhs = -r.rhs;
    sys.rows.push_back(std::move(flipped));
  }
  return sys;
}

SparseSystem ValuationSystem::solver_input() const {
  SparseSystem sys = stacked();
  const int n = vars();
  for (int j = 0; j + 1 < n; ++j) {
    sys.rows.push_back(
        SparseRow{{{j, Rational(1)}, {n - 1, Rational(-1)}}, Rational(0)});
  }
  return sys;
}

std::optional<int> ValuationSystem::position(const ChainOracle& oracle,
                                             const ChainElem& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e,
                             [&](const ChainElem& a, const ChainElem& b) {
                               return oracle.compare(a, b) < 0;
                             });
  if (it == elements.end() || !oracle.eq(*it, e)) return std::nullopt;
  return static_cast<int>(it - elements.begin());
}

ValuationSystem build_valuation_system(const ChainOracle& oracle,
                                       std::span<const ChainElem> x) {
  ValuationSystem sys;
  sys.elements = closure_oplus(oracle, x);
  sys.base = prepare_base(oracle, x);

  for (std::size_t i = 0; i < sys.base.size(); ++i) {
    for (std::size_t j = i; j < sys.base.size(); ++j) {
      const ChainElem& a = sys.base[i];
      const ChainElem& b = sys.base[j];
      if (!oracle.le(a, oracle.neg(b))) continue;
      std::map<int, Rational> row;
      auto bump = [&](const ChainElem& e, int delta) {
        int var = position_in(oracle, sys.elements, e) - 1;
        if (var < 0) throw Error("internal: row references y_0");
        row[var] += Rational(delta);
      };
      bump(a, 1);
      bump(b, 1);
      bump(oracle.oplus(a, b), -1);
      SparseRow sr;
      for (auto& [col, v] : row) {
        if (!v.is_zero()) sr.coef.emplace_back(col, std::move(v));
      }
      sr.rhs = Rational(0);
      sys.sum_rows.push_back(std::move(sr));
      sys.row_pairs.emplace_back(position_in(oracle, sys.elements, a),
                                 position_in(oracle, sys.elements, b));
    }
  }
  return sys;
}

std::optional<Rational> RationalValuation::value_of(const ChainOracle& oracle,
                                                    const ChainElem& e) const {
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (oracle.eq(domain[i], e)) return values[i];
  }
  return std::nullopt;
}

RationalValuation rational_valuation(const ChainOracle& oracle,
                                     std::span<const ChainElem> x,
                                     const SolveOptions& opts) {
  RationalValuation val;
  val.system = build_valuation_system(oracle, x);

  FeasibilityResult res = solve_inequalities_sparse(val.system.solver_input(), opts);
  if (const auto* cert = std::get_if<Certificate>(&res)) {
    throw OracleContradiction(
        "valuation system infeasible: oracle violates linear MV structure",
        cert->lambda);
  }
  val.q = std::get<Solution>(res).x;

  const int n = val.system.vars();
  const Rational& qn = val.q[static_cast<std::size_t>(n - 1)];
  val.domain.push_back(oracle.zero());
  val.values.push_back(Rational(0));
  for (const ChainElem& b : val.system.base) {
    int j = position_in(oracle, val.system.elements, b);
    val.domain.push_back(b);
    val.values.push_back(val.q[static_cast<std::size_t>(j - 1)] / qn);
  }
  if (val.system.base.empty() ||
      !oracle.eq(val.system.base.back(), oracle.one())) {
    val.domain.push_back(oracle.one());
    val.values.push_back(Rational(1));
  }

  VerifyReport rep = verify_valuation(val, oracle, x);
  if (!rep.ok) {
    throw Error("internal: valuation failed verification: " + rep.failures[0]);
  }
  return val;
}

VerifyReport verify_valuation(const RationalValuation& val,
                              const ChainOracle& oracle,
                              std::span<const ChainElem> x) {
  VerifyReport rep;

  // The claimed system must be the one the base set generates.
  ValuationSystem expect = build_valuation_system(oracle, x);
  if (expect.elements.size() != val.system.elements.size()) {
    rep.fail("closure size mismatch");
    return rep;
  }
  for (std::size_t i = 0; i < expect.elements.size(); ++i) {
    if (!oracle.eq(expect.elements[i], val.system.elements[i])) {
      rep.fail("closure element mismatch at position " + std::to_string(i));
      return rep;
    }
  }
  {
    auto row_key = [](const SparseRow& r) { return r.coef; };
    std::vector<std::vector<std::pair<int, Rational>>> a, b;
    for (const auto& r : expect.sum_rows) a.push_back(row_key(r));
    for (const auto& r : val.system.sum_rows) b.push_back(row_key(r));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      rep.fail("additivity rows do not match the base set");
      return rep;
    }
  }

  const int n = val.system.vars();
  if (static_cast<int>(val.q.size()) != n) {
    rep.fail("solution vector has wrong length");
    return rep;
  }
  for (int j = 0; j < n; ++j) {
    if (val.q[static_cast<std::size_t>(j)] < Rational(1)) {
      rep.fail("q not >= 1 at position " + std::to_string(j));
    }
  }
  for (const SparseRow& r : val.system.sum_rows) {
    Rational dot(0);
    for (const auto& [col, v] : r.coef) {
      dot += v * val.q[static_cast<std::size_t>(col)];
    }
    if (!dot.is_zero()) rep.fail("additivity row not satisfied by q");
  }

  if (val.domain.size() != val.values.size()) {
    rep.fail("domain/value length mismatch");
    return rep;
  }

  // Condition set: endpoints pinned, additivity on the domain, positivity.
  const Rational qn = val.q.empty() ? Rational(1)
                                    : val.q[static_cast<std::size_t>(n - 1)];
  bool saw_zero = false, saw_one = false;
  for (std::size_t i = 0; i < val.domain.size(); ++i) {
    const ChainElem& e = val.domain[i];
    const Rational& s = val.values[i];
    if (oracle.eq(e, oracle.zero())) {
      saw_zero = true;
      if (!s.is_zero()) rep.fail("s(0) = " + s.str() + ", expected 0");
    } else {
      if (s.sign() <= 0) {
        rep.fail("s(" + oracle.format(e) + ") = " + s.str() + " is not > 0");
      }
      auto pos = val.system.position(oracle, e);
      if (!pos || *pos < 1) {
        rep.fail("domain element " + oracle.format(e) + " not in the closure");
      } else if (s != val.q[static_cast<std::size_t>(*pos - 1)] / qn) {
        rep.fail("s(" + oracle.format(e) + ") differs from the prescription");
      }
    }
    if (oracle.eq(e, oracle.one())) {
      saw_one = true;
      if (s != Rational(1)) rep.fail("s(1) = " + s.str() + ", expected 1");
    }
    if (s.sign() < 0 || s > Rational(1)) {
      rep.fail("s(" + oracle.format(e) + ") = " + s.str() + " outside [0,1]");
    }
  }
  if (!saw_zero) rep.fail("0 missing from the domain");
  if (!saw_one) rep.fail("1 missing from the domain");

  for (std::size_t i = 0; i < val.domain.size(); ++i) {
    for (std::size_t j = i; j < val.domain.size(); ++j) {
      const ChainElem& a = val.domain[i];
      const ChainElem& b = val.domain[j];
      if (!oracle.le(a, oracle.neg(b))) continue;
      ChainElem sum = oracle.oplus(a, b);
      auto sv = val.value_of(oracle, sum);
      if (!sv) continue;  // x (+) y outside X ∪ {0,1}: not quantified
      if (*sv != val.values[i] + val.values[j]) {
        rep.fail("additivity fails at (" + oracle.format(a) + ", " +
                 oracle.format(b) + "): s = " + sv->str() + ", expected " +
                 (val.values[i] + val.values[j]).str());
      }
    }
  }
  return rep;
}

std::vector<ChainElem> ominus_closure(const ChainOracle& oracle,
                                      std::span<const ChainElem> x) {
  check_distinct(oracle, x);
  std::vector<ChainElem> pool(x.begin(), x.end());
  pool.push_back(oracle.zero());
  pool.push_back(oracle.one());
  pool = sorted_unique(oracle, std::move(pool));

  std::vector<ChainElem> diffs;
  diffs.reserve(pool.size() * pool.size());
  for (const ChainElem& u : pool) {
    for (const ChainElem& w : pool) {
      ChainElem d = oracle.ominus(u, w);
      if (!oracle.eq(d, oracle.zero())) diffs.push_back(d);
    }
  }
  return sorted_unique(oracle, std::move(diffs));
}

ChainEmbedding embed_chain(const ChainOracle& oracle,
                           std::span<const ChainElem> x,
                           const SolveOptions& opts) {
  // The difference closure is what forces injectivity and the truncation
  // behaviour of the restriction.
  std::vector<ChainElem> diffs = ominus_closure(oracle, x);

  ChainEmbedding emb;
  emb.valuation = rational_valuation(oracle, diffs, opts);
  emb.domain.assign(x.begin(), x.end());

  std::vector<Rational> nonzero;
  for (const ChainElem& e : x) {
    Rational v(0);
    if (!oracle.eq(e, oracle.zero())) {
      auto s = emb.valuation.value_of(oracle, e);
      if (!s) throw Error("internal: domain element missing from valuation");
      v = *s;
      nonzero.push_back(v);
    }
    emb.image.push_back(std::move(v));
  }
  emb.k = nonzero.empty() ? Integer(1) : lcm_of_denominators(nonzero);

  VerifyReport rep = verify_chain_embedding(oracle, emb);
  if (!rep.ok) {
    throw Error("internal: chain embedding failed verification: " +
                rep.failures[0]);
  }
  return emb;
}

VerifyReport verify_chain_embedding(const ChainOracle& oracle,
                                    const ChainEmbedding& emb) {
  VerifyReport rep;
  if (emb.domain.size() != emb.image.size()) {
    rep.fail("map is not total on the carrier");
    return rep;
  }
  if (emb.k < 1) {
    rep.fail("target chain size k must be >= 1");
    return rep;
  }
  FiniteChainOracle target(emb.k);
  std::vector<ChainElem> image_elems;
  image_elems.reserve(emb.image.size());
  for (std::size_t i = 0; i < emb.image.size(); ++i) {
    try {
      target.validate(emb.image[i]);
    } catch (const InvalidInput& e) {
      rep.fail(std::string("image value invalid: ") + e.what());
      return rep;
    }
    image_elems.push_back(emb.image[i]);
  }

  PartialSubalgebra part = sample_partial(oracle, emb.domain);
  VerifyReport inner =
      verify_partial_embedding(part, OracleOps{target}, image_elems);
  rep.ok = rep.ok && inner.ok;
  for (auto& f : inner.failures) rep.failures.push_back(std::move(f));

  for (std::size_t i = 0; i < emb.domain.size(); ++i) {
    for (std::size_t j = 0; j < emb.domain.size(); ++j) {
      if (oracle.compare(emb.domain[i], emb.domain[j]) < 0 &&
          !(emb.image[i] < emb.image[j])) {
        rep.fail("order not strictly preserved: " +
                 oracle.format(emb.domain[i]) + " < " +
                 oracle.format(emb.domain[j]) + " but " + emb.image[i].str() +
                 " >= " + emb.image[j].str());
      }
    }
  }
  return rep;
}

ProductEmbedding embed_finite_mv(const FiniteMvAlgebra& alg,
                                 const SolveOptions& opts) {
  if (!alg.check_axioms().ok) {
    throw InvalidInput("embed: input does not satisfy the MV axioms");
  }

  ProductEmbedding emb;
  if (alg.size() == 1) {
    // One-element algebra (0 = 1): nothing to separate. The conventional
    // witness maps the unique element to 1 in L_1.
    emb.k = 1;
    emb.l = 1;
    emb.filters.push_back(Filter{{0}});
    emb.image.push_back({Rational(1)});
    return emb;
  }

  std::vector<int> carrier(static_cast<std::size_t>(alg.size()));
  for (int i = 0; i < alg.size(); ++i) carrier[static_cast<std::size_t>(i)] = i;
  emb.filters = separating_prime_filters(alg, carrier);
  emb.l = static_cast<int>(emb.filters.size());

  std::vector<std::vector<Rational>> factor_images;  // per filter, per class
  emb.k = 1;
  for (const Filter& f : emb.filters) {
    QuotientAlgebra q = quotient(alg, f);
    TableChainOracle chain_oracle(q.algebra);
    std::vector<ChainElem> domain;
    domain.reserve(static_cast<std::size_t>(q.algebra.size()));
    for (int c = 0; c < q.algebra.size(); ++c) domain.push_back(c);
    ChainEmbedding ce = embed_chain(chain_oracle, domain, opts);

    Integer k;
    mpz_lcm(k.get_mpz_t(), emb.k.get_mpz_t(), ce.k.get_mpz_t());
    emb.k = k;

    std::vector<Rational> per_element(static_cast<std::size_t>(alg.size()));
    for (int x = 0; x < alg.size(); ++x) {
      per_element[static_cast<std::size_t>(x)] =
          ce.image[static_cast<std::size_t>(
              q.projection[static_cast<std::size_t>(x)])];
    }
    factor_images.push_back(std::move(per_element));
  }

  emb.image.assign(static_cast<std::size_t>(alg.size()), {});
  for (int x = 0; x < alg.size(); ++x) {
    auto& row = emb.image[static_cast<std::size_t>(x)];
    row.reserve(factor_images.size());
    for (const auto& fi : factor_images) {
      row.push_back(fi[static_cast<std::size_t>(x)]);
    }
  }

  VerifyReport rep = verify_product_embedding(alg, emb);
  if (!rep.ok) {
    throw Error("internal: product embedding failed verification: " +
                rep.failures[0]);
  }
  return emb;
}

VerifyReport verify_product_embedding(const FiniteMvAlgebra& alg,
                                      const ProductEmbedding& emb) {
  VerifyReport rep;
  const int n = alg.size();
  if (static_cast<int>(emb.image.size()) != n) {
    rep.fail("map is not total on the carrier");
    return rep;
  }
  if (n == 1) return rep;  // pinned degenerate witness, nothing to preserve

  const std::size_t l = static_cast<std::size_t>(emb.l);
  for (int x = 0; x < n; ++x) {
    const auto& row = emb.image[static_cast<std::size_t>(x)];
    if (row.size() != l) {
      rep.fail("image of " + alg.name_of(x) + " has wrong arity");
      return rep;
    }
    for (const Rational& v : row) {
      if (v.sign() < 0 || v > Rational(1) ||
          !(v * Rational(emb.k)).is_integer()) {
        rep.fail("image value " + v.str() + " outside the target chain");
        return rep;
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (emb.image[static_cast<std::size_t>(x)] ==
          emb.image[static_cast<std::size_t>(y)]) {
        rep.fail("not injective: " + alg.name_of(x) + " and " + alg.name_of(y));
      }
    }
  }
  const Rational one(1);
  for (int x = 0; x < n; ++x) {
    const auto& fx = emb.image[static_cast<std::size_t>(x)];
    const auto& fnx = emb.image[static_cast<std::size_t>(alg.neg(x))];
    for (std::size_t i = 0; i < l; ++i) {
      if (fnx[i] != one - fx[i]) {
        rep.fail("neg not preserved at " + alg.name_of(x));
        break;
      }
    }
    for (int y = 0; y < n; ++y) {
      const auto& fy = emb.image[static_cast<std::size_t>(y)];
      const auto& fs = emb.image[static_cast<std::size_t>(alg.oplus(x, y))];
      for (std::size_t i = 0; i < l; ++i) {
        Rational sum = fx[i] + fy[i];
        if (sum > one) sum = one;
        if (fs[i] != sum) {
          rep.fail("oplus not preserved at (" + alg.name_of(x) + ", " +
                   alg.name_of(y) + ")");
          break;
        }
      }
    }
  }
  const auto& fzero = emb.image[static_cast<std::size_t>(alg.zero())];
  for (std::size_t i = 0; i < l; ++i) {
    if (!fzero[i].is_zero()) {
      rep.fail("0 not preserved");
      break;
    }
  }
  return rep;
}

}  // namespace mvfep
