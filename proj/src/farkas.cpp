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

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <cstdio>
#include <cstdlib>
#include <chrono>

namespace mvfep {

namespace {

// Sparse row vector: (column, value) pairs sorted by column, values nonzero.
using SparseVec = std::vector<std::pair<int, Rational>>;
// Multiplier map: row id -> coefficient.
using MultMap = std::map<int, Rational>;

SparseVec to_sparse(const std::vector<Rational>& dense) {
  SparseVec v;
  for (int j = 0; j < static_cast<int>(dense.size()); ++j) {
    if (!dense[j].is_zero()) v.emplace_back(j, dense[j]);
  }
  return v;
}

const Rational* coef_at(const SparseVec& v, int col) {
  auto it = std::lower_bound(
      v.begin(), v.end(), col,
      [](const std::pair<int, Rational>& e, int c) { return e.first < c; });
  if (it != v.end() && it->first == col) return &it->second;
  return nullptr;
}

// x + c*y, merged by column.
SparseVec axpy(const SparseVec& x, const Rational& c, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      Rational v = c * y[j].second;
      if (!v.is_zero()) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Rational v = x[i].second + c * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void merge_mult(MultMap& into, const Rational& c, const MultMap& from) {
  for (const auto& [id, w] : from) {
    Rational v = c * w;
    if (v.is_zero()) continue;
    auto [it, fresh] = into.emplace(id, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

// An inequality coef*x <= rhs together with its expression as a nonnegative
// combination of the original rows.
struct WorkRow {
  SparseVec coef;
  Rational rhs;
  MultMap mult;  // over original row indices, entries > 0
};

// Scales a row by a positive rational so its coefficients become coprime
// integers. Canonical form makes duplicate detection exact.
void normalize(WorkRow& row) {
  if (row.coef.empty()) return;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [col, v] : row.coef) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.num().get_mpz_t());
  }
  Rational s(den_lcm, num_gcd);  // > 0 since num_gcd > 0
  if (s == Rational(1)) return;
  for (auto& [col, v] : row.coef) v *= s;
  row.rhs *= s;
  for (auto& [id, w] : row.mult) w *= s;
}

struct EqPair {
  std::size_t pos;  // work row index of  coef*x <= rhs
  std::size_t neg;  // work row index of -coef*x <= -rhs
};

// A derived equality coef*x = rhs, expressed as a signed combination of the
// detected equality pairs. A positive multiplier on pair k stands for the
// pair's pos row, a negative one for its neg row.
struct Equality {
  SparseVec coef;
  Rational rhs;
  MultMap smult;  // over EqPair indices, signed
  int pivot = -1;
};

struct Presolved {
  std::vector<WorkRow> base;        // normalized original rows (all of them)
  std::vector<EqPair> pairs;        // indices into base
  std::vector<Equality> eqs;        // reduced row echelon, one pivot each
  std::vector<WorkRow> residual;    // inequalities over free variables
  std::optional<Certificate> cert;  // set if presolve already decided
  bool infeasible = false;          // set alongside cert when untracked
};

// Expands a signed combination of equality pairs into a nonnegative
// combination of original rows.
void expand_signed(const MultMap& smult, const std::vector<EqPair>& pairs,
                   const std::vector<WorkRow>& base, MultMap& into) {
  for (const auto& [k, s] : smult) {
    const EqPair& p = pairs[static_cast<std::size_t>(k)];
    if (s.sign() > 0) {
      merge_mult(into, s, base[p.pos].mult);
    } else {
      merge_mult(into, -s, base[p.neg].mult);
    }
  }
}

Certificate make_certificate(const MultMap& mult, int m) {
  Certificate c;
  c.lambda.assign(static_cast<std::size_t>(m), Rational(0));
  for (const auto& [id, w] : mult) c.lambda[static_cast<std::size_t>(id)] = w;
  return c;
}

// Applies row := row + tau*eq, mapping the signed equality usage back onto
// the pair's one-sided rows so multipliers stay nonnegative.
void add_equality(WorkRow& row, const Rational& tau, const Equality& eq,
                  const std::vector<EqPair>& pairs,
                  const std::vector<WorkRow>& base) {
  row.coef = axpy(row.coef, tau, eq.coef);
  row.rhs += tau * eq.rhs;
  MultMap scaled;
  for (const auto& [k, s] : eq.smult) {
    Rational v = tau * s;
    if (!v.is_zero()) scaled.emplace(k, std::move(v));
  }
  expand_signed(scaled, pairs, base, row.mult);
}

// Deduplicates rows with identical coefficient vectors, keeping the row with
// the smallest right-hand side (the dominating one).
std::vector<WorkRow> dedupe(std::vector<WorkRow> rows) {
  std::map<SparseVec, std::size_t> seen;
  std::vector<WorkRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) {
    auto it = seen.find(r.coef);
    if (it == seen.end()) {
      seen.emplace(r.coef, out.size());
      out.push_back(std::move(r));
    } else if (r.rhs < out[it->second].rhs) {
      out[it->second] = std::move(r);
    }
  }
  return out;
}

// Detects complementary row pairs and Gauss-eliminates the equalities they
// encode, substituting pivots into every remaining inequality. Exact, with
// full multiplier tracking; may already certify infeasibility.
Presolved presolve(std::vector<SparseRow> raw, bool track) {
  Presolved ps;
  const int m = static_cast<int>(raw.size());

  for (int i = 0; i < m; ++i) {
    WorkRow row;
    row.coef = std::move(raw[static_cast<std::size_t>(i)].coef);
    row.rhs = std::move(raw[static_cast<std::size_t>(i)].rhs);
    if (track) row.mult.emplace(i, Rational(1));
    if (row.coef.empty()) {
      if (row.rhs.sign() < 0) {
        ps.infeasible = true;
        if (track) ps.cert = make_certificate(row.mult, m);
        return ps;
      }
      continue;  // 0 <= nonneg carries no information
    }
    normalize(row);
    ps.base.push_back(std::move(row));
  }

  // Pair rows whose normalized forms are exact negations of each other.
  std::map<SparseVec, std::vector<std::size_t>> by_coef;
  for (std::size_t i = 0; i < ps.base.size(); ++i) {
    by_coef[ps.base[i].coef].push_back(i);
  }
  std::vector<bool> consumed(ps.base.size(), false);
  for (std::size_t i = 0; i < ps.base.size(); ++i) {
    if (consumed[i]) continue;
    SparseVec negated = ps.base[i].coef;
    for (auto& [col, v] : negated) v = -v;
    auto it = by_coef.find(negated);
    if (it == by_coef.end()) continue;
    for (std::size_t j : it->second) {
      if (consumed[j] || j == i) continue;
      if (ps.base[j].rhs == -ps.base[i].rhs) {
        consumed[i] = consumed[j] = true;
        ps.pairs.push_back(EqPair{i, j});
        break;
      }
    }
  }

  // Gaussian elimination over the equalities, pivoting on the highest
  // remaining column of each. Nearly triangular by construction for the
  // valuation systems this library mostly solves.
  int num_cols = 0;
  for (const WorkRow& row : ps.base) {
    if (!row.coef.empty()) num_cols = std::max(num_cols, row.coef.back().first + 1);
  }
  std::vector<int> pivot_of(static_cast<std::size_t>(num_cols), -1);

  for (std::size_t k = 0; k < ps.pairs.size(); ++k) {
    Equality eq;
    eq.coef = ps.base[ps.pairs[k].pos].coef;
    eq.rhs = ps.base[ps.pairs[k].pos].rhs;
    if (track) eq.smult.emplace(static_cast<int>(k), Rational(1));

    // Substitute the highest pivoted column until none remains; every
    // substitution only introduces strictly lower columns.
    for (;;) {
      int hit = -1;
      for (auto it = eq.coef.rbegin(); it != eq.coef.rend(); ++it) {
        if (pivot_of[static_cast<std::size_t>(it->first)] != -1) {
          hit = pivot_of[static_cast<std::size_t>(it->first)];
          break;
        }
      }
      if (hit == -1) break;
      const Equality& p = ps.eqs[static_cast<std::size_t>(hit)];
      Rational tau = -*coef_at(eq.coef, p.pivot);
      eq.coef = axpy(eq.coef, tau, p.coef);
      eq.rhs += tau * p.rhs;
      merge_mult(eq.smult, tau, p.smult);
    }
    if (eq.coef.empty()) {
      if (eq.rhs.is_zero()) continue;  // dependent equality
      // 0 = rhs != 0: pick the orientation that derives 0 <= negative.
      MultMap oriented = eq.smult;
      if (eq.rhs.sign() > 0) {
        for (auto& [id, w] : oriented) w = -w;
      }
      ps.infeasible = true;
      if (track) {
        MultMap lambda;
        expand_signed(oriented, ps.pairs, ps.base, lambda);
        ps.cert = make_certificate(lambda, m);
      }
      return ps;
    }
    eq.pivot = eq.coef.back().first;
    Rational inv = Rational(1) / eq.coef.back().second;
    for (auto& [col, v] : eq.coef) v *= inv;
    eq.rhs *= inv;
    for (auto& [id, w] : eq.smult) w *= inv;
    pivot_of[static_cast<std::size_t>(eq.pivot)] = static_cast<int>(ps.eqs.size());
    ps.eqs.push_back(std::move(eq));
  }

  // Back-reduce to echelon form: each equality ends up over free columns
  // plus its own pivot.
  for (std::size_t r = ps.eqs.size(); r-- > 0;) {
    Equality& eq = ps.eqs[r];
    for (;;) {
      int hit = -1;
      for (const auto& [col, v] : eq.coef) {
        int p = pivot_of[static_cast<std::size_t>(col)];
        if (p != -1 && static_cast<std::size_t>(p) != r) {
          hit = p;
          break;
        }
      }
      if (hit == -1) break;
      const Equality& p = ps.eqs[static_cast<std::size_t>(hit)];
      Rational tau = -*coef_at(eq.coef, p.pivot);
      eq.coef = axpy(eq.coef, tau, p.coef);
      eq.rhs += tau * p.rhs;
      merge_mult(eq.smult, tau, p.smult);
    }
  }

  // Substitute pivots into the remaining inequalities. Echelon equalities
  // only contribute free columns, so one sweep per row suffices.
  std::vector<WorkRow> residual;
  for (std::size_t i = 0; i < ps.base.size(); ++i) {
    if (consumed[i]) continue;
    WorkRow row = ps.base[i];
    for (;;) {
      int hit = -1;
      for (const auto& [col, v] : row.coef) {
        if (pivot_of[static_cast<std::size_t>(col)] != -1) {
          hit = pivot_of[static_cast<std::size_t>(col)];
          break;
        }
      }
      if (hit == -1) break;
      const Equality& eq = ps.eqs[static_cast<std::size_t>(hit)];
      add_equality(row, -*coef_at(row.coef, eq.pivot), eq, ps.pairs, ps.base);
    }
    if (row.coef.empty()) {
      if (row.rhs.sign() < 0) {
        ps.infeasible = true;
        if (track) ps.cert = make_certificate(row.mult, m);
        return ps;
      }
      continue;
    }
    normalize(row);
    residual.push_back(std::move(row));
  }
  residual = dedupe(std::move(residual));

  // Bound propagation: a row whose left-hand side cannot exceed its
  // right-hand side under the single-variable bounds is implied by the
  // rows that state those bounds, and can be dropped.
  std::map<int, Rational> lower, upper;
  for (const WorkRow& row : residual) {
    if (row.coef.size() != 1) continue;
    const auto& [col, a] = row.coef.front();
    Rational bound = row.rhs / a;
    if (a.sign() > 0) {
      auto it = upper.find(col);
      if (it == upper.end() || bound < it->second) upper[col] = bound;
    } else {
      auto it = lower.find(col);
      if (it == lower.end() || bound > it->second) lower[col] = bound;
    }
  }
  std::vector<WorkRow> kept;
  kept.reserve(residual.size());
  for (WorkRow& row : residual) {
    bool implied = false;
    if (row.coef.size() > 1) {
      Rational max_lhs(0);
      bool bounded = true;
      for (const auto& [col, a] : row.coef) {
        const auto& bounds = a.sign() > 0 ? upper : lower;
        auto it = bounds.find(col);
        if (it == bounds.end()) {
          bounded = false;
          break;
        }
        max_lhs += a * it->second;
      }
      implied = bounded && max_lhs <= row.rhs;
    }
    if (!implied) kept.push_back(std::move(row));
  }
  ps.residual = std::move(kept);
  return ps;
}

}  // namespace

void LinearSystem::validate() const {
  if (a.empty()) throw InvalidInput("linear system: no rows");
  if (a.size() != b.size()) {
    throw InvalidInput("linear system: row/rhs count mismatch");
  }
  const std::size_t n = a[0].size();
  if (n == 0) throw InvalidInput("linear system: no variables");
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidInput("linear system: ragged matrix");
  }
}

void SparseSystem::validate() const {
  if (num_vars < 1) throw InvalidInput("linear system: no variables");
  if (rows.empty()) throw InvalidInput("linear system: no rows");
  for (const auto& row : rows) {
    int prev = -1;
    for (const auto& [col, v] : row.coef) {
      if (col <= prev || col >= num_vars) {
        throw InvalidInput("linear system: bad sparse row");
      }
      if (v.is_zero()) throw InvalidInput("linear system: explicit zero entry");
      prev = col;
    }
  }
}

LinearSystem to_dense(const SparseSystem& sys) {
  LinearSystem dense;
  dense.a.reserve(sys.rows.size());
  dense.b.reserve(sys.rows.size());
  for (const auto& row : sys.rows) {
    std::vector<Rational> d(static_cast<std::size_t>(sys.num_vars), Rational(0));
    for (const auto& [col, v] : row.coef) d[static_cast<std::size_t>(col)] = v;
    dense.a.push_back(std::move(d));
    dense.b.push_back(row.rhs);
  }
  return dense;
}

namespace {

bool verify_sparse_solution(const std::vector<SparseRow>& rows,
                            const std::vector<Rational>& x) {
  for (const auto& row : rows) {
    Rational lhs(0);
    for (const auto& [col, v] : row.coef) {
      lhs += v * x[static_cast<std::size_t>(col)];
    }
    if (lhs > row.rhs) return false;
  }
  return true;
}

bool verify_sparse_certificate(const std::vector<SparseRow>& rows, int n,
                               const std::vector<Rational>& lambda) {
  if (lambda.size() != rows.size()) return false;
  std::vector<Rational> dot(static_cast<std::size_t>(n), Rational(0));
  Rational rhs_dot(0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (lambda[i].sign() < 0) return false;
    if (lambda[i].is_zero()) continue;
    for (const auto& [col, v] : rows[i].coef) {
      dot[static_cast<std::size_t>(col)] += lambda[i] * v;
    }
    rhs_dot += lambda[i] * rows[i].rhs;
  }
  for (const Rational& d : dot) {
    if (!d.is_zero()) return false;
  }
  return rhs_dot.sign() < 0;
}

FeasibilityResult solve_impl(std::vector<SparseRow> raw, int n,
                             const SolveOptions& opts, bool track = false) {
  const int m = static_cast<int>(raw.size());
  const std::vector<SparseRow> original = raw;

  // Multiplier provenance is maintained only on demand: the first pass runs
  // without it, and a detected infeasibility triggers one tracked re-run
  // (deterministic, so it reaches the same certificate).
  auto rerun_tracked = [&]() {
    return solve_impl(original, n, opts, true);
  };

  const bool debug = std::getenv("MVFEP_SOLVER_DEBUG") != nullptr;
  const auto tp0 = std::chrono::steady_clock::now();
  Presolved ps = presolve(std::move(raw), track);
  if (debug) {
    std::fprintf(stderr, "[solver] presolve %.1f ms: %zu eqs, %zu residual\n",
                 std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - tp0)
                     .count(),
                 ps.eqs.size(), ps.residual.size());
  }
  if (ps.infeasible) {
    if (!track) return rerun_tracked();
    if (!ps.cert ||
        !verify_sparse_certificate(original, n, ps.cert->lambda)) {
      throw Error("internal: solver produced an invalid certificate");
    }
    return *ps.cert;
  }

  std::vector<bool> pivoted(static_cast<std::size_t>(n), false);
  for (const Equality& eq : ps.eqs) {
    pivoted[static_cast<std::size_t>(eq.pivot)] = true;
  }

  // Expands a nonnegative combination of residual rows into the original
  // row multipliers and packages it as a verified certificate.
  auto expand_residual = [&](const MultMap& mult) {
    MultMap lambda;
    for (const auto& [rid, w] : mult) {
      merge_mult(lambda, w, ps.residual[static_cast<std::size_t>(rid)].mult);
    }
    Certificate cert = make_certificate(lambda, m);
    if (!verify_sparse_certificate(original, n, cert.lambda)) {
      throw Error("internal: solver produced an invalid certificate");
    }
    return cert;
  };

  std::vector<int> free_vars;
  for (int v = 0; v < n; ++v) {
    if (!pivoted[static_cast<std::size_t>(v)]) free_vars.push_back(v);
  }
  std::vector<int> free_index(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < free_vars.size(); ++i) {
    free_index[static_cast<std::size_t>(free_vars[i])] = static_cast<int>(i);
  }

  const int f = static_cast<int>(free_vars.size());
  const int r = static_cast<int>(ps.residual.size());
  if (static_cast<std::size_t>(m) > opts.row_cap ||
      static_cast<std::size_t>(r) > opts.row_cap) {
    throw ResourceLimit("solver row cap exceeded (" +
                        std::to_string(opts.row_cap) + " rows)");
  }
  std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));

  if (r > 0) {
    // Exact phase-1 simplex on the residual. Each free variable splits into
    // a nonnegative pair; one slack per row and a single artificial column
    // measure the infeasibility, which is then minimized to zero or to a
    // positive optimum whose dual is the Farkas multiplier. Bland's least
    // index rule makes the pivoting finite and deterministic.
    //
    // Columns: x+ 0..f-1, x- f..2f-1, slacks 2f..2f+r-1, artificial 2f+r.
    const int col_t = 2 * f + r;
    const int cols = col_t + 1;
    std::vector<std::vector<Rational>> tab(
        static_cast<std::size_t>(r),
        std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0)));
    std::vector<Rational> rhs(static_cast<std::size_t>(r), Rational(0));
    std::vector<int> basis(static_cast<std::size_t>(r));

    for (int i = 0; i < r; ++i) {
      auto& row = tab[static_cast<std::size_t>(i)];
      for (const auto& [col, v] : ps.residual[static_cast<std::size_t>(i)].coef) {
        int j = free_index[static_cast<std::size_t>(col)];
        if (j < 0) throw Error("internal: residual row mentions a pivoted variable");
        row[static_cast<std::size_t>(j)] = v;
        row[static_cast<std::size_t>(f + j)] = -v;
      }
      row[static_cast<std::size_t>(2 * f + i)] = Rational(1);
      row[static_cast<std::size_t>(col_t)] = Rational(-1);
      rhs[static_cast<std::size_t>(i)] = ps.residual[static_cast<std::size_t>(i)].rhs;
      basis[static_cast<std::size_t>(i)] = 2 * f + i;
    }

    std::vector<Rational> zrow(static_cast<std::size_t>(cols), Rational(0));
    zrow[static_cast<std::size_t>(col_t)] = Rational(1);

    auto pivot = [&](int prow, int pcol) {
      auto& prow_ref = tab[static_cast<std::size_t>(prow)];
      Rational inv = Rational(1) / prow_ref[static_cast<std::size_t>(pcol)];
      for (auto& v : prow_ref) {
        if (!v.is_zero()) v *= inv;
      }
      rhs[static_cast<std::size_t>(prow)] *= inv;
      for (int i = 0; i < r; ++i) {
        if (i == prow) continue;
        Rational factor = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(pcol)];
        if (factor.is_zero()) continue;
        auto& row = tab[static_cast<std::size_t>(i)];
        for (int c = 0; c < cols; ++c) {
          const Rational& pv = prow_ref[static_cast<std::size_t>(c)];
          if (!pv.is_zero()) row[static_cast<std::size_t>(c)] -= factor * pv;
        }
        rhs[static_cast<std::size_t>(i)] -= factor * rhs[static_cast<std::size_t>(prow)];
      }
      Rational zfac = zrow[static_cast<std::size_t>(pcol)];
      if (!zfac.is_zero()) {
        for (int c = 0; c < cols; ++c) {
          const Rational& pv = prow_ref[static_cast<std::size_t>(c)];
          if (!pv.is_zero()) zrow[static_cast<std::size_t>(c)] -= zfac * pv;
        }
      }
      basis[static_cast<std::size_t>(prow)] = pcol;
    };

    int worst = -1;
    for (int i = 0; i < r; ++i) {
      if (rhs[static_cast<std::size_t>(i)].sign() < 0 &&
          (worst == -1 ||
           rhs[static_cast<std::size_t>(i)] < rhs[static_cast<std::size_t>(worst)])) {
        worst = i;
      }
    }
    long iterations = 0;
    if (worst != -1) {
      pivot(worst, col_t);  // entering the artificial restores basic feasibility
      for (;; ++iterations) {
        int enter = -1;
        for (int c = 0; c < cols; ++c) {
          if (zrow[static_cast<std::size_t>(c)].sign() < 0) {
            enter = c;
            break;
          }
        }
        if (enter == -1) break;  // optimal
        int leave = -1;
        Rational best;
        for (int i = 0; i < r; ++i) {
          const Rational& entry = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
          if (entry.sign() <= 0) continue;
          Rational ratio = rhs[static_cast<std::size_t>(i)] / entry;
          if (leave == -1 || ratio < best ||
              (ratio == best &&
               basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
            leave = i;
            best = ratio;
          }
        }
        if (leave == -1) {
          throw Error("internal: unbounded phase-1 objective");
        }
        bool t_leaves = basis[static_cast<std::size_t>(leave)] == col_t;
        pivot(leave, enter);
        if (t_leaves) break;  // artificial out at 0: the basis is feasible
      }
      Rational infeasibility(0);
      for (int i = 0; i < r; ++i) {
        if (basis[static_cast<std::size_t>(i)] == col_t) {
          infeasibility = rhs[static_cast<std::size_t>(i)];
        }
      }
      if (infeasibility.sign() > 0) {
        if (!track) return rerun_tracked();
        // The dual of the positive optimum: reduced costs at the slacks.
        MultMap mult;
        for (int i = 0; i < r; ++i) {
          const Rational& rc = zrow[static_cast<std::size_t>(2 * f + i)];
          if (!rc.is_zero()) mult.emplace(i, rc);
        }
        return expand_residual(mult);
      }
    }
    if (debug) {
      std::fprintf(stderr, "[solver] simplex %.1f ms: f=%d r=%d iters=%ld\n",
                   std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - tp0)
                       .count(),
                   f, r, iterations);
    }
    for (int i = 0; i < r; ++i) {
      int b = basis[static_cast<std::size_t>(i)];
      if (b < f) {
        x[static_cast<std::size_t>(free_vars[static_cast<std::size_t>(b)])] +=
            rhs[static_cast<std::size_t>(i)];
      } else if (b < 2 * f) {
        x[static_cast<std::size_t>(free_vars[static_cast<std::size_t>(b - f)])] -=
            rhs[static_cast<std::size_t>(i)];
      }
    }
  }

  // Pivoted variables follow from the echelon equalities.
  for (const Equality& eq : ps.eqs) {
    Rational value = eq.rhs;
    for (const auto& [col, v] : eq.coef) {
      if (col != eq.pivot) value -= v * x[static_cast<std::size_t>(col)];
    }
    x[static_cast<std::size_t>(eq.pivot)] = std::move(value);
  }

  if (!verify_sparse_solution(original, x)) {
    throw Error("internal: solver produced an invalid solution");
  }
  return Solution{std::move(x)};
}

}  // namespace

FeasibilityResult solve_inequalities(const LinearSystem& sys,
                                     const SolveOptions& opts) {
  sys.validate();
  std::vector<SparseRow> raw;
  raw.reserve(sys.a.size());
  for (int i = 0; i < sys.rows(); ++i) {
    raw.push_back(SparseRow{to_sparse(sys.a[static_cast<std::size_t>(i)]),
                            sys.b[static_cast<std::size_t>(i)]});
  }
  return solve_impl(std::move(raw), sys.cols(), opts);
}

FeasibilityResult solve_inequalities_sparse(const SparseSystem& sys,
                                            const SolveOptions& opts) {
  sys.validate();
  return solve_impl(sys.rows, sys.num_vars, opts);
}

bool verify_result(const LinearSystem& sys, const FeasibilityResult& result) {
  const int m = sys.rows();
  const int n = sys.cols();
  if (const auto* sol = std::get_if<Solution>(&result)) {
    if (static_cast<int>(sol->x.size()) != n) return false;
    for (int i = 0; i < m; ++i) {
      Rational lhs(0);
      for (int j = 0; j < n; ++j) {
        lhs += sys.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               sol->x[static_cast<std::size_t>(j)];
      }
      if (lhs > sys.b[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }
  const auto& cert = std::get<Certificate>(result);
  if (static_cast<int>(cert.lambda.size()) != m) return false;
  for (const Rational& l : cert.lambda) {
    if (l.sign() < 0) return false;
  }
  for (int j = 0; j < n; ++j) {
    Rational dot(0);
    for (int i = 0; i < m; ++i) {
      dot += cert.lambda[static_cast<std::size_t>(i)] *
             sys.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    if (!dot.is_zero()) return false;
  }
  Rational dot(0);
  for (int i = 0; i < m; ++i) {
    dot += cert.lambda[static_cast<std::size_t>(i)] *
           sys.b[static_cast<std::size_t>(i)];
  }
  return dot.sign() < 0;
}

std::vector<Integer> integerize_certificate(std::span<const Rational> lambda) {
  std::vector<Integer> out;
  out.reserve(lambda.size());
  for (const Rational& l : lambda) {
    if (l.sign() < 0) {
      throw InvalidInput("integerize_certificate: negative entry " + l.str());
    }
  }
  Integer q = 1;
  for (const Rational& l : lambda) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), q.get_mpz_t(), l.den().get_mpz_t());
    q = g;
  }
  for (const Rational& l : lambda) {
    Rational scaled = l * Rational(q);
    out.push_back(scaled.num());  // integral: q kills every denominator
  }
  return out;
}

EqualityResult solve_equality_nonneg(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& c,
    const SolveOptions& opts) {
  if (a.empty() || a[0].empty()) {
    throw InvalidInput("equality system: empty matrix");
  }
  if (a.size() != c.size()) {
    throw InvalidInput("equality system: row/rhs count mismatch");
  }
  const std::size_t m = a.size();
  const std::size_t n = a[0].size();
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidInput("equality system: ragged matrix");
  }

  LinearSystem stacked;
  stacked.a.reserve(2 * m + n);
  stacked.b.reserve(2 * m + n);
  for (std::size_t i = 0; i < m; ++i) {
    stacked.a.push_back(a[i]);
    stacked.b.push_back(c[i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row;
    row.reserve(n);
    for (const Rational& v : a[i]) row.push_back(-v);
    stacked.a.push_back(std::move(row));
    stacked.b.push_back(-c[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(n, Rational(0));
    row[j] = Rational(-1);
    stacked.a.push_back(std::move(row));
    stacked.b.push_back(Rational(0));
  }

  FeasibilityResult inner = solve_inequalities(stacked, opts);
  EqualityResult result;
  if (auto* sol = std::get_if<Solution>(&inner)) {
    result = Solution{std::move(sol->x)};
  } else {
    const auto& lambda = std::get<Certificate>(inner).lambda;
    DualVector dual;
    dual.y.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      dual.y.push_back(lambda[i] - lambda[m + i]);
    }
    result = std::move(dual);
  }
  if (!verify_equality_result(a, c, result)) {
    throw Error("internal: equality solver produced an invalid result");
  }
  return result;
}

bool verify_equality_result(const std::vector<std::vector<Rational>>& a,
                            const std::vector<Rational>& c,
                            const EqualityResult& result) {
  const std::size_t m = a.size();
  const std::size_t n = a.empty() ? 0 : a[0].size();
  if (const auto* sol = std::get_if<Solution>(&result)) {
    if (sol->x.size() != n) return false;
    for (const Rational& v : sol->x) {
      if (v.sign() < 0) return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
      Rational lhs(0);
      for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * sol->x[j];
      if (lhs != c[i]) return false;
    }
    return true;
  }
  const auto& dual = std::get<DualVector>(result);
  if (dual.y.size() != m) return false;
  for (std::size_t j = 0; j < n; ++j) {
    Rational dot(0);
    for (std::size_t i = 0; i < m; ++i) dot += dual.y[i] * a[i][j];
    if (dot.sign() < 0) return false;
  }
  Rational dot(0);
  for (std::size_t i = 0; i < m; ++i) dot += dual.y[i] * c[i];
  return dot.sign() < 0;
}

}  // namespace mvfep
