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

#include <algorithm>
#include <set>

namespace mvfep {

FiniteMvAlgebra::FiniteMvAlgebra(std::vector<std::vector<int>> oplus_table,
                                 std::vector<int> neg_table, int zero,
                                 std::vector<std::string> names)
    : n_(static_cast<int>(neg_table.size())),
      oplus_(std::move(oplus_table)),
      neg_(std::move(neg_table)),
      zero_(zero),
      names_(std::move(names)) {
  if (n_ == 0) throw InvalidInput("algebra: empty carrier");
  if (static_cast<int>(oplus_.size()) != n_) {
    throw InvalidInput("algebra: oplus table has wrong height");
  }
  for (const auto& row : oplus_) {
    if (static_cast<int>(row.size()) != n_) {
      throw InvalidInput("algebra: oplus table has ragged rows");
    }
    for (int v : row) {
      if (v < 0 || v >= n_) throw InvalidInput("algebra: oplus entry out of range");
    }
  }
  for (int v : neg_) {
    if (v < 0 || v >= n_) throw InvalidInput("algebra: neg entry out of range");
  }
  if (zero_ < 0 || zero_ >= n_) throw InvalidInput("algebra: zero out of range");
  one_ = neg_[static_cast<std::size_t>(zero_)];
  if (names_.empty()) {
    names_.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) names_.push_back(std::to_string(i));
  } else if (static_cast<int>(names_.size()) != n_) {
    throw InvalidInput("algebra: name list has wrong length");
  }
}

FiniteMvAlgebra FiniteMvAlgebra::chain(int k) {
  if (k < 1) throw InvalidInput("chain: k must be >= 1");
  const int n = k + 1;
  std::vector<std::vector<int>> oplus(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> neg(static_cast<std::size_t>(n));
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      oplus[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          std::min(i + j, k);
    }
    neg[static_cast<std::size_t>(i)] = k - i;
    names.push_back(Rational(i, k).str());
  }
  return FiniteMvAlgebra(std::move(oplus), std::move(neg), 0, std::move(names));
}

FiniteMvAlgebra FiniteMvAlgebra::trivial() {
  return FiniteMvAlgebra({{0}}, {0}, 0, {"0"});
}

FiniteMvAlgebra FiniteMvAlgebra::direct_product(
    std::span<const FiniteMvAlgebra> factors) {
  if (factors.empty()) throw InvalidInput("direct_product: no factors");
  const std::size_t r = factors.size();
  long long total = 1;
  for (const auto& f : factors) {
    total *= f.size();
    if (total > 1 << 20) throw InvalidInput("direct_product: carrier too large");
  }
  const int n = static_cast<int>(total);

  // index <-> tuple in mixed radix, first factor most significant
  auto decode = [&](int idx) {
    std::vector<int> t(r);
    for (std::size_t f = r; f-- > 0;) {
      t[f] = idx % factors[f].size();
      idx /= factors[f].size();
    }
    return t;
  };
  auto encode = [&](const std::vector<int>& t) {
    int idx = 0;
    for (std::size_t f = 0; f < r; ++f) idx = idx * factors[f].size() + t[f];
    return idx;
  };

  std::vector<std::vector<int>> oplus(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> neg(static_cast<std::size_t>(n));
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  std::vector<int> zero_tuple(r);
  for (std::size_t f = 0; f < r; ++f) zero_tuple[f] = factors[f].zero();

  for (int a = 0; a < n; ++a) {
    std::vector<int> ta = decode(a);
    std::vector<int> tn(r);
    std::string name = "(";
    for (std::size_t f = 0; f < r; ++f) {
      tn[f] = factors[f].neg(ta[f]);
      if (f > 0) name += ",";
      name += factors[f].name_of(ta[f]);
    }
    name += ")";
    names.push_back(std::move(name));
    neg[static_cast<std::size_t>(a)] = encode(tn);
    for (int b = 0; b < n; ++b) {
      std::vector<int> tb = decode(b);
      std::vector<int> ts(r);
      for (std::size_t f = 0; f < r; ++f) ts[f] = factors[f].oplus(ta[f], tb[f]);
      oplus[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = encode(ts);
    }
  }
  return FiniteMvAlgebra(std::move(oplus), std::move(neg), encode(zero_tuple),
                         std::move(names));
}

AxiomReport FiniteMvAlgebra::check_axioms() const {
  AxiomReport rep;
  auto fail = [&](const char* tag, std::initializer_list<int> witness) {
    rep.ok = false;
    rep.failures.push_back(AxiomFailure{tag, std::vector<int>(witness)});
  };

  for (int x = 0; x < n_; ++x) {
    if (oplus(x, zero_) != x) fail("MV3", {x});
    if (neg(neg(x)) != x) fail("MV4", {x});
    if (oplus(x, one_) != one_) fail("MV5", {x});
  }
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (oplus(x, y) != oplus(y, x)) fail("MV1", {x, y});
      if (oplus(neg(oplus(neg(x), y)), y) != oplus(neg(oplus(neg(y), x)), x)) {
        fail("MV6", {x, y});
      }
    }
  }
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      for (int z = 0; z < n_; ++z) {
        if (oplus(x, oplus(y, z)) != oplus(oplus(x, y), z)) fail("MV2", {x, y, z});
      }
    }
  }
  return rep;
}

bool FiniteMvAlgebra::check_adjointness(AxiomFailure* witness) const {
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      int xy = odot(x, y);
      for (int z = 0; z < n_; ++z) {
        if (le(xy, z) != le(x, arrow(y, z))) {
          if (witness != nullptr) *witness = AxiomFailure{"adjointness", {x, y, z}};
          return false;
        }
      }
    }
  }
  return true;
}

bool FiniteMvAlgebra::is_chain() const {
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (!le(a, b) && !le(b, a)) return false;
    }
  }
  return true;
}

PartialSubalgebra restrict_to(const FiniteMvAlgebra& alg,
                              std::span<const int> carrier) {
  std::set<int> seen;
  for (int x : carrier) {
    if (x < 0 || x >= alg.size()) {
      throw InvalidInput("restrict: element " + std::to_string(x) +
                         " outside parent carrier");
    }
    if (!seen.insert(x).second) {
      throw InvalidInput("restrict: duplicate element " + alg.name_of(x));
    }
  }

  const int n = static_cast<int>(carrier.size());
  auto position = [&](int parent_elem) -> std::optional<int> {
    for (int i = 0; i < n; ++i) {
      if (carrier[static_cast<std::size_t>(i)] == parent_elem) return i;
    }
    return std::nullopt;
  };

  PartialSubalgebra part;
  part.labels.reserve(static_cast<std::size_t>(n));
  for (int x : carrier) part.labels.push_back(alg.name_of(x));
  part.oplus.assign(static_cast<std::size_t>(n),
                    std::vector<std::optional<int>>(static_cast<std::size_t>(n)));
  part.neg.assign(static_cast<std::size_t>(n), std::nullopt);
  part.zero_pos = position(alg.zero());
  part.one_pos = position(alg.one());
  for (int i = 0; i < n; ++i) {
    int xi = carrier[static_cast<std::size_t>(i)];
    part.neg[static_cast<std::size_t>(i)] = position(alg.neg(xi));
    for (int j = 0; j < n; ++j) {
      int xj = carrier[static_cast<std::size_t>(j)];
      part.oplus[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          position(alg.oplus(xi, xj));
    }
  }
  return part;
}

}  // namespace mvfep
