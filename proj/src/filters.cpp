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

#include "mvfep/filters.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mvfep {

namespace {

std::vector<int> to_members(const std::vector<bool>& in) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(in.size()); ++i) {
    if (in[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

}  // namespace

bool Filter::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool is_filter(const FiniteMvAlgebra& alg, const Filter& f) {
  if (f.members.empty() || !f.contains(alg.one())) return false;
  for (int x : f.members) {
    if (x < 0 || x >= alg.size()) return false;
    for (int y = 0; y < alg.size(); ++y) {
      if (alg.le(x, y) && !f.contains(y)) return false;
    }
    for (int y : f.members) {
      if (!f.contains(alg.odot(x, y))) return false;
    }
  }
  return true;
}

Filter generated_filter(const FiniteMvAlgebra& alg, std::span<const int> seed) {
  const int n = alg.size();
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  in[static_cast<std::size_t>(alg.one())] = true;
  for (int x : seed) {
    if (x < 0 || x >= n) {
      throw InvalidInput("generated_filter: seed element out of range");
    }
    in[static_cast<std::size_t>(x)] = true;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cur = to_members(in);
    for (int x : cur) {
      for (int y : cur) {
        int p = alg.odot(x, y);
        if (!in[static_cast<std::size_t>(p)]) {
          in[static_cast<std::size_t>(p)] = true;
          changed = true;
        }
      }
      for (int y = 0; y < n; ++y) {
        if (!in[static_cast<std::size_t>(y)] && alg.le(x, y)) {
          in[static_cast<std::size_t>(y)] = true;
          changed = true;
        }
      }
    }
  }
  return Filter{to_members(in)};
}

std::vector<Filter> enumerate_filters(const FiniteMvAlgebra& alg, int size_cap) {
  if (alg.size() > size_cap) {
    throw ResourceLimit("enumerate_filters: carrier size " +
                        std::to_string(alg.size()) + " exceeds cap " +
                        std::to_string(size_cap));
  }
  std::set<std::vector<int>> seen;
  std::deque<Filter> queue;
  Filter least = generated_filter(alg, {});
  seen.insert(least.members);
  queue.push_back(std::move(least));

  std::vector<Filter> out;
  while (!queue.empty()) {
    Filter f = std::move(queue.front());
    queue.pop_front();
    for (int e = 0; e < alg.size(); ++e) {
      if (f.contains(e)) continue;
      std::vector<int> seed = f.members;
      seed.push_back(e);
      Filter g = generated_filter(alg, seed);
      if (seen.insert(g.members).second) queue.push_back(std::move(g));
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(const FiniteMvAlgebra& alg, const Filter& f) {
  for (int x = 0; x < alg.size(); ++x) {
    for (int y = x + 1; y < alg.size(); ++y) {
      if (!f.contains(alg.arrow(x, y)) && !f.contains(alg.arrow(y, x))) {
        return false;
      }
    }
  }
  return true;
}

bool is_ultra(const FiniteMvAlgebra& alg, const Filter& f,
              const std::vector<Filter>* all_filters) {
  if (static_cast<int>(f.members.size()) == alg.size()) return false;  // proper
  std::vector<Filter> local;
  if (all_filters == nullptr) {
    local = enumerate_filters(alg);
    all_filters = &local;
  }
  for (const Filter& g : *all_filters) {
    if (static_cast<int>(g.members.size()) == alg.size()) continue;
    if (g.members.size() <= f.members.size() || g == f) continue;
    if (std::includes(g.members.begin(), g.members.end(), f.members.begin(),
                      f.members.end())) {
      return false;
    }
  }
  return true;
}

QuotientAlgebra quotient(const FiniteMvAlgebra& alg, const Filter& f) {
  if (!is_filter(alg, f)) throw InvalidInput("quotient: not a filter");
  const int n = alg.size();
  auto congruent = [&](int x, int y) {
    return f.contains(alg.odot(alg.arrow(x, y), alg.arrow(y, x)));
  };

  std::vector<int> proj(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (proj[static_cast<std::size_t>(x)] != -1) continue;
    int cls = static_cast<int>(reps.size());
    reps.push_back(x);
    proj[static_cast<std::size_t>(x)] = cls;
    for (int y = x + 1; y < n; ++y) {
      if (proj[static_cast<std::size_t>(y)] == -1 && congruent(x, y)) {
        proj[static_cast<std::size_t>(y)] = cls;
      }
    }
  }

  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> oplus(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<int> neg(static_cast<std::size_t>(m));
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    int rep = reps[static_cast<std::size_t>(c)];
    names.push_back(alg.name_of(rep));
    neg[static_cast<std::size_t>(c)] = proj[static_cast<std::size_t>(alg.neg(rep))];
    for (int d = 0; d < m; ++d) {
      oplus[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] =
          proj[static_cast<std::size_t>(
              alg.oplus(rep, reps[static_cast<std::size_t>(d)]))];
    }
  }
  FiniteMvAlgebra q(std::move(oplus), std::move(neg),
                    proj[static_cast<std::size_t>(alg.zero())], std::move(names));
  return QuotientAlgebra{std::move(q), std::move(proj)};
}

std::vector<Filter> separating_prime_filters(const FiniteMvAlgebra& alg,
                                             std::span<const int> x) {
  std::vector<Filter> primes;
  std::vector<std::vector<int>> prime_projs;
  bool enumerated = false;
  auto ensure_primes = [&]() {
    if (enumerated) return;
    enumerated = true;
    for (Filter& f : enumerate_filters(alg)) {
      prime_projs.push_back({});
      if (is_prime(alg, f)) {
        prime_projs.back() = quotient(alg, f).projection;
        primes.push_back(std::move(f));
      } else {
        prime_projs.pop_back();
      }
    }
  };

  std::vector<Filter> chosen;
  std::vector<const std::vector<int>*> chosen_projs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      int a = x[i], b = x[j];
      if (a == b) continue;
      bool separated = false;
      for (const auto* proj : chosen_projs) {
        if ((*proj)[static_cast<std::size_t>(a)] !=
            (*proj)[static_cast<std::size_t>(b)]) {
          separated = true;
          break;
        }
      }
      if (separated) continue;
      ensure_primes();
      bool found = false;
      for (std::size_t p = 0; p < primes.size(); ++p) {
        if (prime_projs[p][static_cast<std::size_t>(a)] !=
            prime_projs[p][static_cast<std::size_t>(b)]) {
          chosen.push_back(primes[p]);
          chosen_projs.push_back(&prime_projs[p]);
          found = true;
          break;
        }
      }
      if (!found) {
        throw InvalidInput(
            "no prime filter separates " + alg.name_of(a) + " and " +
            alg.name_of(b) + "; the input does not satisfy the MV axioms");
      }
    }
  }
  return chosen;
}

bool SetFilter::contains(std::uint32_t mask) const {
  return std::binary_search(members.begin(), members.end(), mask);
}

void SetFilter::validate() const {
  if (universe < 1 || universe > 20) {
    throw InvalidInput("set filter: universe must have 1..20 indices");
  }
  const std::uint32_t full = (1u << universe) - 1;
  if (members.empty()) throw InvalidInput("set filter: empty");
  if (!std::is_sorted(members.begin(), members.end())) {
    throw InvalidInput("set filter: members not sorted");
  }
  for (std::uint32_t m : members) {
    if ((m & ~full) != 0) throw InvalidInput("set filter: member outside universe");
    // upward closure
    std::uint32_t rest = full & ~m;
    for (std::uint32_t add = rest; add != 0; add = (add - 1) & rest) {
      if (!contains(m | add)) {
        throw InvalidInput("set filter: not upward closed");
      }
    }
    for (std::uint32_t other : members) {
      if (!contains(m & other)) {
        throw InvalidInput("set filter: not closed under intersection");
      }
    }
  }
}

ReducedProduct reduced_product(std::span<const FiniteMvAlgebra> factors,
                               const SetFilter& f) {
  if (factors.empty()) throw InvalidInput("reduced_product: no factors");
  if (f.universe != static_cast<int>(factors.size())) {
    throw InvalidInput("reduced_product: filter universe does not match factors");
  }
  f.validate();

  FiniteMvAlgebra prod = FiniteMvAlgebra::direct_product(factors);
  const int n = prod.size();
  const std::size_t r = factors.size();

  // Tuple decode in the direct_product convention: first factor is the most
  // significant mixed-radix digit.
  auto decode = [&](int idx) {
    std::vector<int> t(r);
    for (std::size_t k = r; k-- > 0;) {
      t[k] = idx % factors[k].size();
      idx /= factors[k].size();
    }
    return t;
  };
  std::vector<std::vector<int>> tuples;
  tuples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tuples.push_back(decode(i));

  auto congruent = [&](int x, int y) {
    std::uint32_t agree = 0;
    for (std::size_t k = 0; k < r; ++k) {
      if (tuples[static_cast<std::size_t>(x)][k] ==
          tuples[static_cast<std::size_t>(y)][k]) {
        agree |= (1u << k);
      }
    }
    return f.contains(agree);
  };

  std::vector<int> proj(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (proj[static_cast<std::size_t>(x)] != -1) continue;
    int cls = static_cast<int>(reps.size());
    reps.push_back(x);
    proj[static_cast<std::size_t>(x)] = cls;
    for (int y = x + 1; y < n; ++y) {
      if (proj[static_cast<std::size_t>(y)] == -1 && congruent(x, y)) {
        proj[static_cast<std::size_t>(y)] = cls;
      }
    }
  }

  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> oplus(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<int> neg(static_cast<std::size_t>(m));
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    int rep = reps[static_cast<std::size_t>(c)];
    names.push_back(prod.name_of(rep));
    neg[static_cast<std::size_t>(c)] = proj[static_cast<std::size_t>(prod.neg(rep))];
    for (int d = 0; d < m; ++d) {
      oplus[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] =
          proj[static_cast<std::size_t>(
              prod.oplus(rep, reps[static_cast<std::size_t>(d)]))];
    }
  }
  FiniteMvAlgebra alg(std::move(oplus), std::move(neg),
                      proj[static_cast<std::size_t>(prod.zero())],
                      std::move(names));
  return ReducedProduct{std::move(prod), std::move(alg), std::move(proj)};
}

}  // namespace mvfep
