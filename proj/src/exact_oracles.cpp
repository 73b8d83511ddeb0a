// Copyright 2026 The Authors.
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

#include "resilimat/exact_oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "resilimat/greedy_internal.hpp"

namespace resilimat {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  // C(64, 32) still fits in 64 bits; saturate beyond that.
  if (n > 64) return std::numeric_limits<std::uint64_t>::max();
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) /
        static_cast<std::uint64_t>(i);
  }
  return r;
}

// Applies candidate (set, value) to the running minimum with the
// deterministic tie rule: smaller value wins, equal values go to the
// lexicographically smaller set.
struct MinTracker {
  double value = std::numeric_limits<double>::infinity();
  ElementSet argset;
  bool seen = false;
  void offer(const ElementSet& s, double v) {
    if (!seen || v < value || (v == value && s.lex_less(argset))) {
      value = v;
      argset = s;
      seen = true;
    }
  }
};

struct MaxTracker {
  double value = -std::numeric_limits<double>::infinity();
  ElementSet argset;
  bool seen = false;
  void offer(const ElementSet& s, double v) {
    if (!seen || v > value || (v == value && s.lex_less(argset))) {
      value = v;
      argset = s;
      seen = true;
    }
  }
};

// Enumerates all k-subsets of `pool` in lexicographic order.
template <typename Fn>
void for_each_combination(const std::vector<ElementId>& pool, int k, Fn&& fn) {
  const int n = static_cast<int>(pool.size());
  if (k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<ElementId> ids(k);
    for (int i = 0; i < k; ++i) ids[i] = pool[idx[i]];
    fn(ElementSet(std::move(ids)));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

OracleResult worst_case_removal(const SetFunction& f, const ElementSet& a,
                                const Matroid& iprime, OracleGuards g) {
  if (a.max_id() >= iprime.ground().size())
    throw std::invalid_argument("selection outside the removal ground set");

  OracleResult result;
  MinTracker best;
  const auto* uniform = dynamic_cast<const UniformMatroid*>(&iprime);

  if (uniform != nullptr && g.monotone_shortcut) {
    // Monotone f: removing a superset can only lower the surviving value,
    // so the minimum over |B| <= beta is attained at |B| = min(beta, |a|).
    const int k = std::min(uniform->alpha(), a.size());
    const std::uint64_t count = binomial(a.size(), k);
    if (count > g.max_candidates)
      throw guard_error("removal enumeration would explore " +
                        std::to_string(count) + " sets (guard " +
                        std::to_string(g.max_candidates) + ")");
    for_each_combination(a.ids(), k, [&](const ElementSet& b) {
      best.offer(b, f(a.set_difference(b)));
      ++result.explored;
    });
    std::uint64_t full_count = 0;
    for (int j = 0; j <= k; ++j) full_count += binomial(a.size(), j);
    result.pruned = result.explored < full_count;
  } else {
    if (a.size() > 62 ||
        (std::uint64_t{1} << a.size()) > g.max_candidates)
      throw guard_error("removal enumeration would explore 2^" +
                        std::to_string(a.size()) + " sets (guard " +
                        std::to_string(g.max_candidates) + ")");
    const std::vector<ElementId>& ids = a.ids();
    const std::uint64_t total = std::uint64_t{1} << a.size();
    for (std::uint64_t m = 0; m < total; ++m) {
      std::vector<ElementId> picked;
      for (int i = 0; i < a.size(); ++i)
        if (m & (std::uint64_t{1} << i)) picked.push_back(ids[i]);
      ElementSet b(std::move(picked));
      if (!iprime.is_independent(b)) continue;
      best.offer(b, f(a.set_difference(b)));
      ++result.explored;
    }
  }

  result.argset = best.argset;
  result.value = best.value;
  return result;
}

OracleResult optimal_resilient(const SetFunction& f, const Matroid& i,
                               const Matroid& iprime, OracleGuards g) {
  const int n = f.ground().size();
  if (i.ground().size() != n || iprime.ground().size() != n)
    throw std::invalid_argument(
        "objective and matroids must share one ground set");
  if (n > g.max_ground)
    throw guard_error("optimal oracle refuses |V| > " +
                      std::to_string(g.max_ground) +
                      " (override via guards)");

  OracleResult result;
  MaxTracker best;
  auto consider = [&](const ElementSet& a) {
    OracleResult inner = worst_case_removal(f, a, iprime, g);
    best.offer(a, inner.value);
    result.explored += 1;
  };

  const auto* uniform = dynamic_cast<const UniformMatroid*>(&i);
  if (uniform != nullptr && g.monotone_shortcut) {
    // Monotone f and downward-closed removals: the max-min value never drops
    // when the selection grows, so only maximum-cardinality selections need
    // enumerating.
    const int k = std::min(uniform->alpha(), n);
    std::vector<ElementId> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    if (binomial(n, k) > g.max_candidates)
      throw guard_error("selection enumeration exceeds candidate guard");
    for_each_combination(pool, k, consider);
    result.pruned = true;
  } else {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < total; ++m) {
      ElementSet a = ElementSet::from_mask(m);
      if (!i.is_independent(a)) continue;
      consider(a);
    }
  }

  result.argset = best.argset;
  result.value = best.value;
  return result;
}

ElementSet greedy_nonresilient(const SetFunction& f, const Matroid& i) {
  if (i.ground().size() != f.ground().size())
    throw std::invalid_argument(
        "objective and matroid must share one ground set");
  return internal::greedy_complete(f, i, ElementSet{}, /*lazy=*/false);
}

ElementSet random_feasible(const Matroid& i, std::uint64_t seed) {
  std::vector<ElementId> order(i.ground().size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  ElementSet s;
  for (ElementId id : order) {
    ElementSet candidate = s.with(id);
    if (i.is_independent(candidate)) s = std::move(candidate);
  }
  return s;
}

}  // namespace resilimat
