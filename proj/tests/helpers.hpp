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

#ifndef RESILIMAT_TESTS_HELPERS_HPP_
#define RESILIMAT_TESTS_HELPERS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <vector>

#include "resilimat/matroid.hpp"
#include "resilimat/set_function.hpp"

namespace resilimat::testing {

// Randomized objective families for property and acceptance sweeps.  Every
// generator keeps all singleton values strictly positive so curvature is
// well defined.

inline SetFunction random_modular(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> w(0.2, 5.0);
  std::vector<double> weights(n);
  for (auto& x : weights) x = w(rng);
  return make_modular(GroundSet(n), std::move(weights));
}

inline SetFunction random_coverage(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int universe = 2 * n + 2;
  std::uniform_int_distribution<int> item(0, universe - 1);
  std::uniform_int_distribution<int> extra(0, 2);
  std::vector<std::vector<int>> covers(n);
  for (auto& c : covers) {
    c.push_back(item(rng));  // non-empty: every singleton has value >= 1
    const int more = extra(rng);
    for (int k = 0; k < more; ++k) c.push_back(item(rng));
  }
  return make_coverage(GroundSet(n), std::move(covers));
}

inline SetFunction random_logdet(int n, std::uint64_t seed, int dim = 3) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Eigen::MatrixXd> mats;
  mats.reserve(n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd v(dim);
    for (int j = 0; j < dim; ++j) v(j) = gauss(rng);
    // Rank-one information plus a ridge keeps every ratio well conditioned.
    mats.push_back(v * v.transpose() + 0.15 * Eigen::MatrixXd::Identity(dim, dim));
  }
  return make_logdet(GroundSet(n), std::move(mats),
                     Eigen::MatrixXd::Identity(dim, dim));
}

inline SetFunction random_concave_modular(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> w(0.5, 4.0);
  std::vector<double> weights(n);
  for (auto& x : weights) x = w(rng);
  return make_concave_over_modular(GroundSet(n), std::move(weights),
                                   Concave::kSqrt);
}

// Monotone but not submodular: coverage scaled by a |S|^1.5-shaped factor.
// All marginals stay strictly positive, so the total curvature is < 1.
inline SetFunction random_nonsubmodular(int n, std::uint64_t seed,
                                        double gamma = 0.15) {
  SetFunction cov = random_coverage(n, seed);
  return SetFunction(
      cov.ground(),
      [cov, gamma](const ElementSet& s) {
        const double k = static_cast<double>(s.size());
        return cov(s) * (1.0 + gamma * (std::pow(k, 1.5) - k));
      },
      "scaled-coverage");
}

// Random partition of {0..n-1} into `blocks` non-empty groups.
inline std::vector<ElementSet> random_partition(int n, int blocks,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<ElementId>> groups(blocks);
  for (int b = 0; b < blocks; ++b) groups[b].push_back(b);  // non-empty
  std::uniform_int_distribution<int> pick(0, blocks - 1);
  for (int id = blocks; id < n; ++id) groups[pick(rng)].push_back(id);
  std::vector<ElementId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<ElementSet> out;
  std::size_t at = 0;
  for (int b = 0; b < blocks; ++b) {
    std::vector<ElementId> ids;
    for (std::size_t k = 0; k < groups[b].size(); ++k) ids.push_back(order[at++]);
    out.emplace_back(std::move(ids));
  }
  return out;
}

// Distributes `total` cap units over the blocks without exceeding per-block
// ceilings (block size, or an explicit per-block limit).
inline std::vector<int> random_caps(const std::vector<ElementSet>& blocks,
                                    int total, std::uint64_t seed,
                                    const std::vector<int>* ceil = nullptr) {
  std::mt19937_64 rng(seed);
  std::vector<int> caps(blocks.size(), 0);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(blocks.size()) - 1);
  int placed = 0;
  int attempts = 0;
  while (placed < total && attempts < 10000) {
    const int b = pick(rng);
    const int limit = ceil ? (*ceil)[b] : blocks[b].size();
    if (caps[b] < limit) {
      ++caps[b];
      ++placed;
    }
    ++attempts;
  }
  return caps;
}

// Lemma-style dominance: every surviving bait singleton dominates every
// greedy singleton, globally for a uniform removal constraint and per block
// when the removal constraint shares the selection partition.
inline bool dominance_holds(const SetFunction& f, const ElementSet& a1,
                            const ElementSet& a2, const Matroid& iprime,
                            double tol = 1e-12) {
  auto value = [&f](ElementId v) { return f(ElementSet{v}); };
  if (const auto* part = dynamic_cast<const PartitionMatroid*>(&iprime)) {
    for (const auto& block : part->blocks()) {
      double min_a1 = std::numeric_limits<double>::infinity();
      double max_a2 = -std::numeric_limits<double>::infinity();
      for (ElementId v : a1.set_intersection(block)) min_a1 = std::min(min_a1, value(v));
      for (ElementId v : a2.set_intersection(block)) max_a2 = std::max(max_a2, value(v));
      if (max_a2 > min_a1 + tol) return false;
    }
    return true;
  }
  double min_a1 = std::numeric_limits<double>::infinity();
  double max_a2 = -std::numeric_limits<double>::infinity();
  for (ElementId v : a1) min_a1 = std::min(min_a1, value(v));
  for (ElementId v : a2) max_a2 = std::max(max_a2, value(v));
  return max_a2 <= min_a1 + tol;
}

// Brute-force max of f(X) over X ⊆ V \ base with X ∪ base independent.
inline double brute_force_restricted_max(const SetFunction& f,
                                         const Matroid& i,
                                         const ElementSet& base) {
  const int n = f.ground().size();
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t base_mask = base.mask();
  double best = 0.0;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (m & base_mask) continue;
    ElementSet x = ElementSet::from_mask(m);
    if (!i.is_independent(x.set_union(base))) continue;
    best = std::max(best, f(x));
  }
  return best;
}

}  // namespace resilimat::testing

#endif  // RESILIMAT_TESTS_HELPERS_HPP_
