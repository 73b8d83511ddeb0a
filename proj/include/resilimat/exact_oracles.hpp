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

#ifndef RESILIMAT_EXACT_ORACLES_HPP_
#define RESILIMAT_EXACT_ORACLES_HPP_

#include <cstdint>

#include "resilimat/matroid.hpp"
#include "resilimat/set_function.hpp"

namespace resilimat {

struct OracleGuards {
  // Hard cap on enumerated candidate sets in a single call.
  std::uint64_t max_candidates = 1'000'000;
  // optimal_resilient refuses ground sets above this size.
  int max_ground = 12;
  // For a uniform removal constraint and monotone f, enumerating removals of
  // size exactly min(beta, |a|) reaches the same minimum as all sizes <= beta;
  // likewise the outer max is attained at a maximum-cardinality selection.
  bool monotone_shortcut = true;
};

struct OracleResult {
  ElementSet argset;
  double value = 0.0;
  std::uint64_t explored = 0;  // candidate sets enumerated
  bool pruned = false;         // a monotone shortcut narrowed the enumeration
};

/// Worst-case removal: minimizes f(a \ B) over B ⊆ a, B independent in
/// `iprime`.  Ties go to the lexicographically smallest removal set.
OracleResult worst_case_removal(const SetFunction& f, const ElementSet& a,
                                const Matroid& iprime, OracleGuards g = {});

/// Exact max-min selection by double enumeration: the optimal value f* and a
/// witness selection.  Desk-scale only; refuses large ground sets.
OracleResult optimal_resilient(const SetFunction& f, const Matroid& i,
                               const Matroid& iprime, OracleGuards g = {});

/// Classical non-resilient matroid greedy (lowest-id tie rule).
ElementSet greedy_nonresilient(const SetFunction& f, const Matroid& i);

/// Seeded random feasible selection: shuffle the ground set, scan, keep what
/// stays independent.  Deterministic per seed.
ElementSet random_feasible(const Matroid& i, std::uint64_t seed);

}  // namespace resilimat

#endif  // RESILIMAT_EXACT_ORACLES_HPP_
