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

#ifndef RESILIMAT_SOLVER_HPP_
#define RESILIMAT_SOLVER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "resilimat/matroid.hpp"
#include "resilimat/set_function.hpp"

namespace resilimat {

struct SolverOptions {
  // Lazy-greedy shortcut for the second phase.  Only valid for submodular
  // objectives (stale marginals are upper bounds there); produces the exact
  // same output as the fresh evaluation path in that case.
  bool lazy_submodular = false;
};

struct SolverOutput {
  ElementSet a1;  // bait set, independent in both constraints
  ElementSet a2;  // greedy completion over the remaining elements
  ElementSet a;   // a1 ∪ a2
  std::uint64_t eval_count = 0;
  std::vector<std::string> warnings;
};

/// Two-phase resilient selection: a bait phase that packs the highest
/// singleton values independent in both the selection constraint `i` and the
/// removal constraint `iprime`, then a greedy completion over the rest.
/// Deterministic: both argmax steps break ties toward the lowest element id.
/// Consumes at most 2|V|^2 evaluations of f.
///
/// The stated guarantees need `iprime` uniform, or partition with the same
/// partition as `i`; other removal constraints run with a warning attached.
SolverOutput solve_resilient(const SetFunction& f, const Matroid& i,
                             const Matroid& iprime, SolverOptions opts = {});

/// Upper bound 2n^2 on the number of f evaluations a solve may consume.
std::uint64_t evaluation_budget(int n);

}  // namespace resilimat

#endif  // RESILIMAT_SOLVER_HPP_
