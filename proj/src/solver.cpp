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

#include "resilimat/solver.hpp"

#include <algorithm>
#include <queue>

#include "resilimat/greedy_internal.hpp"

namespace resilimat {

namespace internal {

ElementSet greedy_complete(const SetFunction& f, const Matroid& i,
                           const ElementSet& base, bool lazy) {
  const int n = f.ground().size();
  std::vector<ElementId> candidates;
  for (ElementId id = 0; id < n; ++id)
    if (!base.contains(id)) candidates.push_back(id);

  ElementSet a2;
  double current = 0.0;  // f(a2); exact, since f(∅) is normalized to 0
  if (!lazy) {
    std::vector<char> considered(n, 0);
    for (std::size_t round = 0; round < candidates.size(); ++round) {
      double best_gain = 0.0, best_value = 0.0;
      ElementId best_id = -1;
      for (ElementId y : candidates) {
        if (considered[y]) continue;
        const double value = f(a2.with(y));
        const double gain = value - current;
        if (best_id == -1 || gain > best_gain) {
          best_gain = gain;
          best_value = value;
          best_id = y;
        }
      }
      if (best_id == -1) break;
      if (i.is_independent(base.set_union(a2.with(best_id)))) {
        a2 = a2.with(best_id);
        current = best_value;
      }
      considered[best_id] = 1;
    }
    return a2;
  }

  // Lazy variant: heap keys are marginal gains, and stale gains are upper
  // bounds under submodularity.  Entries are refreshed until the top is
  // current, so the (gain desc, id asc) pick matches the fresh path.
  struct Entry {
    double gain;
    double value;
    ElementId id;
    int stamp;
  };
  auto cmp = [](const Entry& a, const Entry& b) {
    return a.gain < b.gain || (a.gain == b.gain && a.id > b.id);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  for (ElementId y : candidates) {
    const double value = f(ElementSet{y});
    heap.push({value, value, y, 0});
  }

  int stamp = 0;
  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (top.stamp != stamp) {
      const double value = f(a2.with(top.id));
      heap.push({value - current, value, top.id, stamp});
      continue;
    }
    if (i.is_independent(base.set_union(a2.with(top.id)))) {
      a2 = a2.with(top.id);
      current = top.value;
      ++stamp;
    }
  }
  return a2;
}

}  // namespace internal

namespace {

// True when the removal constraint is one of the families Algorithm 1's
// guarantees cover: any uniform matroid, or a partition matroid sharing the
// selection matroid's partition.
bool guarantees_apply(const Matroid& i, const Matroid& iprime) {
  if (dynamic_cast<const UniformMatroid*>(&iprime) != nullptr) return true;
  const auto* pp = dynamic_cast<const PartitionMatroid*>(&iprime);
  const auto* pi = dynamic_cast<const PartitionMatroid*>(&i);
  return pp != nullptr && pi != nullptr && pp->same_partition_as(*pi);
}

}  // namespace

SolverOutput solve_resilient(const SetFunction& f, const Matroid& i,
                             const Matroid& iprime, SolverOptions opts) {
  const int n = f.ground().size();
  if (i.ground().size() != n || iprime.ground().size() != n)
    throw std::invalid_argument(
        "objective and matroids must share one ground set");

  SolverOutput out;
  if (!guarantees_apply(i, iprime))
    out.warnings.push_back(
        "removal constraint is neither uniform nor same-partition partition; "
        "approximation guarantees void");

  const std::uint64_t evals_before = f.eval_count();

  // Bait phase.  Line 3's argmax is over singleton values only, so one
  // sorted scan (ties toward the lowest id) replays lines 2-8 exactly.
  std::vector<std::pair<double, ElementId>> singles;
  singles.reserve(n);
  for (ElementId v = 0; v < n; ++v) singles.emplace_back(f(ElementSet{v}), v);
  std::stable_sort(singles.begin(), singles.end(),
                   [](const auto& a, const auto& b) {
                     return a.first > b.first ||
                            (a.first == b.first && a.second < b.second);
                   });
  ElementSet a1;
  for (const auto& [value, y] : singles) {
    ElementSet candidate = a1.with(y);
    if (i.is_independent(candidate) && iprime.is_independent(candidate))
      a1 = std::move(candidate);
  }

  out.a1 = a1;
  out.a2 = internal::greedy_complete(f, i, a1, opts.lazy_submodular);
  out.a = out.a1.set_union(out.a2);
  out.eval_count = f.eval_count() - evals_before;
  return out;
}

std::uint64_t evaluation_budget(int n) {
  if (n < 0) throw std::invalid_argument("ground size must be >= 0");
  return 2ull * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
}

}  // namespace resilimat
