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

#include "resilimat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace resilimat {

bool Matroid::is_independent(const ElementSet& s) const {
  if (s.max_id() >= ground_.size())
    throw std::invalid_argument("element id " + std::to_string(s.max_id()) +
                                " outside ground set of size " +
                                std::to_string(ground_.size()));
  return indep_impl(s);
}

int Matroid::rank() const {
  std::call_once(rank_once_, [this] {
    ElementSet s;
    for (ElementId id = 0; id < ground_.size(); ++id) {
      ElementSet candidate = s.with(id);
      if (indep_impl(candidate)) s = std::move(candidate);
    }
    rank_cache_ = s.size();
  });
  return rank_cache_;
}

UniformMatroid::UniformMatroid(GroundSet ground, int alpha)
    : Matroid(std::move(ground)), alpha_(alpha) {
  if (alpha < 0) throw std::invalid_argument("uniform cap must be >= 0");
}

bool UniformMatroid::indep_impl(const ElementSet& s) const {
  return s.size() <= alpha_;
}

PartitionMatroid::PartitionMatroid(GroundSet ground,
                                   std::vector<ElementSet> blocks,
                                   std::vector<int> caps)
    : Matroid(ground), blocks_(std::move(blocks)), caps_(std::move(caps)) {
  if (blocks_.size() != caps_.size())
    throw std::invalid_argument("one cap per block required");
  block_of_.assign(ground.size(), -1);
  int covered = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (caps_[b] < 0) throw std::invalid_argument("block caps must be >= 0");
    for (ElementId id : blocks_[b]) {
      if (!ground.contains(id))
        throw std::invalid_argument("block element outside ground set");
      if (block_of_[id] != -1)
        throw std::invalid_argument("blocks must be disjoint");
      block_of_[id] = static_cast<int>(b);
      ++covered;
    }
    if (caps_[b] > blocks_[b].size()) {
      std::ostringstream w;
      w << "cap " << caps_[b] << " of block " << b << " clamped to block size "
        << blocks_[b].size();
      add_warning(w.str());
      caps_[b] = blocks_[b].size();
    }
  }
  if (covered != ground.size())
    throw std::invalid_argument("blocks must cover the ground set exactly");
}

bool PartitionMatroid::indep_impl(const ElementSet& s) const {
  std::vector<int> used(blocks_.size(), 0);
  for (ElementId id : s) {
    int b = block_of_[id];
    if (++used[b] > caps_[b]) return false;
  }
  return true;
}

bool PartitionMatroid::same_partition_as(const PartitionMatroid& other) const {
  return blocks_ == other.blocks_;
}

TransversalMatroid::TransversalMatroid(GroundSet ground,
                                       std::vector<ElementSet> subsets)
    : Matroid(ground), subsets_(std::move(subsets)) {
  subsets_of_.assign(ground.size(), {});
  for (std::size_t j = 0; j < subsets_.size(); ++j)
    for (ElementId id : subsets_[j]) {
      if (!ground.contains(id))
        throw std::invalid_argument("subset element outside ground set");
      subsets_of_[id].push_back(static_cast<int>(j));
    }
}

namespace {

// Kuhn's augmenting-path step: try to match query element `u` (index into
// the queried set) to one of its admissible subsets.
bool try_augment(int u, const std::vector<std::vector<int>>& adj,
                 std::vector<int>& matched_subset, std::vector<char>& visited) {
  for (int j : adj[u]) {
    if (visited[j]) continue;
    visited[j] = 1;
    if (matched_subset[j] == -1 ||
        try_augment(matched_subset[j], adj, matched_subset, visited)) {
      matched_subset[j] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

bool TransversalMatroid::indep_impl(const ElementSet& s) const {
  const int n_subsets = static_cast<int>(subsets_.size());
  if (s.size() > n_subsets) return false;
  std::vector<std::vector<int>> adj;
  adj.reserve(s.size());
  for (ElementId id : s) adj.push_back(subsets_of_[id]);
  std::vector<int> matched_subset(n_subsets, -1);
  for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
    std::vector<char> visited(n_subsets, 0);
    if (!try_augment(u, adj, matched_subset, visited)) return false;
  }
  return true;
}

RestrictedMatroid::RestrictedMatroid(std::shared_ptr<const Matroid> base,
                                     ElementSet pinned)
    : Matroid(base->ground()), base_(std::move(base)),
      pinned_(std::move(pinned)) {
  if (!base_->is_independent(pinned_))
    throw std::domain_error("pinned set must be independent in the base");
}

bool RestrictedMatroid::indep_impl(const ElementSet& s) const {
  if (!s.disjoint_with(pinned_)) return false;
  return base_->is_independent(s.set_union(pinned_));
}

SubsetRestrictionMatroid::SubsetRestrictionMatroid(
    std::shared_ptr<const Matroid> base, ElementSet a)
    : Matroid(base->ground()), base_(std::move(base)), allowed_(std::move(a)) {
  if (allowed_.max_id() >= ground().size())
    throw std::invalid_argument("restriction set outside ground set");
}

bool SubsetRestrictionMatroid::indep_impl(const ElementSet& s) const {
  if (!s.is_subset_of(allowed_)) return false;
  return base_->is_independent(s);
}

std::shared_ptr<RestrictedMatroid> restrict(std::shared_ptr<const Matroid> m,
                                            const ElementSet& pinned) {
  return std::make_shared<RestrictedMatroid>(std::move(m), pinned);
}

std::shared_ptr<SubsetRestrictionMatroid> subset_matroid(
    std::shared_ptr<const Matroid> iprime, const ElementSet& a) {
  return std::make_shared<SubsetRestrictionMatroid>(std::move(iprime), a);
}

AxiomReport verify_matroid_axioms(
    const GroundSet& ground,
    const std::function<bool(const ElementSet&)>& indep, int limit) {
  const int n = ground.size();
  if (n > limit)
    throw guard_error("axiom check refuses ground sets larger than " +
                      std::to_string(limit));

  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<char> is_indep(total, 0);
  std::vector<std::uint64_t> members;
  for (std::uint64_t m = 0; m < total; ++m) {
    is_indep[m] = indep(ElementSet::from_mask(m)) ? 1 : 0;
    if (is_indep[m]) members.push_back(m);
  }

  AxiomReport report;
  if (members.empty()) {
    report.ok = false;
    report.message = "independence family is empty";
    return report;
  }

  // Downward closure via single-element deletions (equivalent by induction).
  for (std::uint64_t m : members) {
    for (int e = 0; e < n; ++e) {
      if (!(m & (std::uint64_t{1} << e))) continue;
      std::uint64_t sub = m & ~(std::uint64_t{1} << e);
      if (!is_indep[sub]) {
        report.ok = false;
        report.x = ElementSet::from_mask(m);
        report.z = ElementSet::from_mask(sub);
        report.message = "downward closure violated";
        return report;
      }
    }
  }

  for (std::uint64_t x : members) {
    const int px = std::popcount(x);
    for (std::uint64_t z : members) {
      if (std::popcount(z) <= px) continue;
      bool augmented = false;
      std::uint64_t candidates = z & ~x;
      while (candidates != 0) {
        std::uint64_t bit = candidates & (~candidates + 1);
        candidates ^= bit;
        if (is_indep[x | bit]) {
          augmented = true;
          break;
        }
      }
      if (!augmented) {
        report.ok = false;
        report.x = ElementSet::from_mask(x);
        report.z = ElementSet::from_mask(z);
        report.message = "augmentation violated";
        return report;
      }
    }
  }
  return report;
}

AxiomReport verify_matroid_axioms(const Matroid& m, int limit) {
  return verify_matroid_axioms(
      m.ground(), [&m](const ElementSet& s) { return m.is_independent(s); },
      limit);
}

}  // namespace resilimat
