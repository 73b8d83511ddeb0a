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

#ifndef RESILIMAT_MATROID_HPP_
#define RESILIMAT_MATROID_HPP_

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "resilimat/sets.hpp"

namespace resilimat {

/// Independence oracle over a fixed ground set.  Concrete families are
/// immutable after construction and safe to share across threads; queries
/// never mutate shared state.
class Matroid {
 public:
  virtual ~Matroid() = default;

  const GroundSet& ground() const { return ground_; }

  /// True iff `s` is independent.  Throws std::invalid_argument when `s`
  /// contains an id outside the ground set.
  bool is_independent(const ElementSet& s) const;

  /// Maximum cardinality of an independent set, computed by the matroid
  /// greedy scanning ids in ascending order (deterministic).
  int rank() const;

  virtual std::string kind() const = 0;

  const std::vector<std::string>& warnings() const { return warnings_; }

 protected:
  explicit Matroid(GroundSet ground) : ground_(std::move(ground)) {}
  virtual bool indep_impl(const ElementSet& s) const = 0;
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

 private:
  GroundSet ground_;
  std::vector<std::string> warnings_;
  mutable std::once_flag rank_once_;
  mutable int rank_cache_ = -1;
};

/// Independent iff |S| <= alpha.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(GroundSet ground, int alpha);
  int alpha() const { return alpha_; }
  std::string kind() const override { return "uniform"; }

 protected:
  bool indep_impl(const ElementSet& s) const override;

 private:
  int alpha_;
};

/// Independent iff |S ∩ V_i| <= caps[i] for every block.  Blocks must
/// partition the ground set exactly; caps above a block size are clamped
/// (with a warning) so rank arithmetic stays exact.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(GroundSet ground, std::vector<ElementSet> blocks,
                   std::vector<int> caps);
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const std::vector<int>& caps() const { return caps_; }
  int block_of(ElementId id) const { return block_of_[id]; }
  bool same_partition_as(const PartitionMatroid& other) const;
  std::string kind() const override { return "partition"; }

 protected:
  bool indep_impl(const ElementSet& s) const override;

 private:
  std::vector<ElementSet> blocks_;
  std::vector<int> caps_;
  std::vector<int> block_of_;
};

/// Independent iff S is a partial transversal of the subset system, decided
/// by augmenting-path bipartite matching per query.
class TransversalMatroid : public Matroid {
 public:
  TransversalMatroid(GroundSet ground, std::vector<ElementSet> subsets);
  const std::vector<ElementSet>& subsets() const { return subsets_; }
  std::string kind() const override { return "transversal"; }

 protected:
  bool indep_impl(const ElementSet& s) const override;

 private:
  std::vector<ElementSet> subsets_;
  std::vector<std::vector<int>> subsets_of_;  // element id -> subset indices
};

/// The matroid over V \ pinned whose independent sets X satisfy
/// X ∪ pinned ∈ base.  Requires pinned independent in the base.
class RestrictedMatroid : public Matroid {
 public:
  RestrictedMatroid(std::shared_ptr<const Matroid> base, ElementSet pinned);
  const ElementSet& pinned() const { return pinned_; }
  const Matroid& base() const { return *base_; }
  std::string kind() const override { return "restricted"; }

 protected:
  bool indep_impl(const ElementSet& s) const override;

 private:
  std::shared_ptr<const Matroid> base_;
  ElementSet pinned_;
};

/// Restriction of a matroid to the subsets of a fixed set `a`:
/// B independent iff B ⊆ a and B independent in the base.
class SubsetRestrictionMatroid : public Matroid {
 public:
  SubsetRestrictionMatroid(std::shared_ptr<const Matroid> base, ElementSet a);
  const ElementSet& allowed() const { return allowed_; }
  const Matroid& base() const { return *base_; }
  std::string kind() const override { return "subset-restriction"; }

 protected:
  bool indep_impl(const ElementSet& s) const override;

 private:
  std::shared_ptr<const Matroid> base_;
  ElementSet allowed_;
};

std::shared_ptr<RestrictedMatroid> restrict(std::shared_ptr<const Matroid> m,
                                            const ElementSet& pinned);
std::shared_ptr<SubsetRestrictionMatroid> subset_matroid(
    std::shared_ptr<const Matroid> iprime, const ElementSet& a);

/// Outcome of the exhaustive matroid-axiom check.
struct AxiomReport {
  bool ok = true;
  // On failure, the violating sets: downward closure reports (x, z) with
  // z ⊆ x, x independent, z not; augmentation reports (x, z) with
  // |x| < |z|, both independent, and no augmenting element.
  std::optional<ElementSet> x;
  std::optional<ElementSet> z;
  std::string message;
};

/// Exhaustively checks non-emptiness, downward closure and augmentation for
/// an arbitrary independence oracle.  Refuses ground sets larger than
/// `limit` (default 12).
AxiomReport verify_matroid_axioms(
    const GroundSet& ground,
    const std::function<bool(const ElementSet&)>& indep, int limit = 12);

AxiomReport verify_matroid_axioms(const Matroid& m, int limit = 12);

}  // namespace resilimat

#endif  // RESILIMAT_MATROID_HPP_
