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

#ifndef RESILIMAT_SETS_HPP_
#define RESILIMAT_SETS_HPP_

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace resilimat {

using ElementId = int;

// Thrown when an exhaustive enumeration would exceed its configured limit.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// Dense universe {0, ..., size-1} of selectable elements, with optional
/// human-readable labels for reporting.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(int size) : size_(size) {
    if (size < 0) throw std::invalid_argument("ground set size must be >= 0");
  }
  GroundSet(int size, std::vector<std::string> labels)
      : size_(size), labels_(std::move(labels)) {
    if (size < 0) throw std::invalid_argument("ground set size must be >= 0");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != size)
      throw std::invalid_argument("label count must match ground size");
  }

  int size() const { return size_; }
  bool contains(ElementId id) const { return id >= 0 && id < size_; }
  std::string label(ElementId id) const {
    if (!contains(id)) throw std::invalid_argument("element id out of range");
    return labels_.empty() ? std::to_string(id) : labels_[id];
  }

 private:
  int size_ = 0;
  std::vector<std::string> labels_;
};

/// Sorted duplicate-free set of element ids.  The universal currency for
/// matroid queries, set-function evaluation and solver outputs.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids)
      : ElementSet(std::vector<ElementId>(ids)) {}
  explicit ElementSet(std::vector<ElementId> ids);

  static ElementSet full(int n);
  // Decodes bit i of `mask` to element id i.
  static ElementSet from_mask(std::uint64_t mask);

  bool empty() const { return ids_.empty(); }
  int size() const { return static_cast<int>(ids_.size()); }
  bool contains(ElementId id) const;
  ElementId max_id() const { return ids_.empty() ? -1 : ids_.back(); }

  const std::vector<ElementId>& ids() const { return ids_; }
  std::vector<ElementId>::const_iterator begin() const { return ids_.begin(); }
  std::vector<ElementId>::const_iterator end() const { return ids_.end(); }

  ElementSet with(ElementId id) const;
  ElementSet without(ElementId id) const;
  ElementSet set_union(const ElementSet& other) const;
  ElementSet set_difference(const ElementSet& other) const;
  ElementSet set_intersection(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;
  bool disjoint_with(const ElementSet& other) const;

  // Requires max_id() < 64.
  std::uint64_t mask() const;

  bool operator==(const ElementSet& other) const { return ids_ == other.ids_; }
  bool operator!=(const ElementSet& other) const { return ids_ != other.ids_; }

  // Lexicographic order on the sorted id sequence; used as the deterministic
  // tie rule for oracle witnesses.
  bool lex_less(const ElementSet& other) const;

  std::string to_string() const;

 private:
  std::vector<ElementId> ids_;
};

}  // namespace resilimat

#endif  // RESILIMAT_SETS_HPP_
