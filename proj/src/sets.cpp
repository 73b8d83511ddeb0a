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

#include "resilimat/sets.hpp"

#include <algorithm>
#include <sstream>

namespace resilimat {

ElementSet::ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  if (!ids_.empty() && ids_.front() < 0)
    throw std::invalid_argument("element ids must be non-negative");
}

ElementSet ElementSet::full(int n) {
  std::vector<ElementId> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  ElementSet s;
  s.ids_ = std::move(ids);
  return s;
}

ElementSet ElementSet::from_mask(std::uint64_t mask) {
  ElementSet s;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) s.ids_.push_back(i);
  return s;
}

bool ElementSet::contains(ElementId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

ElementSet ElementSet::with(ElementId id) const {
  if (contains(id)) return *this;
  ElementSet s = *this;
  s.ids_.insert(std::lower_bound(s.ids_.begin(), s.ids_.end(), id), id);
  return s;
}

ElementSet ElementSet::without(ElementId id) const {
  ElementSet s = *this;
  auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), id);
  if (it != s.ids_.end() && *it == id) s.ids_.erase(it);
  return s;
}

ElementSet ElementSet::set_union(const ElementSet& other) const {
  ElementSet s;
  s.ids_.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

ElementSet ElementSet::set_difference(const ElementSet& other) const {
  ElementSet s;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

ElementSet ElementSet::set_intersection(const ElementSet& other) const {
  ElementSet s;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

bool ElementSet::disjoint_with(const ElementSet& other) const {
  return set_intersection(other).empty();
}

std::uint64_t ElementSet::mask() const {
  if (max_id() >= 64)
    throw std::invalid_argument("bit mask requires element ids < 64");
  std::uint64_t m = 0;
  for (ElementId id : ids_) m |= (std::uint64_t{1} << id);
  return m;
}

bool ElementSet::lex_less(const ElementSet& other) const {
  return std::lexicographical_compare(ids_.begin(), ids_.end(),
                                      other.ids_.begin(), other.ids_.end());
}

std::string ElementSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) out << ',';
    out << ids_[i];
  }
  out << '}';
  return out.str();
}

}  // namespace resilimat
