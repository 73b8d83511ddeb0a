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

#ifndef RESILIMAT_GREEDY_INTERNAL_HPP_
#define RESILIMAT_GREEDY_INTERNAL_HPP_

#include "resilimat/matroid.hpp"
#include "resilimat/set_function.hpp"

namespace resilimat::internal {

// Greedy completion shared by the solver's second phase and the classical
// non-resilient greedy (base = ∅): repeatedly pick the unconsidered element
// maximizing f(a2 ∪ {y}) (ties toward the lowest id) and keep it when
// base ∪ a2 ∪ {y} stays independent in `i`.
ElementSet greedy_complete(const SetFunction& f, const Matroid& i,
                           const ElementSet& base, bool lazy);

}  // namespace resilimat::internal

#endif  // RESILIMAT_GREEDY_INTERNAL_HPP_
