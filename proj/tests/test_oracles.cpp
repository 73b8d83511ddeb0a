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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "resilimat/bounds.hpp"
#include "resilimat/exact_oracles.hpp"
#include "resilimat/solver.hpp"

using namespace resilimat;
namespace rt = resilimat::testing;

TEST_CASE("worst-case removal on a modular pair") {
  SetFunction f = make_modular(GroundSet(2), {3, 2});
  UniformMatroid iprime(GroundSet(2), 1);
  OracleResult r = worst_case_removal(f, ElementSet{0, 1}, iprime);
  CHECK(r.argset == ElementSet{0});
  CHECK(r.value == 2.0);
}

TEST_CASE("removal cap at or above |a| wipes the selection") {
  SetFunction f = make_modular(GroundSet(3), {3, 2, 1});
  UniformMatroid iprime(GroundSet(3), 3);
  OracleResult r = worst_case_removal(f, ElementSet{0, 1}, iprime);
  CHECK(r.argset == ElementSet{0, 1});
  CHECK(r.value == 0.0);
}

TEST_CASE("worst-case removal on the coverage example") {
  SetFunction f = make_coverage(GroundSet(4), {{0, 1}, {1, 2}, {0}, {2}});
  UniformMatroid iprime(GroundSet(4), 1);
  OracleResult r = worst_case_removal(f, ElementSet{0, 1, 3}, iprime);
  CHECK(r.argset == ElementSet{0});
  CHECK(r.value == 2.0);
  CHECK(f(ElementSet{0, 1, 3}.set_difference(r.argset)) == r.value);
}

TEST_CASE("optimal resilient selection on a modular triple") {
  SetFunction f = make_modular(GroundSet(3), {3, 2, 1});
  UniformMatroid i(GroundSet(3), 2);
  UniformMatroid iprime(GroundSet(3), 1);
  OracleResult r = optimal_resilient(f, i, iprime);
  CHECK(r.value == 2.0);
  CHECK(r.argset == ElementSet{0, 1});
}

TEST_CASE("beta = 0 optimal equals the non-resilient optimum") {
  SetFunction f = rt::random_coverage(7, 42);
  UniformMatroid i(GroundSet(7), 3);
  UniformMatroid none(GroundSet(7), 0);
  OracleResult r = optimal_resilient(f, i, none);
  double best = 0.0;
  for (std::uint64_t m = 0; m < (1u << 7); ++m) {
    ElementSet a = ElementSet::from_mask(m);
    if (i.is_independent(a)) best = std::max(best, f(a));
  }
  CHECK(r.value == doctest::Approx(best));
}

TEST_CASE("alpha = 0 forces the empty selection") {
  SetFunction f = rt::random_modular(4, 9);
  UniformMatroid i(GroundSet(4), 0);
  UniformMatroid iprime(GroundSet(4), 1);
  OracleResult r = optimal_resilient(f, i, iprime);
  CHECK(r.value == 0.0);
  CHECK(r.argset.empty());
}

TEST_CASE("oracle value always re-evaluates consistently") {
  for (int trial = 0; trial < 20; ++trial) {
    SetFunction f = rt::random_coverage(7, 500 + trial);
    UniformMatroid i(GroundSet(7), 3);
    UniformMatroid iprime(GroundSet(7), 1 + trial % 2);
    OracleResult r = optimal_resilient(f, i, iprime);
    OracleResult inner = worst_case_removal(f, r.argset, iprime);
    CHECK(inner.value == r.value);
    CHECK(f(r.argset.set_difference(inner.argset)) == inner.value);
  }
}

TEST_CASE("greedy on modular weights is top-k") {
  SetFunction f = make_modular(GroundSet(3), {3, 2, 1});
  CHECK(greedy_nonresilient(f, UniformMatroid(GroundSet(3), 2)) ==
        ElementSet{0, 1});
  CHECK(greedy_nonresilient(f, UniformMatroid(GroundSet(3), 0)).empty());
}

TEST_CASE("greedy covers the universe on the small coverage instance") {
  SetFunction f = make_coverage(GroundSet(2), {{0, 1}, {1, 2}});
  CHECK(greedy_nonresilient(f, UniformMatroid(GroundSet(2), 2)) ==
        ElementSet{0, 1});
}

TEST_CASE("random feasible selections are deterministic and independent") {
  UniformMatroid all(GroundSet(5), 5);
  CHECK(random_feasible(all, 1) == ElementSet::full(5));
  UniformMatroid two(GroundSet(5), 2);
  ElementSet first = random_feasible(two, 7);
  CHECK(first == random_feasible(two, 7));
  CHECK(first.size() == 2);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto blocks = rt::random_partition(8, 3, seed);
    auto caps = rt::random_caps(blocks, 3, seed + 1);
    PartitionMatroid m(GroundSet(8), blocks, caps);
    CHECK(m.is_independent(random_feasible(m, seed)));
  }
}

TEST_CASE("fixed-size shortcut equals the full enumeration") {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 8;
    SetFunction f = trial % 3 == 0   ? rt::random_modular(n, 600 + trial)
                    : trial % 3 == 1 ? rt::random_coverage(n, 700 + trial)
                                     : rt::random_nonsubmodular(n, 800 + trial);
    std::mt19937_64 rng(900 + trial);
    ElementSet a = ElementSet::from_mask(rng() & 0xff);
    UniformMatroid iprime(GroundSet(n), static_cast<int>(rng() % 4));

    OracleGuards fast;  // monotone shortcut on
    OracleGuards slow;
    slow.monotone_shortcut = false;
    OracleResult with = worst_case_removal(f, a, iprime, fast);
    OracleResult without = worst_case_removal(f, a, iprime, slow);
    CHECK(with.value == without.value);
    CHECK(with.explored <= without.explored);
  }
}

TEST_CASE("pruned flag reflects skipped enumeration") {
  SetFunction f = rt::random_modular(5, 3);
  UniformMatroid beta2(GroundSet(5), 2);
  OracleResult r = worst_case_removal(f, ElementSet{0, 1, 2}, beta2);
  CHECK(r.pruned);
  UniformMatroid beta0(GroundSet(5), 0);
  CHECK_FALSE(worst_case_removal(f, ElementSet{0, 1, 2}, beta0).pruned);
}

TEST_CASE("uniform outer shortcut agrees with the full double enumeration") {
  for (int trial = 0; trial < 15; ++trial) {
    SetFunction f = rt::random_coverage(7, 1200 + trial);
    UniformMatroid i(GroundSet(7), 3);
    UniformMatroid iprime(GroundSet(7), trial % 3);
    OracleGuards fast;
    OracleGuards slow;
    slow.monotone_shortcut = false;
    OracleResult a = optimal_resilient(f, i, iprime, fast);
    OracleResult b = optimal_resilient(f, i, iprime, slow);
    CHECK(a.value == b.value);
  }
}

TEST_CASE("guards refuse oversized enumerations") {
  SetFunction f = rt::random_modular(30, 1);
  UniformMatroid i(GroundSet(30), 10);
  UniformMatroid iprime(GroundSet(30), 5);
  CHECK_THROWS_AS(optimal_resilient(f, i, iprime), guard_error);

  OracleGuards tiny;
  tiny.max_candidates = 2;
  CHECK_THROWS_AS(
      worst_case_removal(f, ElementSet{0, 1, 2, 3, 4, 5, 6, 7}, iprime, tiny),
      guard_error);
}

TEST_CASE("lemma: any feasible bait leaves at least f* reachable") {
  // max_{X ⊆ V\Y, X∪Y ∈ I} f(X) >= f* for every Y independent in both.
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 7;
    SetFunction f = rt::random_coverage(n, 1500 + trial);
    UniformMatroid i(GroundSet(n), 3);
    UniformMatroid iprime(GroundSet(n), 1 + trial % 3);
    const double fstar = optimal_resilient(f, i, iprime).value;
    std::mt19937_64 rng(1600 + trial);
    for (int k = 0; k < 10; ++k) {
      ElementSet y = ElementSet::from_mask(rng() & ((1u << n) - 1));
      if (!i.is_independent(y) || !iprime.is_independent(y)) continue;
      CHECK(rt::brute_force_restricted_max(f, i, y) >= fstar - 1e-9);
    }
  }
}

TEST_CASE("lemma: greedy completion meets its curvature floor") {
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 8;
    SetFunction f = trial % 2 == 0 ? rt::random_coverage(n, 1700 + trial)
                                   : rt::random_logdet(n, 1800 + trial);
    const double kappa = *curvature_kappa(f).kappa;

    std::shared_ptr<Matroid> i;
    double floor;
    if (trial % 3 == 0) {
      auto blocks = rt::random_partition(n, 2, 1900 + trial);
      auto caps = rt::random_caps(blocks, 3, 2000 + trial);
      i = std::make_shared<PartitionMatroid>(GroundSet(n), blocks, caps);
      floor = 1.0 / (1.0 + kappa);
    } else {
      i = std::make_shared<UniformMatroid>(GroundSet(n), 3);
      floor = curvature_discount(kappa);
    }
    UniformMatroid iprime(GroundSet(n), 1 + trial % 2);

    SolverOutput out = solve_resilient(f, *i, iprime);
    const double reachable = rt::brute_force_restricted_max(f, *i, out.a1);
    CHECK(f(out.a2) >= floor * reachable - 1e-9);
  }
}
