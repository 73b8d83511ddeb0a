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

TEST_CASE("bait takes the top value, greedy completes") {
  SetFunction f = make_modular(GroundSet(3), {3, 2, 1});
  UniformMatroid i(GroundSet(3), 2);
  UniformMatroid iprime(GroundSet(3), 1);
  SolverOutput out = solve_resilient(f, i, iprime);
  CHECK(out.a1 == ElementSet{0});
  CHECK(out.a2 == ElementSet{1});
  CHECK(out.a == ElementSet{0, 1});
  CHECK(out.warnings.empty());

  // Cross-check optimality on this instance by brute force.
  OracleResult opt = optimal_resilient(f, i, iprime);
  CHECK(opt.value == 2.0);
  CHECK(opt.argset == out.a);
}

TEST_CASE("output invariants: disjoint parts, feasibility, budget") {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 8;
    SetFunction f = trial % 2 == 0 ? rt::random_coverage(n, 1000 + trial)
                                   : rt::random_modular(n, 2000 + trial);
    std::mt19937_64 rng(3000 + trial);
    const int alpha = 1 + static_cast<int>(rng() % 4);
    const int beta = static_cast<int>(rng() % (alpha + 1));

    std::shared_ptr<Matroid> i, iprime;
    if (trial % 3 == 0) {
      auto blocks = rt::random_partition(n, 2 + trial % 2, rng());
      auto caps = rt::random_caps(blocks, alpha, rng());
      auto pi = std::make_shared<PartitionMatroid>(GroundSet(n), blocks, caps);
      auto bcaps = rt::random_caps(blocks, beta, rng(), &caps);
      i = pi;
      iprime = std::make_shared<PartitionMatroid>(GroundSet(n), blocks, bcaps);
    } else {
      i = std::make_shared<UniformMatroid>(GroundSet(n), alpha);
      iprime = std::make_shared<UniformMatroid>(GroundSet(n), beta);
    }

    SolverOutput out = solve_resilient(f, *i, *iprime);
    CHECK(out.a1.set_intersection(out.a2).empty());
    CHECK(i->is_independent(out.a1));
    CHECK(iprime->is_independent(out.a1));
    CHECK(i->is_independent(out.a));
    CHECK(out.eval_count <= evaluation_budget(n));
    CHECK(rt::dominance_holds(f, out.a1, out.a2, *iprime));
  }
}

TEST_CASE("beta = 0 reduces to the classical greedy") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 10;
    SetFunction f = trial % 2 == 0 ? rt::random_coverage(n, 4000 + trial)
                                   : rt::random_modular(n, 5000 + trial);
    std::shared_ptr<Matroid> i;
    if (trial % 2 == 0) {
      auto blocks = rt::random_partition(n, 3, 6000 + trial);
      auto caps = rt::random_caps(blocks, 4, 6500 + trial);
      i = std::make_shared<PartitionMatroid>(GroundSet(n), blocks, caps);
    } else {
      i = std::make_shared<UniformMatroid>(GroundSet(n), 4);
    }
    UniformMatroid none(GroundSet(n), 0);
    SolverOutput out = solve_resilient(f, *i, none);
    CHECK(out.a1.empty());
    CHECK(out.a == greedy_nonresilient(f, *i));
  }
}

TEST_CASE("lazy phase-two matches fresh evaluation for submodular f") {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 9;
    SetFunction f = trial % 2 == 0 ? rt::random_coverage(n, 7000 + trial)
                                   : rt::random_logdet(n, 8000 + trial);
    UniformMatroid i(GroundSet(n), 4);
    UniformMatroid iprime(GroundSet(n), trial % 3);
    SolverOutput fresh = solve_resilient(f, i, iprime);
    SolverOutput lazy = solve_resilient(f, i, iprime, {.lazy_submodular = true});
    CHECK(fresh.a1 == lazy.a1);
    CHECK(fresh.a2 == lazy.a2);
    CHECK(lazy.eval_count <= fresh.eval_count);
  }
}

TEST_CASE("general removal constraints attach a warning") {
  SetFunction f = rt::random_modular(5, 11);
  UniformMatroid i(GroundSet(5), 3);
  TransversalMatroid odd(GroundSet(5), {ElementSet{0, 1}, ElementSet{2, 3, 4}});
  SolverOutput out = solve_resilient(f, i, odd);
  REQUIRE(out.warnings.size() == 1);

  // Partition removal with a different partition also warns.
  PartitionMatroid pi(GroundSet(5), {ElementSet{0, 1}, ElementSet{2, 3, 4}},
                      {1, 1});
  PartitionMatroid other(GroundSet(5), {ElementSet{0, 1, 2}, ElementSet{3, 4}},
                         {1, 1});
  CHECK(solve_resilient(f, pi, other).warnings.size() == 1);
  CHECK(solve_resilient(f, pi, pi).warnings.empty());
}

TEST_CASE("degenerate instances return empty selections") {
  SetFunction f = rt::random_modular(4, 5);
  UniformMatroid zero_rank(GroundSet(4), 0);
  UniformMatroid iprime(GroundSet(4), 1);
  SolverOutput out = solve_resilient(f, zero_rank, iprime);
  CHECK(out.a.empty());

  SetFunction empty_f(GroundSet(0), [](const ElementSet&) { return 0.0; });
  UniformMatroid empty_i(GroundSet(0), 2);
  SolverOutput none = solve_resilient(empty_f, empty_i, empty_i);
  CHECK(none.a.empty());
  CHECK(none.eval_count == 0);
}

TEST_CASE("mismatched ground sets are rejected") {
  SetFunction f = rt::random_modular(4, 5);
  UniformMatroid small(GroundSet(3), 1);
  UniformMatroid ok(GroundSet(4), 1);
  CHECK_THROWS_AS(solve_resilient(f, small, ok), std::invalid_argument);
}

TEST_CASE("coverage instance certifies the uniform submodular bound") {
  SetFunction f =
      make_coverage(GroundSet(4), {{0, 1}, {1, 2}, {0}, {2}});
  UniformMatroid i(GroundSet(4), 3);
  UniformMatroid iprime(GroundSet(4), 1);
  SolverOutput out = solve_resilient(f, i, iprime);

  OracleResult removed = worst_case_removal(f, out.a, iprime);
  OracleResult opt = optimal_resilient(f, i, iprime);
  REQUIRE(opt.value > 0.0);
  const double kappa = *curvature_kappa(f).kappa;
  const double bound = bound_submodular_uniform(kappa, i.rank(), iprime.rank());
  CHECK(removed.value / opt.value >= bound - 1e-9);
}

TEST_CASE("evaluation budget formula") {
  CHECK(evaluation_budget(0) == 0);
  CHECK(evaluation_budget(10) == 200);
  SetFunction f = rt::random_coverage(10, 99);
  UniformMatroid i(GroundSet(10), 5);
  UniformMatroid iprime(GroundSet(10), 2);
  SolverOutput out = solve_resilient(f, i, iprime);
  CHECK(out.eval_count <= 200);
}
