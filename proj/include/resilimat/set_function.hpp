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

#ifndef RESILIMAT_SET_FUNCTION_HPP_
#define RESILIMAT_SET_FUNCTION_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "resilimat/sets.hpp"

namespace resilimat {

/// Evaluation oracle for a set function f with call counting and the
/// f(∅) = 0 normalization applied at construction time.  Values are expected
/// non-negative; anything below -1e-9 after normalization is a contract
/// error, smaller negative noise is clamped to zero.
class SetFunction {
 public:
  using Evaluator = std::function<double(const ElementSet&)>;

  SetFunction(GroundSet ground, Evaluator evaluator, std::string name = "f");

  double evaluate(const ElementSet& s) const;
  double operator()(const ElementSet& s) const { return evaluate(s); }

  const GroundSet& ground() const { return ground_; }
  const std::string& name() const { return name_; }
  std::uint64_t eval_count() const { return state_->count.load(); }

 private:
  GroundSet ground_;
  std::string name_;
  struct State {
    Evaluator evaluator;
    double offset = 0.0;
    std::atomic<std::uint64_t> count{0};
  };
  std::shared_ptr<State> state_;
};

/// f(x | y) = f(x ∪ y) - f(y); two evaluator calls.
double marginal(const SetFunction& f, const ElementSet& x,
                const ElementSet& y);

/// Memoizing front-end keyed by subset bit mask (ground size < 64); bounded
/// to 2^20 entries.  Per-operation scratch, not shared between threads.
class MemoizedEval {
 public:
  explicit MemoizedEval(const SetFunction& f, std::size_t capacity = 1u << 20);
  double operator()(std::uint64_t mask);
  double operator()(const ElementSet& s) { return (*this)(s.mask()); }
  std::size_t size() const { return memo_.size(); }

 private:
  const SetFunction& f_;
  std::size_t capacity_;
  std::unordered_map<std::uint64_t, double> memo_;
};

/// Wraps `f` behind a shared memo so that repeated queries of the same
/// subset cost a single underlying evaluation.  The returned function's
/// eval counter counts lookups (what an algorithm consumes), while `f`'s
/// counter keeps counting real evaluator calls.
SetFunction memoized(const SetFunction& f);

struct CurvatureReport {
  std::optional<double> kappa;    // curvature of a monotone submodular f
  std::optional<double> c_total;  // total curvature, exact mode only
  enum class Mode { kExact, kUnavailable } mode = Mode::kExact;
  // Witnesses attaining the defining minimum.
  std::optional<ElementId> witness_v;
  std::optional<ElementSet> witness_a;
  std::optional<ElementSet> witness_b;
  std::vector<std::string> warnings;
};

/// Curvature of a monotone submodular f:
///   kappa = 1 - min_v [f(V) - f(V \ {v})] / f(v),
/// over singletons with f(v) != 0 (zero singletons are excluded with a
/// warning; all-zero is an error).  Costs exactly 2|V|+1 distinct
/// evaluations on a fresh memo.
CurvatureReport curvature_kappa(const SetFunction& f);

/// Total curvature of a monotone f by exhaustive enumeration:
///   c = 1 - min_{v} min_{A,B ⊆ V\{v}} [f({v}∪A)-f(A)] / [f({v}∪B)-f(B)].
/// Pairs with zero denominator are skipped (0/0 uninformative, x/0 cannot
/// attain the minimum).  Refuses |V| > limit.
CurvatureReport total_curvature_exact(const SetFunction& f, int limit = 10);

struct StructureReport {
  bool ok = true;
  // Counterexample in the definitions' terms: sets a ⊆ aprime and the
  // element whose marginal violates the property.
  std::optional<ElementSet> a;
  std::optional<ElementSet> aprime;
  std::optional<ElementId> v;
  std::string message;
};

StructureReport check_monotone(const SetFunction& f, int limit = 10,
                               double tol = 1e-9);
StructureReport check_submodular(const SetFunction& f, int limit = 10,
                                 double tol = 1e-9);

// ---------------------------------------------------------------------------
// Built-in objective families.  All are normalized (f(∅) = 0) and monotone;
// logdet and concave-over-modular are submodular.

SetFunction make_modular(GroundSet ground, std::vector<double> weights);

/// f(S) = |union of covers[i] for i in S| over an integer item universe.
SetFunction make_coverage(GroundSet ground,
                          std::vector<std::vector<int>> covers);

/// f(S) = logdet(base + sum_{i in S} M_i) - logdet(base); M_i PSD, base PD.
SetFunction make_logdet(GroundSet ground,
                        std::vector<Eigen::MatrixXd> matrices,
                        Eigen::MatrixXd base);

enum class Concave { kSqrt, kLog1p };

/// f(S) = g(sum_{i in S} w_i) for a concave g with g(0) = 0.
SetFunction make_concave_over_modular(GroundSet ground,
                                      std::vector<double> weights,
                                      Concave shape);

}  // namespace resilimat

#endif  // RESILIMAT_SET_FUNCTION_HPP_
