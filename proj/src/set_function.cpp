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

#include "resilimat/set_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace resilimat {

namespace {
constexpr double kNegativeTolerance = 1e-9;
}

SetFunction::SetFunction(GroundSet ground, Evaluator evaluator,
                         std::string name)
    : ground_(std::move(ground)), name_(std::move(name)),
      state_(std::make_shared<State>()) {
  if (!evaluator) throw std::invalid_argument("evaluator must be callable");
  state_->evaluator = std::move(evaluator);
  state_->offset = state_->evaluator(ElementSet{});
  if (!std::isfinite(state_->offset))
    throw std::domain_error("f(∅) is not finite");
}

double SetFunction::evaluate(const ElementSet& s) const {
  if (s.max_id() >= ground_.size())
    throw std::invalid_argument("subset not drawn over f's ground set");
  double v = state_->evaluator(s) - state_->offset;
  state_->count.fetch_add(1, std::memory_order_relaxed);
  if (std::isnan(v)) throw std::domain_error(name_ + " evaluated to NaN");
  if (v < -kNegativeTolerance)
    throw std::domain_error(name_ + " negative after normalization: " +
                            std::to_string(v));
  return std::max(v, 0.0);
}

double marginal(const SetFunction& f, const ElementSet& x,
                const ElementSet& y) {
  return f(x.set_union(y)) - f(y);
}

MemoizedEval::MemoizedEval(const SetFunction& f, std::size_t capacity)
    : f_(f), capacity_(capacity) {}

double MemoizedEval::operator()(std::uint64_t mask) {
  auto it = memo_.find(mask);
  if (it != memo_.end()) return it->second;
  double v = f_(ElementSet::from_mask(mask));
  if (memo_.size() < capacity_) memo_.emplace(mask, v);
  return v;
}

SetFunction memoized(const SetFunction& f) {
  // Keeps its own copy of f alive next to the memo (SetFunction state is
  // shared, so the copy still drives the same eval counter).
  struct Shared {
    explicit Shared(SetFunction fn) : inner(std::move(fn)), memo(inner) {}
    SetFunction inner;
    MemoizedEval memo;
  };
  auto shared = std::make_shared<Shared>(f);
  return SetFunction(
      f.ground(), [shared](const ElementSet& s) { return shared->memo(s); },
      f.name() + "(memo)");
}

CurvatureReport curvature_kappa(const SetFunction& f) {
  const int n = f.ground().size();
  CurvatureReport report;
  if (n == 0) throw std::domain_error("curvature undefined on empty ground");

  const ElementSet full = ElementSet::full(n);
  const double f_full = f(full);

  double best = std::numeric_limits<double>::infinity();
  int best_v = -1;
  int skipped = 0;
  for (ElementId v = 0; v < n; ++v) {
    const double f_single = f(ElementSet{v});
    const double drop = f_full - f(full.without(v));
    if (f_single == 0.0) {
      ++skipped;
      continue;
    }
    const double ratio = drop / f_single;
    if (ratio < best) {
      best = ratio;
      best_v = v;
    }
  }
  if (best_v == -1)
    throw std::domain_error("curvature undefined: all singleton values zero");
  if (skipped > 0)
    report.warnings.push_back(std::to_string(skipped) +
                              " zero-valued singleton(s) excluded");

  report.kappa = std::clamp(1.0 - best, 0.0, 1.0);
  report.witness_v = best_v;
  return report;
}

CurvatureReport total_curvature_exact(const SetFunction& f, int limit) {
  const int n = f.ground().size();
  CurvatureReport report;
  if (n == 0) throw std::domain_error("curvature undefined on empty ground");
  if (n > limit) {
    report.mode = CurvatureReport::Mode::kUnavailable;
    throw guard_error("total curvature refuses |V| > " +
                      std::to_string(limit));
  }

  StructureReport mono = check_monotone(f, limit);
  if (!mono.ok)
    throw std::domain_error("total curvature requires a monotone function");

  MemoizedEval memo(f);
  const std::uint64_t total = std::uint64_t{1} << n;

  double best_ratio = std::numeric_limits<double>::infinity();
  int best_v = -1;
  std::uint64_t best_a = 0, best_b = 0;

  for (ElementId v = 0; v < n; ++v) {
    const std::uint64_t vbit = std::uint64_t{1} << v;
    // Minimum ratio for fixed v equals (min numerator) / (max positive
    // denominator); pairs with zero denominator are skipped by convention.
    double min_num = std::numeric_limits<double>::infinity();
    std::uint64_t min_num_a = 0;
    double max_den = 0.0;
    std::uint64_t max_den_b = 0;
    bool have_den = false;
    for (std::uint64_t m = 0; m < total; ++m) {
      if (m & vbit) continue;
      const double gain = std::max(memo(m | vbit) - memo(m), 0.0);
      if (gain < min_num) {
        min_num = gain;
        min_num_a = m;
      }
      if (gain > 0.0 && (!have_den || gain > max_den)) {
        max_den = gain;
        max_den_b = m;
        have_den = true;
      }
    }
    if (!have_den) continue;  // every pair for this v is 0/0 or x/0
    const double ratio = min_num / max_den;
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best_v = v;
      best_a = min_num_a;
      best_b = max_den_b;
    }
  }

  if (best_v == -1)
    throw std::domain_error(
        "total curvature undefined: no positive marginal found");

  report.c_total = std::clamp(1.0 - best_ratio, 0.0, 1.0);
  report.witness_v = best_v;
  report.witness_a = ElementSet::from_mask(best_a);
  report.witness_b = ElementSet::from_mask(best_b);
  return report;
}

StructureReport check_monotone(const SetFunction& f, int limit, double tol) {
  const int n = f.ground().size();
  if (n > limit)
    throw guard_error("monotonicity check refuses |V| > " +
                      std::to_string(limit));
  MemoizedEval memo(f);
  const std::uint64_t total = std::uint64_t{1} << n;
  StructureReport report;
  for (std::uint64_t m = 0; m < total; ++m) {
    for (int v = 0; v < n; ++v) {
      const std::uint64_t vbit = std::uint64_t{1} << v;
      if (m & vbit) continue;
      if (memo(m | vbit) < memo(m) - tol) {
        report.ok = false;
        report.a = ElementSet::from_mask(m);
        report.aprime = ElementSet::from_mask(m | vbit);
        report.v = v;
        report.message = "monotonicity violated";
        return report;
      }
    }
  }
  return report;
}

StructureReport check_submodular(const SetFunction& f, int limit, double tol) {
  const int n = f.ground().size();
  if (n > limit)
    throw guard_error("submodularity check refuses |V| > " +
                      std::to_string(limit));
  MemoizedEval memo(f);
  const std::uint64_t total = std::uint64_t{1} << n;
  StructureReport report;
  // Diminishing returns over all (A ⊆ A', v ∉ A').
  for (std::uint64_t sup = 0; sup < total; ++sup) {
    for (std::uint64_t sub = sup;; sub = (sub - 1) & sup) {
      for (int v = 0; v < n; ++v) {
        const std::uint64_t vbit = std::uint64_t{1} << v;
        if (sup & vbit) continue;
        const double gain_small = memo(sub | vbit) - memo(sub);
        const double gain_large = memo(sup | vbit) - memo(sup);
        if (gain_small < gain_large - tol) {
          report.ok = false;
          report.a = ElementSet::from_mask(sub);
          report.aprime = ElementSet::from_mask(sup);
          report.v = v;
          report.message = "diminishing returns violated";
          return report;
        }
      }
      if (sub == 0) break;
    }
  }
  return report;
}

SetFunction make_modular(GroundSet ground, std::vector<double> weights) {
  if (static_cast<int>(weights.size()) != ground.size())
    throw std::invalid_argument("one weight per element required");
  for (double w : weights)
    if (!(w >= 0.0)) throw std::invalid_argument("weights must be >= 0");
  return SetFunction(
      ground,
      [weights = std::move(weights)](const ElementSet& s) {
        double sum = 0.0;
        for (ElementId id : s) sum += weights[id];
        return sum;
      },
      "modular");
}

SetFunction make_coverage(GroundSet ground,
                          std::vector<std::vector<int>> covers) {
  if (static_cast<int>(covers.size()) != ground.size())
    throw std::invalid_argument("one covered set per element required");
  int max_item = -1;
  for (const auto& c : covers)
    for (int item : c) {
      if (item < 0) throw std::invalid_argument("universe items must be >= 0");
      max_item = std::max(max_item, item);
    }
  const int universe = max_item + 1;
  return SetFunction(
      ground,
      [covers = std::move(covers), universe](const ElementSet& s) {
        std::vector<char> hit(universe, 0);
        int count = 0;
        for (ElementId id : s)
          for (int item : covers[id])
            if (!hit[item]) {
              hit[item] = 1;
              ++count;
            }
        return static_cast<double>(count);
      },
      "coverage");
}

namespace {

double logdet_spd(const Eigen::MatrixXd& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("matrix not positive definite in logdet");
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

void require_psd(const Eigen::MatrixXd& m, const std::string& what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(what + " not square");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument(what + " not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument(what + " not positive semi-definite");
}

}  // namespace

SetFunction make_logdet(GroundSet ground,
                        std::vector<Eigen::MatrixXd> matrices,
                        Eigen::MatrixXd base) {
  if (static_cast<int>(matrices.size()) != ground.size())
    throw std::invalid_argument("one matrix per element required");
  const auto d = base.rows();
  require_psd(base, "base");
  {
    Eigen::LLT<Eigen::MatrixXd> llt(base);
    if (llt.info() != Eigen::Success)
      throw std::invalid_argument("base must be positive definite");
  }
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (matrices[i].rows() != d || matrices[i].cols() != d)
      throw std::invalid_argument("matrix dimensions must match base");
    require_psd(matrices[i], "matrix " + std::to_string(i));
  }
  const double base_logdet = logdet_spd(base);
  return SetFunction(
      ground,
      [matrices = std::move(matrices), base = std::move(base),
       base_logdet](const ElementSet& s) {
        Eigen::MatrixXd sum = base;
        for (ElementId id : s) sum += matrices[id];
        return logdet_spd(sum) - base_logdet;
      },
      "logdet");
}

SetFunction make_concave_over_modular(GroundSet ground,
                                      std::vector<double> weights,
                                      Concave shape) {
  if (static_cast<int>(weights.size()) != ground.size())
    throw std::invalid_argument("one weight per element required");
  for (double w : weights)
    if (!(w >= 0.0)) throw std::invalid_argument("weights must be >= 0");
  auto g = [shape](double x) {
    switch (shape) {
      case Concave::kSqrt:
        return std::sqrt(x);
      case Concave::kLog1p:
        return std::log1p(x);
    }
    return x;
  };
  return SetFunction(
      ground,
      [weights = std::move(weights), g](const ElementSet& s) {
        double sum = 0.0;
        for (ElementId id : s) sum += weights[id];
        return g(sum);
      },
      "concave-over-modular");
}

}  // namespace resilimat
