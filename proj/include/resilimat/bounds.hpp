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

#ifndef RESILIMAT_BOUNDS_HPP_
#define RESILIMAT_BOUNDS_HPP_

#include <optional>

namespace resilimat {

/// Rank-dependent factor h(alpha, beta) = max(1/(1+beta), 1/(alpha-beta))
/// for beta < alpha, and 0 once beta >= alpha (the whole selection can be
/// removed).  Requires alpha >= 1.
double h_factor(int alpha, int beta);

/// (1 - e^{-kappa}) / kappa, continuously extended to 1 at kappa = 0.
double curvature_discount(double kappa);

/// Approximation floor for monotone submodular f under a uniform selection
/// matroid: max(1-kappa, h(alpha,beta)) * (1-e^{-kappa})/kappa.
double bound_submodular_uniform(double kappa, int alpha, int beta);

/// Floor for monotone submodular f under any selection matroid:
/// max(1-kappa, h(alpha,beta)) / (1+kappa).
double bound_submodular_matroid(double kappa, int alpha, int beta);

/// Floor for merely monotone f: (1 - c_total)^3.
double bound_monotone(double c_total);

struct BoundInputs {
  int alpha = 1;
  int beta = 0;
  std::optional<double> kappa;
  std::optional<double> c_total;
};

struct BoundReport {
  std::optional<double> submodular_uniform;
  std::optional<double> submodular_matroid;
  std::optional<double> monotone;
};

BoundReport compute_bounds(const BoundInputs& in);

}  // namespace resilimat

#endif  // RESILIMAT_BOUNDS_HPP_
