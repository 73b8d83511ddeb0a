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

#include "resilimat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace resilimat {

namespace {

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

double h_factor(int alpha, int beta) {
  if (alpha < 1) throw std::invalid_argument("h requires alpha >= 1");
  if (beta < 0) throw std::invalid_argument("h requires beta >= 0");
  if (beta >= alpha) return 0.0;
  return std::max(1.0 / (1.0 + beta), 1.0 / (alpha - beta));
}

double curvature_discount(double kappa) {
  require_unit_interval(kappa, "kappa");
  if (kappa < 1e-6) return 1.0 - kappa / 2.0 + kappa * kappa / 6.0;
  return (1.0 - std::exp(-kappa)) / kappa;
}

double bound_submodular_uniform(double kappa, int alpha, int beta) {
  require_unit_interval(kappa, "kappa");
  return std::max(1.0 - kappa, h_factor(alpha, beta)) *
         curvature_discount(kappa);
}

double bound_submodular_matroid(double kappa, int alpha, int beta) {
  require_unit_interval(kappa, "kappa");
  return std::max(1.0 - kappa, h_factor(alpha, beta)) / (1.0 + kappa);
}

double bound_monotone(double c_total) {
  require_unit_interval(c_total, "c_total");
  const double r = 1.0 - c_total;
  return r * r * r;
}

BoundReport compute_bounds(const BoundInputs& in) {
  BoundReport out;
  if (in.kappa) {
    out.submodular_uniform =
        bound_submodular_uniform(*in.kappa, in.alpha, in.beta);
    out.submodular_matroid =
        bound_submodular_matroid(*in.kappa, in.alpha, in.beta);
  }
  if (in.c_total) out.monotone = bound_monotone(*in.c_total);
  return out;
}

}  // namespace resilimat
