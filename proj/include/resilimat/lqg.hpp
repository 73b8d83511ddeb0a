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

#ifndef RESILIMAT_LQG_HPP_
#define RESILIMAT_LQG_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "resilimat/set_function.hpp"

namespace resilimat {

/// Discrete-time LTI plant x_{t+1} = A x_t + B u_t + w_t with Gaussian
/// process noise w ~ N(0, W) and initial state x_0 ~ N(x0_mean, x0_cov).
struct LinearSystem {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::MatrixXd W;
  Eigen::VectorXd x0_mean;
  Eigen::MatrixXd x0_cov;
  int horizon = 1;

  int state_dim() const { return static_cast<int>(A.rows()); }
  int input_dim() const { return static_cast<int>(B.cols()); }
  void validate() const;
};

/// Linear sensor y = C x + v with v ~ N(0, V), V positive definite.
struct SensorModel {
  int id = 0;
  Eigen::MatrixXd C;
  Eigen::MatrixXd V;
};

/// Backward-Riccati products for the quadratic cost
/// sum_{t=1..T} x_t' Q x_t + u_t' R u_t: per-step cost-to-go S_t, feedback
/// gains K_t and the sensing weights M_t = K_t' (R + B' S_{t+1} B) K_t.
/// Index t runs 1..T; vectors are stored 0-based (entry t-1).
struct LqgWeights {
  Eigen::MatrixXd Q;
  Eigen::MatrixXd R;
  std::vector<Eigen::MatrixXd> S;  // S[t-1] = S_t, plus S[T] = S_{T+1} = Q
  std::vector<Eigen::MatrixXd> K;
  std::vector<Eigen::MatrixXd> M;
};

LqgWeights riccati_backward(const LinearSystem& sys, Eigen::MatrixXd Q,
                            Eigen::MatrixXd R);

/// Kalman filtered covariances Σ_{t|t} for t = 1..T under the given active
/// sensor set, via the information-form update
/// Σ_{t|t} = (Σ_{t|t-1}^{-1} + Σ_i C_i' V_i^{-1} C_i)^{-1}.
/// An empty sensor set degenerates to pure prediction.
std::vector<Eigen::MatrixXd> kalman_covariance(
    const LinearSystem& sys, const std::vector<SensorModel>& active, int T);

/// The sensing-dependent part of the expected LQG cost,
/// J(S) = sum_t trace(M_t Σ_{t|t}(S)).
double lqg_sensing_cost(const LinearSystem& sys, const LqgWeights& weights,
                        const std::vector<SensorModel>& active);

/// Reward-form selection objective f(S) = J(∅) - J(S) over a sensor catalog:
/// normalized, monotone, and argmax-equivalent to minimizing J.
SetFunction sensor_selection_objective(const LinearSystem& sys,
                                       const LqgWeights& weights,
                                       const std::vector<SensorModel>& catalog);

/// Monte Carlo average of the realized quadratic cost over seeded rollouts
/// with u_t = -K_t x_hat_{t|t}.  Deterministic per seed; the plant noise
/// stream is separate from the measurement stream, so one seed drives the
/// same disturbance path under every sensor selection.
double simulate_closed_loop_cost(const LinearSystem& sys,
                                 const LqgWeights& weights,
                                 const std::vector<SensorModel>& active,
                                 int rollouts, std::uint64_t seed);

struct Scenario {
  LinearSystem sys;
  std::vector<SensorModel> catalog;
  Eigen::MatrixXd Q;
  Eigen::MatrixXd R;
};

/// UAV landing scenario: 3D double integrator (dt-discretized), W = I6,
/// a GPS receiver and an altimeter on board plus `n_ground` random linear
/// ground sensors, Q = diag(1e-3, 1e-3, 10, 1e-3, 1e-3, 10), R = I3.
Scenario build_scenario(std::uint64_t seed, int T, double dt, int n_ground);
Scenario build_paper_scenario(std::uint64_t seed);

}  // namespace resilimat

#endif  // RESILIMAT_LQG_HPP_
