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

#include "resilimat/lqg.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace resilimat {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Symmetrizes, and projects onto the PSD cone only when the asymmetry is
// beyond arithmetic noise.
MatrixXd symmetrized(const MatrixXd& m) {
  MatrixXd sym = 0.5 * (m + m.transpose());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(sym);
    VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    sym = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
  }
  return sym;
}

void require_psd(const MatrixXd& m, const char* what) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(what) + " must be square");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument(std::string(what) + " must be symmetric");
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument(std::string(what) +
                                " must be positive semi-definite");
}

MatrixXd psd_sqrt(const MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

MatrixXd spd_inverse(const MatrixXd& m, const char* what) {
  Eigen::LLT<MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw std::domain_error(std::string(what) + " is not invertible");
  return llt.solve(MatrixXd::Identity(m.rows(), m.cols()));
}

// Stacked measurement model of an active sensor set.
struct StackedSensors {
  MatrixXd C;  // (sum k_i) x d
  MatrixXd V;  // block diagonal
  bool empty() const { return C.rows() == 0; }
};

StackedSensors stack_sensors(const std::vector<SensorModel>& active, int d) {
  Eigen::Index rows = 0;
  for (const auto& s : active) rows += s.C.rows();
  StackedSensors out;
  out.C = MatrixXd::Zero(rows, d);
  out.V = MatrixXd::Zero(rows, rows);
  Eigen::Index at = 0;
  for (const auto& s : active) {
    if (s.C.cols() != d)
      throw std::invalid_argument("sensor C must have state_dim columns");
    out.C.middleRows(at, s.C.rows()) = s.C;
    out.V.block(at, at, s.V.rows(), s.V.cols()) = s.V;
    at += s.C.rows();
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Stateless Gaussian draw keyed by (rollout key, step, slot).  Keeps noise
// streams aligned per sensor id across different active sets, so a shared
// simulation seed acts as common random numbers for selector comparisons.
double keyed_normal(std::uint64_t rollout_key, int step, int slot) {
  const std::uint64_t key = splitmix64(
      splitmix64(rollout_key ^ (0xbf58476d1ce4e5b9ull * (step + 1))) +
      static_cast<std::uint64_t>(slot));
  constexpr double kTwoPi = 6.283185307179586;
  const double u1 =
      1.0 - (splitmix64(key ^ 0xd1b54a32d192ed03ull) >> 11) * 0x1.0p-53;
  const double u2 = (splitmix64(key ^ 0x2545f4914f6cdd1dull) >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

}  // namespace

void LinearSystem::validate() const {
  const int d = state_dim();
  if (A.cols() != d) throw std::invalid_argument("A must be square");
  if (B.rows() != d) throw std::invalid_argument("B rows must match A");
  if (W.rows() != d || W.cols() != d)
    throw std::invalid_argument("W must be d x d");
  if (x0_mean.size() != d || x0_cov.rows() != d || x0_cov.cols() != d)
    throw std::invalid_argument("initial distribution dimension mismatch");
  require_psd(W, "W");
  require_psd(x0_cov, "x0_cov");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
}

LqgWeights riccati_backward(const LinearSystem& sys, Eigen::MatrixXd Q,
                            Eigen::MatrixXd R) {
  sys.validate();
  const int d = sys.state_dim();
  const int m = sys.input_dim();
  if (Q.rows() != d || Q.cols() != d)
    throw std::invalid_argument("Q must be d x d");
  if (R.rows() != m || R.cols() != m)
    throw std::invalid_argument("R must be m x m");
  require_psd(Q, "Q");
  {
    Eigen::LLT<MatrixXd> llt(R);
    if (llt.info() != Eigen::Success)
      throw std::invalid_argument("R must be positive definite");
  }

  const int T = sys.horizon;
  LqgWeights w;
  w.Q = Q;
  w.R = R;
  w.S.assign(T + 1, MatrixXd());
  w.K.assign(T, MatrixXd());
  w.M.assign(T, MatrixXd());
  w.S[T] = Q;  // S_{T+1}
  for (int t = T; t >= 1; --t) {
    const MatrixXd& S_next = w.S[t];
    const MatrixXd gamma = R + sys.B.transpose() * S_next * sys.B;
    Eigen::LLT<MatrixXd> llt(gamma);
    if (llt.info() != Eigen::Success)
      throw std::domain_error("Riccati gain system singular");
    const MatrixXd K = llt.solve(sys.B.transpose() * S_next * sys.A);
    w.K[t - 1] = K;
    w.M[t - 1] = symmetrized(K.transpose() * gamma * K);
    // Joseph form keeps S_t symmetric PSD through the recursion.
    const MatrixXd closed = sys.A - sys.B * K;
    w.S[t - 1] = symmetrized(Q + K.transpose() * R * K +
                             closed.transpose() * S_next * closed);
  }
  return w;
}

std::vector<Eigen::MatrixXd> kalman_covariance(
    const LinearSystem& sys, const std::vector<SensorModel>& active, int T) {
  const int d = sys.state_dim();
  StackedSensors stacked = stack_sensors(active, d);
  MatrixXd info_gain;  // sum_i C_i' V_i^{-1} C_i
  if (!stacked.empty()) {
    const MatrixXd v_inv = spd_inverse(stacked.V, "sensor noise");
    info_gain = symmetrized(stacked.C.transpose() * v_inv * stacked.C);
  }

  std::vector<MatrixXd> out;
  out.reserve(T);
  MatrixXd cov = sys.x0_cov;  // Σ_{0|0}
  for (int t = 1; t <= T; ++t) {
    MatrixXd predicted =
        symmetrized(sys.A * cov * sys.A.transpose() + sys.W);
    if (stacked.empty()) {
      cov = predicted;
    } else {
      const MatrixXd info = spd_inverse(predicted, "predicted covariance");
      cov = symmetrized(spd_inverse(info + info_gain, "posterior information"));
    }
    out.push_back(cov);
  }
  return out;
}

double lqg_sensing_cost(const LinearSystem& sys, const LqgWeights& weights,
                        const std::vector<SensorModel>& active) {
  const int T = sys.horizon;
  if (static_cast<int>(weights.M.size()) != T)
    throw std::invalid_argument("weights horizon mismatch");
  std::vector<MatrixXd> cov = kalman_covariance(sys, active, T);
  double total = 0.0;
  for (int t = 0; t < T; ++t) total += (weights.M[t] * cov[t]).trace();
  return total;
}

SetFunction sensor_selection_objective(
    const LinearSystem& sys, const LqgWeights& weights,
    const std::vector<SensorModel>& catalog) {
  std::vector<std::string> labels;
  labels.reserve(catalog.size());
  for (const auto& s : catalog) labels.push_back("sensor" + std::to_string(s.id));
  GroundSet ground(static_cast<int>(catalog.size()), std::move(labels));

  const double cost_empty = lqg_sensing_cost(sys, weights, {});
  return SetFunction(
      ground,
      [sys, weights, catalog, cost_empty](const ElementSet& s) {
        std::vector<SensorModel> active;
        active.reserve(s.size());
        for (ElementId id : s) active.push_back(catalog[id]);
        return cost_empty - lqg_sensing_cost(sys, weights, active);
      },
      "lqg-reward");
}

double simulate_closed_loop_cost(const LinearSystem& sys,
                                 const LqgWeights& weights,
                                 const std::vector<SensorModel>& active,
                                 int rollouts, std::uint64_t seed) {
  if (rollouts < 1) throw std::invalid_argument("rollouts must be >= 1");
  const int d = sys.state_dim();
  const int T = sys.horizon;
  StackedSensors stacked = stack_sensors(active, d);

  const MatrixXd sqrt_w = psd_sqrt(sys.W);
  const MatrixXd sqrt_x0 = psd_sqrt(sys.x0_cov);

  // The filter covariance path does not depend on the measurements, so the
  // gains can be precomputed once (gain form; handles singular covariances).
  std::vector<MatrixXd> gains(T);
  std::vector<MatrixXd> predicted_sigma(T);
  {
    MatrixXd cov = sys.x0_cov;
    for (int t = 0; t < T; ++t) {
      MatrixXd predicted =
          symmetrized(sys.A * cov * sys.A.transpose() + sys.W);
      predicted_sigma[t] = predicted;
      if (stacked.empty()) {
        cov = predicted;
        continue;
      }
      const MatrixXd innovation =
          stacked.C * predicted * stacked.C.transpose() + stacked.V;
      Eigen::LLT<MatrixXd> llt(innovation);
      if (llt.info() != Eigen::Success)
        throw std::domain_error("innovation covariance singular");
      gains[t] =
          predicted * stacked.C.transpose() * llt.solve(MatrixXd::Identity(
                                                  innovation.rows(),
                                                  innovation.rows()));
      const MatrixXd closed =
          MatrixXd::Identity(d, d) - gains[t] * stacked.C;
      cov = symmetrized(closed * predicted * closed.transpose() +
                        gains[t] * stacked.V * gains[t].transpose());
    }
  }

  // Per-sensor noise shapers for the stacked measurement vector.
  std::vector<MatrixXd> sensor_sqrt_v;
  sensor_sqrt_v.reserve(active.size());
  for (const auto& s : active) sensor_sqrt_v.push_back(psd_sqrt(s.V));

  // Noise stream slots: 0..d-1 plant, 64 + 8*id + row measurement.
  constexpr int kMeasSlotBase = 64;
  for (const auto& s : active)
    if (kMeasSlotBase + 8 * s.id + s.C.rows() > 8 * 64)
      throw std::invalid_argument("sensor id too large for noise streams");

  double total = 0.0;
  for (int r = 0; r < rollouts; ++r) {
    const std::uint64_t rollout_key =
        splitmix64(seed + 0x9e3779b97f4a7c15ull * (r + 1));
    auto draw_plant = [&](int step) {
      VectorXd z(d);
      for (int j = 0; j < d; ++j) z(j) = keyed_normal(rollout_key, step, j);
      return z;
    };

    VectorXd x = sys.x0_mean + sqrt_x0 * draw_plant(0);
    VectorXd xhat = sys.x0_mean;
    VectorXd u = VectorXd::Zero(sys.input_dim());  // no control before t = 1
    double cost = 0.0;
    for (int t = 1; t <= T; ++t) {
      x = sys.A * x + sys.B * u + sqrt_w * draw_plant(t);
      VectorXd xhat_pred = sys.A * xhat + sys.B * u;
      if (!stacked.empty()) {
        VectorXd noise(stacked.C.rows());
        Eigen::Index at = 0;
        for (std::size_t i = 0; i < active.size(); ++i) {
          const Eigen::Index k = active[i].C.rows();
          VectorXd z(k);
          for (Eigen::Index row = 0; row < k; ++row)
            z(row) = keyed_normal(
                rollout_key, t,
                kMeasSlotBase + 8 * active[i].id + static_cast<int>(row));
          noise.segment(at, k) = sensor_sqrt_v[i] * z;
          at += k;
        }
        const VectorXd y = stacked.C * x + noise;
        xhat = xhat_pred + gains[t - 1] * (y - stacked.C * xhat_pred);
      } else {
        xhat = xhat_pred;
      }
      u = -weights.K[t - 1] * xhat;
      cost += x.dot(weights.Q * x) + u.dot(weights.R * u);
    }
    total += cost;
  }
  return total / rollouts;
}

Scenario build_scenario(std::uint64_t seed, int T, double dt, int n_ground) {
  if (T < 1) throw std::invalid_argument("horizon must be >= 1");
  if (n_ground < 0) throw std::invalid_argument("n_ground must be >= 0");
  const int d = 6;

  Scenario sc;
  sc.sys.A = MatrixXd::Identity(d, d);
  sc.sys.A.block(0, 3, 3, 3) = dt * MatrixXd::Identity(3, 3);
  sc.sys.B = MatrixXd::Zero(d, 3);
  sc.sys.B.block(0, 0, 3, 3) = 0.5 * dt * dt * MatrixXd::Identity(3, 3);
  sc.sys.B.block(3, 0, 3, 3) = dt * MatrixXd::Identity(3, 3);
  sc.sys.W = MatrixXd::Identity(d, d);
  sc.sys.x0_cov = MatrixXd::Identity(d, d);
  sc.sys.horizon = T;

  VectorXd q_diag(d);
  q_diag << 1e-3, 1e-3, 10.0, 1e-3, 1e-3, 10.0;
  sc.Q = q_diag.asDiagonal();
  sc.R = MatrixXd::Identity(3, 3);

  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> landing(-10.0, 10.0);

  SensorModel gps;
  gps.id = 0;
  gps.C = MatrixXd::Zero(3, d);
  gps.C.block(0, 0, 3, 3) = MatrixXd::Identity(3, 3);
  gps.V = 2.0 * MatrixXd::Identity(3, 3);
  sc.catalog.push_back(gps);

  SensorModel altimeter;
  altimeter.id = 1;
  altimeter.C = MatrixXd::Zero(1, d);
  altimeter.C(0, 2) = 1.0;        // altitude component of the position
  altimeter.V = MatrixXd::Constant(1, 1, 0.25);  // std dev 0.5 m
  sc.catalog.push_back(altimeter);

  // Each ground station reads three random linear functionals of the state.
  constexpr int kGroundRows = 3;
  for (int g = 0; g < n_ground; ++g) {
    SensorModel s;
    s.id = 2 + g;
    s.C = MatrixXd::Zero(kGroundRows, d);
    for (int r = 0; r < kGroundRows; ++r)
      for (int j = 0; j < d; ++j) s.C(r, j) = gauss(rng);
    s.V = MatrixXd::Identity(kGroundRows, kGroundRows);
    sc.catalog.push_back(s);
  }

  sc.sys.x0_mean = VectorXd::Zero(d);
  for (int j = 0; j < 3; ++j) sc.sys.x0_mean(j) = landing(rng);

  return sc;
}

Scenario build_paper_scenario(std::uint64_t seed) {
  return build_scenario(seed, /*T=*/20, /*dt=*/1.0, /*n_ground=*/12);
}

}  // namespace resilimat
