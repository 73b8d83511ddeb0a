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

#include "resilimat/json_io.hpp"

#include <cstdlib>
#include <fstream>

namespace resilimat {

namespace {

using nlohmann::json;

ElementSet ids_from_json(const json& j) {
  return ElementSet(j.get<std::vector<ElementId>>());
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  const auto rows = j.size();
  if (rows == 0) return Eigen::MatrixXd();
  const auto cols = j.at(0).size();
  Eigen::MatrixXd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols)
      throw std::invalid_argument("ragged matrix in descriptor");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c);
  }
  return m;
}

}  // namespace

std::shared_ptr<Matroid> matroid_from_json(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "uniform") {
    GroundSet ground(j.at("n").get<int>());
    return std::make_shared<UniformMatroid>(ground, j.at("alpha").get<int>());
  }
  if (kind == "partition") {
    std::vector<ElementSet> blocks;
    int n = 0;
    for (const auto& b : j.at("blocks")) {
      blocks.push_back(ids_from_json(b));
      n += blocks.back().size();
    }
    std::vector<int> caps = j.at("caps").get<std::vector<int>>();
    return std::make_shared<PartitionMatroid>(GroundSet(n), std::move(blocks),
                                              std::move(caps));
  }
  if (kind == "transversal") {
    GroundSet ground(j.at("n").get<int>());
    std::vector<ElementSet> subsets;
    for (const auto& s : j.at("subsets")) subsets.push_back(ids_from_json(s));
    return std::make_shared<TransversalMatroid>(ground, std::move(subsets));
  }
  throw std::invalid_argument("unknown matroid kind: " + kind);
}

SetFunction objective_from_json(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "modular") {
    auto weights = j.at("weights").get<std::vector<double>>();
    GroundSet ground(static_cast<int>(weights.size()));
    return make_modular(ground, std::move(weights));
  }
  if (kind == "coverage") {
    auto sets = j.at("sets").get<std::vector<std::vector<int>>>();
    GroundSet ground(static_cast<int>(sets.size()));
    return make_coverage(ground, std::move(sets));
  }
  if (kind == "logdet") {
    const int dim = j.at("dim").get<int>();
    std::vector<Eigen::MatrixXd> matrices;
    for (const auto& m : j.at("matrices")) {
      matrices.push_back(matrix_from_json(m));
      if (matrices.back().rows() != dim || matrices.back().cols() != dim)
        throw std::invalid_argument("logdet matrix dimension mismatch");
    }
    Eigen::MatrixXd base;
    if (j.at("base").is_string()) {
      if (j.at("base").get<std::string>() != "identity")
        throw std::invalid_argument("base must be \"identity\" or a matrix");
      base = Eigen::MatrixXd::Identity(dim, dim);
    } else {
      base = matrix_from_json(j.at("base"));
    }
    GroundSet ground(static_cast<int>(matrices.size()));
    return make_logdet(ground, std::move(matrices), std::move(base));
  }
  throw std::invalid_argument("unknown objective kind: " + kind);
}

json catalog_to_logdet_json(const std::vector<SensorModel>& catalog) {
  json matrices = json::array();
  int dim = 0;
  for (const auto& s : catalog) {
    dim = static_cast<int>(s.C.cols());
    Eigen::LLT<Eigen::MatrixXd> llt(s.V);
    if (llt.info() != Eigen::Success)
      throw std::invalid_argument("sensor noise must be positive definite");
    Eigen::MatrixXd info =
        s.C.transpose() *
        llt.solve(Eigen::MatrixXd::Identity(s.V.rows(), s.V.cols())) * s.C;
    info = 0.5 * (info + info.transpose());
    json rows = json::array();
    for (Eigen::Index r = 0; r < info.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < info.cols(); ++c) row.push_back(info(r, c));
      rows.push_back(row);
    }
    matrices.push_back(rows);
  }
  return json{{"kind", "logdet"},
              {"dim", dim},
              {"matrices", matrices},
              {"base", "identity"}};
}

ExperimentConfig experiment_config_from_json(const json& j) {
  ExperimentConfig config;
  if (j.contains("alphas")) config.alphas = j.at("alphas").get<std::vector<int>>();
  if (j.contains("betas")) config.betas = j.at("betas").get<std::vector<int>>();
  if (j.contains("runs")) config.runs = j.at("runs").get<int>();
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("rollouts")) config.rollouts = j.at("rollouts").get<int>();
  if (j.contains("guard"))
    config.oracle_guard = j.at("guard").get<std::uint64_t>();
  if (j.contains("threads")) config.threads = j.at("threads").get<int>();
  if (j.contains("out")) config.out_csv = j.at("out").get<std::string>();
  if (j.contains("scenario")) {
    const json& s = j.at("scenario");
    if (s.contains("T")) config.scenario_horizon = s.at("T").get<int>();
    if (s.contains("dt")) config.scenario_dt = s.at("dt").get<double>();
    if (s.contains("n_ground"))
      config.n_ground_sensors = s.at("n_ground").get<int>();
    if (s.contains("seed"))
      config.scenario_seed = s.at("seed").get<std::uint64_t>();
  }
  if (const char* env = std::getenv("RESILIMAT_ORACLE_GUARD")) {
    config.oracle_guard = std::strtoull(env, nullptr, 10);
  }
  config.validate();
  return config;
}

json to_json(const ElementSet& s) { return json(s.ids()); }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace resilimat
