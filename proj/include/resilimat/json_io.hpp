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

#ifndef RESILIMAT_JSON_IO_HPP_
#define RESILIMAT_JSON_IO_HPP_

#include <memory>
#include <string>

#include <json.hpp>

#include "resilimat/harness.hpp"
#include "resilimat/matroid.hpp"
#include "resilimat/set_function.hpp"

namespace resilimat {

// Matroid descriptors:
//   {"kind":"uniform","n":14,"alpha":5}
//   {"kind":"partition","blocks":[[0,1],[2,3,4]],"caps":[1,2]}
//   {"kind":"transversal","n":5,"subsets":[[0,1],[1,2]]}
std::shared_ptr<Matroid> matroid_from_json(const nlohmann::json& j);

// Objective descriptors:
//   {"kind":"modular","weights":[...]}
//   {"kind":"coverage","sets":[[...],...]}
//   {"kind":"logdet","dim":d,"matrices":[[[...],...],...],"base":"identity"}
SetFunction objective_from_json(const nlohmann::json& j);

// Per-sensor information matrices C' V^-1 C as a logdet descriptor, so the
// generic solver can consume a sensor catalog unchanged.
nlohmann::json catalog_to_logdet_json(const std::vector<SensorModel>& catalog);

// Experiment configuration; every field optional, defaults as in
// ExperimentConfig.  Scenario parameters live under "scenario":
//   {"seed":1,"runs":20,"scenario":{"T":20,"dt":1.0,"n_ground":12}}
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ElementSet& s);
nlohmann::json load_json_file(const std::string& path);

}  // namespace resilimat

#endif  // RESILIMAT_JSON_IO_HPP_
