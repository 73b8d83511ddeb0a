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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "resilimat/bounds.hpp"
#include "resilimat/exact_oracles.hpp"
#include "resilimat/harness.hpp"
#include "resilimat/json_io.hpp"
#include "resilimat/solver.hpp"

namespace {

using nlohmann::json;
using namespace resilimat;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;

OracleGuards guards_from_env(int max_ground) {
  OracleGuards g;
  g.max_ground = max_ground;
  if (const char* env = std::getenv("RESILIMAT_ORACLE_GUARD"))
    g.max_candidates = std::strtoull(env, nullptr, 10);
  return g;
}

int cmd_solve(const std::string& objective_path, const std::string& matroid_path,
              const std::string& removal_path, const std::string& out_path,
              bool certify, int max_ground) {
  SetFunction f = objective_from_json(load_json_file(objective_path));
  auto i = matroid_from_json(load_json_file(matroid_path));
  auto iprime = matroid_from_json(load_json_file(removal_path));

  SolverOutput out = solve_resilient(f, *i, *iprime);
  json result{{"a1", to_json(out.a1)},
              {"a2", to_json(out.a2)},
              {"a", to_json(out.a)},
              {"eval_count", out.eval_count},
              {"warnings", out.warnings}};
  if (certify) {
    OracleGuards g = guards_from_env(max_ground);
    try {
      OracleResult removed = worst_case_removal(f, out.a, *iprime, g);
      OracleResult opt = optimal_resilient(f, *i, *iprime, g);
      result["worst_case_value"] = removed.value;
      result["worst_case_removal"] = to_json(removed.argset);
      result["fstar"] = opt.value;
      result["optimal_set"] = to_json(opt.argset);
      result["ratio"] = opt.value > 0 ? removed.value / opt.value : 1.0;
    } catch (const guard_error& e) {
      result["certification"] = std::string("skipped: ") + e.what();
    }
  }
  if (!out_path.empty()) write_file(out_path, result.dump(2) + "\n");
  std::cout << result.dump(2) << std::endl;
  return kExitOk;
}

int cmd_oracle(const std::string& mode, const std::string& objective_path,
               const std::string& matroid_path, const std::string& removal_path,
               const std::string& set_ids, std::uint64_t seed, int max_ground) {
  json result;
  if (mode == "random") {
    auto i = matroid_from_json(load_json_file(matroid_path));
    ElementSet s = random_feasible(*i, seed);
    result = {{"set", to_json(s)}};
  } else if (mode == "greedy") {
    SetFunction f = objective_from_json(load_json_file(objective_path));
    auto i = matroid_from_json(load_json_file(matroid_path));
    ElementSet s = greedy_nonresilient(f, *i);
    result = {{"set", to_json(s)}, {"value", f(s)},
              {"eval_count", f.eval_count()}};
  } else if (mode == "worst-removal") {
    SetFunction f = objective_from_json(load_json_file(objective_path));
    auto iprime = matroid_from_json(load_json_file(removal_path));
    std::vector<ElementId> ids;
    std::stringstream ss(set_ids);
    for (std::string tok; std::getline(ss, tok, ';');)
      if (!tok.empty()) ids.push_back(std::stoi(tok));
    ElementSet a(ids);
    OracleResult r =
        worst_case_removal(f, a, *iprime, guards_from_env(max_ground));
    result = {{"removal", to_json(r.argset)},
              {"value", r.value},
              {"explored", r.explored},
              {"pruned", r.pruned}};
  } else if (mode == "optimal") {
    SetFunction f = objective_from_json(load_json_file(objective_path));
    auto i = matroid_from_json(load_json_file(matroid_path));
    auto iprime = matroid_from_json(load_json_file(removal_path));
    OracleResult r =
        optimal_resilient(f, *i, *iprime, guards_from_env(max_ground));
    result = {{"set", to_json(r.argset)},
              {"fstar", r.value},
              {"explored", r.explored},
              {"pruned", r.pruned}};
  } else {
    std::cerr << "unknown oracle mode: " << mode << "\n";
    return kExitBadInput;
  }
  std::cout << result.dump(2) << std::endl;
  return kExitOk;
}

int cmd_bounds(int alpha, int beta, std::optional<double> kappa,
               std::optional<double> ctotal, bool as_json) {
  BoundInputs in;
  in.alpha = alpha;
  in.beta = beta;
  in.kappa = kappa;
  in.c_total = ctotal;
  BoundReport report = compute_bounds(in);
  json j{{"alpha", alpha},
         {"beta", beta},
         {"h", h_factor(alpha, beta)},
         {"h_definition", "max(1/(1+beta), 1/(alpha-beta))"}};
  if (report.submodular_uniform)
    j["bound_submodular_uniform"] = *report.submodular_uniform;
  if (report.submodular_matroid)
    j["bound_submodular_matroid"] = *report.submodular_matroid;
  if (report.monotone) j["bound_monotone"] = *report.monotone;
  if (as_json) {
    std::cout << j.dump(2) << std::endl;
    return kExitOk;
  }
  std::cout << "h(alpha,beta) = " << j["h"].get<double>() << "\n";
  if (report.submodular_uniform)
    std::cout << "submodular, uniform matroid: " << *report.submodular_uniform
              << "\n";
  if (report.submodular_matroid)
    std::cout << "submodular, any matroid:     " << *report.submodular_matroid
              << "\n";
  if (report.monotone)
    std::cout << "monotone:                    " << *report.monotone << "\n";
  return kExitOk;
}

int cmd_curvature(const std::string& objective_path, int limit) {
  SetFunction f = objective_from_json(load_json_file(objective_path));
  json j;
  CurvatureReport kappa = curvature_kappa(f);
  j["kappa"] = *kappa.kappa;
  if (kappa.witness_v) j["kappa_witness_v"] = *kappa.witness_v;
  for (const auto& w : kappa.warnings) j["warnings"].push_back(w);
  try {
    CurvatureReport total = total_curvature_exact(f, limit);
    j["c_total"] = *total.c_total;
    j["c_mode"] = "exact";
  } catch (const guard_error&) {
    j["c_mode"] = "unavailable";
  }
  std::cout << j.dump(2) << std::endl;
  return kExitOk;
}

int cmd_check_matroid(const std::string& matroid_path, int limit) {
  auto m = matroid_from_json(load_json_file(matroid_path));
  AxiomReport report = verify_matroid_axioms(*m, limit);
  json j{{"ok", report.ok}, {"kind", m->kind()}, {"rank", m->rank()}};
  if (!report.ok) {
    j["message"] = report.message;
    if (report.x) j["x"] = to_json(*report.x);
    if (report.z) j["z"] = to_json(*report.z);
  }
  for (const auto& w : m->warnings()) j["warnings"].push_back(w);
  std::cout << j.dump(2) << std::endl;
  return report.ok ? kExitOk : kExitError;
}

int cmd_experiment(const std::string& config_path, const std::string& out_override,
                   const std::string& export_objective,
                   std::optional<std::uint64_t> seed_override) {
  ExperimentConfig config;
  if (!config_path.empty()) {
    config = experiment_config_from_json(load_json_file(config_path));
  } else if (const char* env = std::getenv("RESILIMAT_ORACLE_GUARD")) {
    config.oracle_guard = std::strtoull(env, nullptr, 10);
  }
  if (!out_override.empty()) config.out_csv = out_override;
  if (seed_override) config.seed = *seed_override;

  if (!export_objective.empty()) {
    const std::uint64_t sseed =
        config.scenario_seed.value_or(run_seed(config, 0));
    Scenario sc = build_scenario(sseed, config.scenario_horizon,
                                 config.scenario_dt, config.n_ground_sensors);
    write_file(export_objective,
               catalog_to_logdet_json(sc.catalog).dump(2) + "\n");
    std::cout << "objective descriptor written to " << export_objective
              << std::endl;
    return kExitOk;
  }

  ExperimentResult result = run_experiment(config);
  write_file(config.out_csv, rows_to_csv(result.rows));
  write_file(config.out_csv + ".summary.csv", summary_to_csv(result.summary));
  std::cout << "rows: " << result.rows.size() << "\n"
            << "cells: " << result.summary.size() << "\n"
            << "csv: " << config.out_csv << "\n"
            << "summary: " << config.out_csv << ".summary.csv" << std::endl;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resilient matroid-constrained selection toolkit"};
  app.require_subcommand(1);

  std::string objective_path, matroid_path, removal_path, out_path, set_ids;
  std::string mode, config_path, export_objective;
  bool certify = false, as_json = false;
  int alpha = 1, beta = 0, limit = 10, axiom_limit = 12, max_ground = 12;
  std::optional<double> kappa, ctotal;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> experiment_seed;

  auto* solve = app.add_subcommand("solve", "resilient two-phase selection");
  solve->add_option("--objective", objective_path)->required();
  solve->add_option("--matroid", matroid_path)->required();
  solve->add_option("--removal-matroid", removal_path)->required();
  solve->add_option("--out", out_path);
  solve->add_flag("--certify", certify,
                  "brute-force worst case and f* when sizes permit");
  solve->add_option("--max-ground", max_ground,
                    "largest ground set the exact oracles accept");

  auto* oracle = app.add_subcommand("oracle", "exact desk-scale oracles");
  oracle->add_option("--mode", mode)
      ->required()
      ->check(CLI::IsMember({"worst-removal", "optimal", "greedy", "random"}));
  oracle->add_option("--objective", objective_path);
  oracle->add_option("--matroid", matroid_path);
  oracle->add_option("--removal-matroid", removal_path);
  oracle->add_option("--set", set_ids, "selection ids, ';'-separated");
  oracle->add_option("--seed", seed);
  oracle->add_option("--max-ground", max_ground,
                     "largest ground set the exact oracles accept");

  auto* bounds = app.add_subcommand("bounds", "approximation floors");
  bounds->add_option("--alpha", alpha)->required();
  bounds->add_option("--beta", beta)->required();
  bounds->add_option("--kappa", kappa);
  bounds->add_option("--ctotal", ctotal);
  bounds->add_flag("--json", as_json);

  auto* curvature = app.add_subcommand("curvature", "curvature of an objective");
  curvature->add_option("--objective", objective_path)->required();
  curvature->add_option("--limit", limit);

  auto* check = app.add_subcommand("check-matroid", "exhaustive axiom check");
  check->add_option("--matroid", matroid_path)->required();
  check->add_option("--limit", axiom_limit);

  auto* experiment =
      app.add_subcommand("experiment", "four-way Monte Carlo comparison");
  experiment->add_option("--config", config_path);
  experiment->add_option("--out", out_path);
  experiment->add_option("--export-objective", export_objective,
                         "write the catalog as a logdet descriptor and exit");
  experiment->add_option("--seed", experiment_seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(objective_path, matroid_path, removal_path, out_path,
                       certify, max_ground);
    if (oracle->parsed())
      return cmd_oracle(mode, objective_path, matroid_path, removal_path,
                        set_ids, seed, max_ground);
    if (bounds->parsed()) return cmd_bounds(alpha, beta, kappa, ctotal, as_json);
    if (curvature->parsed()) return cmd_curvature(objective_path, limit);
    if (check->parsed()) return cmd_check_matroid(matroid_path, axiom_limit);
    if (experiment->parsed())
      return cmd_experiment(config_path, out_path, export_objective,
                            experiment_seed);
  } catch (const guard_error& e) {
    std::cerr << "guard: " << e.what() << std::endl;
    return kExitGuard;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config: " << e.what() << std::endl;
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input: " << e.what() << std::endl;
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitError;
  }
  return kExitBadInput;
}
