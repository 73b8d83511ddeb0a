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

#include "resilimat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <thread>
#include <tuple>

#include "resilimat/solver.hpp"

namespace resilimat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string join_ids(const ElementSet& s) {
  std::ostringstream out;
  bool first = true;
  for (ElementId id : s) {
    if (!first) out << ';';
    out << id;
    first = false;
  }
  return out.str();
}

std::vector<SensorModel> pick_sensors(const std::vector<SensorModel>& catalog,
                                      const ElementSet& ids) {
  std::vector<SensorModel> out;
  out.reserve(ids.size());
  for (ElementId id : ids) out.push_back(catalog[id]);
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (alphas.empty() || betas.empty())
    throw std::invalid_argument("alphas and betas must be non-empty");
  for (int a : alphas)
    if (a < 1) throw std::invalid_argument("alphas must be positive");
  for (int b : betas)
    if (b < 0) throw std::invalid_argument("betas must be >= 0");
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (rollouts < 1) throw std::invalid_argument("rollouts must be >= 1");
}

const char* selector_name(Selector s) {
  switch (s) {
    case Selector::kOptimal:
      return "optimal";
    case Selector::kRandom:
      return "random*";
    case Selector::kLogdet:
      return "logdet";
    case Selector::kSlqg:
      return "s-LQG";
  }
  return "?";
}

std::uint64_t run_seed(const ExperimentConfig& config, int run) {
  return mix(config.seed ^ mix(static_cast<std::uint64_t>(run) + 1));
}

std::vector<ResultRow> run_cell(int alpha, int beta, std::uint64_t run_seed,
                                const ExperimentConfig& config) {
  std::vector<ResultRow> rows(4);
  for (int s = 0; s < 4; ++s) {
    rows[s].alpha = alpha;
    rows[s].beta = beta;
    rows[s].selector = static_cast<Selector>(s);
  }

  if (beta >= alpha) {
    // All selected sensors can fail; by convention the cell is infeasible.
    for (auto& row : rows) {
      row.cost = kInf;
      row.value = 0.0;
      row.feasible = false;
    }
    return rows;
  }

  Scenario sc = build_scenario(run_seed, config.scenario_horizon,
                               config.scenario_dt, config.n_ground_sensors);
  const LqgWeights weights = riccati_backward(sc.sys, sc.Q, sc.R);
  const SetFunction reward =
      memoized(sensor_selection_objective(sc.sys, weights, sc.catalog));
  const int n = reward.ground().size();

  const auto selection = std::make_shared<UniformMatroid>(
      reward.ground(), std::min(alpha, n));
  const auto removal =
      std::make_shared<UniformMatroid>(reward.ground(), beta);

  OracleGuards guards;
  guards.max_candidates = config.oracle_guard;
  guards.max_ground = n;
  guards.monotone_shortcut = true;

  const std::uint64_t sim_seed = mix(run_seed ^ 0x5151u);

  auto finish_row = [&](ResultRow& row, const ElementSet& chosen) {
    row.selected = chosen;
    OracleResult removed = worst_case_removal(reward, chosen, *removal, guards);
    row.removed = removed.argset;
    row.value = removed.value;
    const ElementSet survivors = chosen.set_difference(row.removed);
    row.sim_seed = sim_seed;
    row.cost = simulate_closed_loop_cost(sc.sys, weights,
                                         pick_sensors(sc.catalog, survivors),
                                         config.rollouts, sim_seed);
  };

  // optimal
  {
    ResultRow& row = rows[static_cast<int>(Selector::kOptimal)];
    const std::uint64_t before = reward.eval_count();
    try {
      OracleResult best = optimal_resilient(reward, *selection, *removal,
                                            guards);
      finish_row(row, best.argset);
    } catch (const guard_error&) {
      row.flag = "guard";
      row.cost = std::numeric_limits<double>::quiet_NaN();
      row.value = std::numeric_limits<double>::quiet_NaN();
    }
    row.evals = reward.eval_count() - before;
  }
  // random*
  {
    ResultRow& row = rows[static_cast<int>(Selector::kRandom)];
    const std::uint64_t before = reward.eval_count();
    finish_row(row, random_feasible(
                        *selection,
                        mix(run_seed ^ (std::uint64_t(alpha) << 8) ^ beta)));
    row.evals = reward.eval_count() - before;
  }
  // logdet (non-resilient greedy on the surrogate)
  {
    ResultRow& row = rows[static_cast<int>(Selector::kLogdet)];
    const std::uint64_t before = reward.eval_count();
    finish_row(row, greedy_nonresilient(reward, *selection));
    row.evals = reward.eval_count() - before;
  }
  // s-LQG
  {
    ResultRow& row = rows[static_cast<int>(Selector::kSlqg)];
    const std::uint64_t before = reward.eval_count();
    finish_row(row, solve_resilient(reward, *selection, *removal).a);
    row.evals = reward.eval_count() - before;
  }

  for (int r = 0; r < 4; ++r) rows[r].run = 0;  // caller fills the run index
  return rows;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();

  struct Task {
    int alpha, beta, run;
  };
  std::vector<Task> tasks;
  for (int alpha : config.alphas)
    for (int beta : config.betas)
      for (int run = 0; run < config.runs; ++run)
        tasks.push_back({alpha, beta, run});

  std::vector<std::vector<ResultRow>> per_task(tasks.size());
  std::atomic<std::size_t> next{0};
  int thread_count = config.threads > 0
                         ? config.threads
                         : static_cast<int>(std::max(
                               1u, std::thread::hardware_concurrency()));
  thread_count = std::min<int>(thread_count, static_cast<int>(tasks.size()));

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      auto rows = run_cell(t.alpha, t.beta, run_seed(config, t.run), config);
      for (auto& row : rows) row.run = t.run;
      per_task[i] = std::move(rows);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  ExperimentResult result;
  for (auto& rows : per_task)
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
  std::sort(result.rows.begin(), result.rows.end(),
            [](const ResultRow& a, const ResultRow& b) {
              return std::tie(a.alpha, a.beta, a.run, a.selector) <
                     std::tie(b.alpha, b.beta, b.run, b.selector);
            });

  // Per-cell aggregation over runs.
  std::map<std::pair<int, int>, std::vector<const ResultRow*>> cells;
  for (const auto& row : result.rows)
    cells[{row.alpha, row.beta}].push_back(&row);
  for (const auto& [key, rows] : cells) {
    CellSummary cell;
    cell.alpha = key.first;
    cell.beta = key.second;
    std::array<int, 4> counted{};
    std::array<double, 4> cost_sum{};
    std::array<double, 4> value_sum{};
    int optimal_done = 0;
    for (const ResultRow* row : rows) {
      const int s = static_cast<int>(row->selector);
      if (!row->feasible || !row->flag.empty() || std::isnan(row->cost))
        continue;
      ++counted[s];
      cost_sum[s] += row->cost;
      value_sum[s] += row->value;
      if (row->selector == Selector::kOptimal) ++optimal_done;
    }
    for (int s = 0; s < 4; ++s) {
      cell.mean_cost[s] = counted[s] ? cost_sum[s] / counted[s]
                                     : std::numeric_limits<double>::quiet_NaN();
      cell.mean_value[s] = counted[s]
                               ? value_sum[s] / counted[s]
                               : std::numeric_limits<double>::quiet_NaN();
    }
    cell.completed_runs = optimal_done;
    const double opt = cell.mean_value[static_cast<int>(Selector::kOptimal)];
    const double slq = cell.mean_value[static_cast<int>(Selector::kSlqg)];
    cell.slqg_over_optimal =
        (optimal_done > 0 && opt > 0.0)
            ? slq / opt
            : std::numeric_limits<double>::quiet_NaN();
    result.summary.push_back(cell);
  }
  return result;
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << "alpha,beta,run,selector,selected,removed,cost,evals\n";
  for (const auto& row : rows) {
    out << row.alpha << ',' << row.beta << ',' << row.run << ','
        << selector_name(row.selector) << ',' << join_ids(row.selected) << ','
        << join_ids(row.removed) << ',' << format_double(row.cost) << ','
        << row.evals << '\n';
  }
  return out.str();
}

std::string summary_to_csv(const std::vector<CellSummary>& summary) {
  std::ostringstream out;
  out << "alpha,beta,mean_cost_optimal,mean_cost_random,mean_cost_logdet,"
         "mean_cost_slqg,mean_value_optimal,mean_value_random,"
         "mean_value_logdet,mean_value_slqg,slqg_over_optimal,"
         "completed_runs\n";
  for (const auto& cell : summary) {
    out << cell.alpha << ',' << cell.beta;
    for (double c : cell.mean_cost) out << ',' << format_double(c);
    for (double v : cell.mean_value) out << ',' << format_double(v);
    out << ',' << format_double(cell.slqg_over_optimal) << ','
        << cell.completed_runs << '\n';
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

}  // namespace resilimat
