// Copyright 2026 The Annealed MPC Authors
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

#ifndef AMPC_BENCH_EXPERIMENT_HPP_
#define AMPC_BENCH_EXPERIMENT_HPP_

// Solver-in-the-loop experiment runner.
//
// An experiment is: one environment, one solver, a seed list, and an
// episode length. Each seed runs a full closed-loop episode; the solver
// plans against its own internal model (optionally perturbed by
// mismatch.* overrides) while the true environment integrates the applied
// actions. Every emitted byte is a pure function of (config, seed): timing
// goes to stderr only, numbers are printed with explicit formats, and
// seeds run in seed order.
//
// Budget convention: every solver spends n_stages * n_samples rollouts per
// control step (annealed: stages x samples; fixed-kernel: iterations x
// samples; evolutionary: generations x population), so comparisons under a
// shared budget need no per-solver arithmetic. compare_budget_or_throw
// turns any residual disagreement into a hard error.

#include <cstdint>

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ampc/bench/config.hpp"
#include "ampc/core/dynamics.hpp"
#include "ampc/core/types.hpp"

namespace ampc {

// Resolved from a validated ConfigMap. `label` names the solver column in
// tables and CSV (defaults to solver.id).
struct ExperimentConfig {
  std::string label;
  std::string env_id;
  std::string solver_id;
  std::vector<uint64_t> seeds;
  int steps = 0;
  int threads = 1;
  ConfigMap cfg;  // validated source of env.*, solver.*, mismatch.* values

  // Validates keys, requires env.id and solver.id, defaults seeds to 0..99
  // and steps to 50. Throws ConfigError with the offending key path.
  static ExperimentConfig resolve(const ConfigMap& cfg,
                                  const std::string& label = "");
};

// The true environment, the solver's (possibly mismatched) model, the
// episode start state, and the control period. fingerprint() hashes the
// true model's live parameters bit-for-bit; the runner checks it before
// and after every episode so mismatch overrides provably never leak into
// the environment being simulated.
struct EnvBundle {
  std::shared_ptr<const DynamicsModel> true_env;
  std::shared_ptr<const DynamicsModel> solver_env;
  State start;
  double dt = 0.0;
  uint64_t (*fingerprint)(const DynamicsModel& true_env) = nullptr;
};

// Builds both models from env.* (+ mismatch.* for the solver side).
// Start states: double_integrator (1, 0); pendulum hanging at rest;
// wall_jump and hopper use their tasks' standing starts.
EnvBundle make_env(const ExperimentConfig& ec);

// Minimal planning interface the runner drives.
class Solver {
 public:
  virtual ~Solver() = default;
  virtual std::vector<double> control_step(const State& x) = 0;
  // Internal cost of the plan the solver just committed to (best sampled
  // cost for the samplers, best member for the evolutionary baseline).
  virtual double last_plan_cost() const = 0;
  virtual int64_t rollouts_per_step() const = 0;
};

std::unique_ptr<Solver> make_solver(const ExperimentConfig& ec,
                                    std::shared_ptr<const DynamicsModel> model,
                                    double dt, uint64_t seed);

// One closed-loop episode.
struct RunRecord {
  uint64_t seed = 0;
  std::vector<std::vector<double>> actions;  // applied (clamped) actions
  std::vector<State> states;                 // realized, steps_completed + 1
  std::vector<double> step_costs;            // true running cost per step
  std::vector<double> plan_costs;            // solver-internal, per step
  // Sum of realized running costs plus the true terminal cost; +inf when
  // the episode diverged.
  double realized_cost = 0.0;
  int steps_completed = 0;
  bool success = false;
  bool diverged = false;
  double contact_score = 0.0;  // hopper only
  bool contact_scored = false;
  int64_t rollouts_per_step = 0;
};

// Runs every seed sequentially. Divergence (solver failure or non-finite
// state) truncates that seed's episode and flags it; it is never fatal.
// Success is environment-specific:
//   double_integrator  |position| < 0.05 and |velocity| < 0.05 at the end
//   pendulum           within 0.2 rad of upright with |omega| < 1
//   wall_jump          lands past the wall within the goal tolerance
//   hopper             not diverged, upright (|phi| < 0.5), foot over the
//                      last pad at the end
// Per-step wall clock is reported on stderr only.
std::vector<RunRecord> run_experiment(const ExperimentConfig& ec);

// Per-solver aggregate. Cost statistics cover finite (non-diverged) runs;
// the success rate denominator is all seeds.
struct SolverSummary {
  std::string label;
  int n_seeds = 0;
  int n_success = 0;
  int n_diverged = 0;
  double success_rate = 0.0;
  double mean_cost = 0.0;  // NaN when every run diverged
  double std_cost = 0.0;   // sample std (n-1); 0 for a single finite run
  double mean_contact = 0.0;
  bool has_contact = false;
  int64_t rollouts_per_step = 0;
};

SolverSummary summarize(const std::string& label,
                        std::span<const RunRecord> records);

// Hard error if any two summaries disagree on rollouts per control step.
void check_budget_parity(std::span<const SolverSummary> summaries);

// CSV emitters. Schemas are versioned by their leading comment line; all
// numbers print as %.17g so files round-trip and byte-compare.
// write_runs_csv = header + rows; the split form lets `compare` merge
// several solvers' records into one file under a single header.
void write_runs_header(std::ostream& os);
void write_runs_rows(std::ostream& os, const std::string& label,
                     std::span<const RunRecord> records);
void write_runs_csv(std::ostream& os, const std::string& label,
                    std::span<const RunRecord> records);
void write_trace_csv(std::ostream& os, const RunRecord& record);
void write_summary_csv(std::ostream& os,
                       std::span<const SolverSummary> summaries);

// Aligned text table for stdout.
std::string format_table(std::span<const SolverSummary> summaries);

}  // namespace ampc

#endif  // AMPC_BENCH_EXPERIMENT_HPP_
