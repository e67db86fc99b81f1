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

#ifndef AMPC_DIAL_CONTROLLER_HPP_
#define AMPC_DIAL_CONTROLLER_HPP_

// Dual-loop annealed receding-horizon controller.
//
// Outer loop: at each control step, the plan is refined through n_stages
// score-ascent updates, stage i = n_stages down to 1, each drawing its
// perturbations from the two-axis schedule in annealing/schedule.hpp. The
// first stage smooths the cost landscape the most (largest kernel) and the
// last the least, so every control step is a fresh coarse-to-fine sweep.
//
// Inner loop: after emitting row 0, the plan shifts forward one step and
// the freed tail row is filled by replicating the last row. A tail action
// therefore accumulates n_stages updates per control step over the horizon
// slots it traverses: n_stages * horizon updates by the time it is emitted.
//
// Noise is keyed (seed, step, stage, sample); trajectories for a fixed
// (config, seed) are bit-identical regardless of thread count.

#include <cstdint>

#include <memory>
#include <vector>

#include "ampc/annealing/schedule.hpp"
#include "ampc/core/dynamics.hpp"
#include "ampc/core/rollout.hpp"
#include "ampc/core/types.hpp"
#include "ampc/sampler/rng.hpp"

namespace ampc {

enum class InterpMode { kLinear, kCatmullRom };

struct DialConfig {
  NoiseSchedule schedule;  // stage count, horizon, action_dim, rates, base std
  // Softmax temperature. Deliberately has no sane default; configs must set
  // it explicitly.
  double lambda = 0.0;
  int n_samples = 64;     // N_W rollouts per stage
  double dt = 0.02;
  uint64_t seed = 0;
  // 0 plans over every step directly; >= 2 plans over a coarse node grid
  // spread evenly across [0, horizon-1] and interpolated.
  int node_count = 0;
  InterpMode interp = InterpMode::kLinear;
  int threads = 1;

  void validate(const DynamicsModel& model) const;
};

struct StageDiagnostics {
  int stage = 0;
  double sigma_max = 0.0;    // largest std in this stage's kernel
  double best_cost = 0.0;    // min sampled cost (+inf if none finite)
  double entropy = 0.0;      // softmax weight entropy, nats
  int n_valid = 0;           // candidates with finite cost
  bool held = false;         // stage skipped: no valid sample
};

struct StepDiagnostics {
  int step_index = 0;
  std::vector<StageDiagnostics> stages;
  // Minimum sampled cost in the last non-held stage. A deliberate proxy:
  // evaluating J(plan) itself would spend a rollout beyond the
  // n_stages * n_samples budget.
  double accepted_cost = 0.0;
  bool plan_held = false;    // every stage failed; previous plan reused
  int64_t emitted_update_count = 0;
  std::vector<double> action;
};

// One annealed score-ascent stage on a plan. Draws n_samples perturbations
// from the stage kernel, scores them by rollout, and ascends the smoothed
// log-density. Throws NoValidSampleError if every candidate diverges.
ControlSequence anneal_step(const DynamicsModel& model, const State& x0,
                            const ControlSequence& plan, int stage,
                            const DialConfig& cfg, const RngStream& stage_rng,
                            StageDiagnostics* diag = nullptr);

// Node-space variant: perturbs and ascends the node grid, scoring each
// candidate through its interpolated plan. Returns the updated nodes.
ControlSequence anneal_step_nodes(const DynamicsModel& model, const State& x0,
                                  const ControlSequence& nodes, int stage,
                                  const DialConfig& cfg, const RngStream& stage_rng,
                                  StageDiagnostics* diag = nullptr);

// Receding-horizon shift: row h takes row h+1's value, the last row is
// replicated. Slot h of the result is what slot h+1 of the input had
// learned, so plan knowledge survives the step.
ControlSequence shift(const ControlSequence& plan);

// Node grid positions: node s sits at horizon position s*(H-1)/(S-1).
std::vector<double> node_positions(int node_count, int horizon);

// Evaluates the node interpolant at integer positions 0..horizon-1. With
// node_count == horizon both modes reduce to the identity.
ControlSequence nodes_to_controls(const ControlSequence& nodes, int horizon,
                                  InterpMode mode);

// Shift in node space: re-samples the current interpolant one control step
// later (position h_s + 1, clamped to the end) onto the same node grid.
ControlSequence shift_nodes(const ControlSequence& nodes, int horizon,
                            InterpMode mode);

class DialController {
 public:
  DialController(std::shared_ptr<const DynamicsModel> model, DialConfig cfg);

  // Runs the annealed sweep from the measured state, returns the action to
  // apply, then advances the plan one step. On a fully failed sweep (every
  // stage had no valid sample) the previous plan's next action is emitted
  // and the step is flagged.
  std::vector<double> control_step(const State& x);

  const ControlSequence& plan() const { return plan_; }
  const ControlSequence& nodes() const;
  int step_index() const { return step_; }
  const DialConfig& config() const { return cfg_; }
  const StepDiagnostics& last_step() const { return last_; }

  // Stage updates each current plan slot has received so far.
  const std::vector<int64_t>& slot_update_counts() const { return slot_updates_; }
  int64_t rollouts_per_step() const {
    return static_cast<int64_t>(cfg_.schedule.n_stages) * cfg_.n_samples;
  }
  int64_t total_rollouts() const { return total_rollouts_; }

  void reset();

 private:
  std::shared_ptr<const DynamicsModel> model_;
  DialConfig cfg_;
  ControlSequence plan_;
  ControlSequence nodes_;  // node mode only
  std::vector<int64_t> slot_updates_;
  StepDiagnostics last_;
  RngStream root_;
  int step_ = 0;
  int64_t total_rollouts_ = 0;
};

}  // namespace ampc

#endif  // AMPC_DIAL_CONTROLLER_HPP_
