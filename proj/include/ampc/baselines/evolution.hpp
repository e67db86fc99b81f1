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

#ifndef AMPC_BASELINES_EVOLUTION_HPP_
#define AMPC_BASELINES_EVOLUTION_HPP_

// Evolutionary baseline: separable CMA-ES over the flat plan vector.
//
// Diagonal covariance, log-rank recombination weights, cumulative step-size
// adaptation; hyperparameters are the standard defaults and never tuned per
// task. Each control step restarts the strategy centered on the shifted
// plan (search state does not persist across steps), runs a fixed number of
// generations, and plans with the final mean. Budget bookkeeping matches
// the samplers: population x generations rollouts per control step, with
// noise keyed (seed, step, generation, member).

#include <cstdint>

#include <memory>
#include <vector>

#include "ampc/core/dynamics.hpp"
#include "ampc/core/rollout.hpp"
#include "ampc/core/types.hpp"
#include "ampc/sampler/rng.hpp"

namespace ampc {

struct EvoStrategyConfig {
  int population = 32;              // >= 2
  int generations = 16;             // per control step
  double initial_step = 0.3;        // sigma_0, in action units
  double selection_fraction = 0.5;  // mu = max(1, floor(population * fraction))
  int horizon = 1;
  double dt = 0.02;
  uint64_t seed = 0;
  int threads = 1;

  void validate(const DynamicsModel& model) const;
};

struct EvoStepResult {
  ControlSequence plan;        // final distribution mean
  double best_cost = 0.0;      // best sampled cost across all generations
  bool reset_triggered = false;  // step-size/covariance degeneracy hit
  int64_t rollouts = 0;
};

// One control step of search from x0, restarted around `plan`.
EvoStepResult evo_step(const DynamicsModel& model, const State& x0,
                       const ControlSequence& plan, const EvoStrategyConfig& cfg,
                       const RngStream& step_rng);

class EvoController {
 public:
  EvoController(std::shared_ptr<const DynamicsModel> model, EvoStrategyConfig cfg);

  std::vector<double> control_step(const State& x);

  const ControlSequence& plan() const { return plan_; }
  int step_index() const { return step_; }
  double last_best_cost() const { return last_best_cost_; }
  bool last_reset_flag() const { return last_reset_; }
  int64_t rollouts_per_step() const {
    return static_cast<int64_t>(cfg_.population) * cfg_.generations;
  }
  int64_t total_rollouts() const { return total_rollouts_; }

  void reset();

 private:
  std::shared_ptr<const DynamicsModel> model_;
  EvoStrategyConfig cfg_;
  ControlSequence plan_;
  RngStream root_;
  int step_ = 0;
  double last_best_cost_ = 0.0;
  bool last_reset_ = false;
  int64_t total_rollouts_ = 0;
};

}  // namespace ampc

#endif  // AMPC_BASELINES_EVOLUTION_HPP_
