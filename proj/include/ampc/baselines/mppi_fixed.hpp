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

#ifndef AMPC_BASELINES_MPPI_FIXED_HPP_
#define AMPC_BASELINES_MPPI_FIXED_HPP_

// Fixed-kernel MPPI baseline.
//
// Structurally this is the annealed controller with both schedule rates at
// +inf: every iteration draws from the same constant kernel sigma_fixed.
// Because it shares the controller's code path and noise coordinates, a
// DialController configured with beta1 = beta2 = +inf and
// sigma_base = sigma_fixed produces bit-identical trajectories, which tests
// assert. The two canonical presets follow the benchmark convention of a
// wide exploration kernel and a narrow exploitation kernel.

#include <cstdint>

#include <memory>
#include <vector>

#include "ampc/dial/controller.hpp"

namespace ampc {

inline constexpr double kMppiExploreSigma = 0.2;
inline constexpr double kMppiExploitSigma = 0.05;

struct FixedMppiConfig {
  double sigma_fixed = kMppiExploreSigma;
  double lambda = 0.0;     // required, like DialConfig::lambda
  int n_samples = 64;
  int iterations = 1;      // fixed-kernel updates per control step
  int horizon = 1;
  double dt = 0.02;
  uint64_t seed = 0;
  int node_count = 0;
  InterpMode interp = InterpMode::kLinear;
  int threads = 1;
};

// The degenerate-schedule mapping shared by the step function and the
// controller.
DialConfig to_dial_config(const FixedMppiConfig& cfg, int action_dim);

// One control step's worth of planning: `iterations` constant-kernel
// updates of the plan from state x0. Stage streams are rng.derive(i), the
// same coordinates the controllers use.
ControlSequence mppi_fixed_step(const DynamicsModel& model, const State& x0,
                                const ControlSequence& plan,
                                const FixedMppiConfig& cfg,
                                const RngStream& step_rng,
                                StepDiagnostics* diag = nullptr);

class FixedMppiController {
 public:
  FixedMppiController(std::shared_ptr<const DynamicsModel> model,
                      const FixedMppiConfig& cfg);

  std::vector<double> control_step(const State& x) { return inner_.control_step(x); }
  const ControlSequence& plan() const { return inner_.plan(); }
  int step_index() const { return inner_.step_index(); }
  const StepDiagnostics& last_step() const { return inner_.last_step(); }
  int64_t rollouts_per_step() const { return inner_.rollouts_per_step(); }
  int64_t total_rollouts() const { return inner_.total_rollouts(); }
  void reset() { inner_.reset(); }

 private:
  DialController inner_;
};

}  // namespace ampc

#endif  // AMPC_BASELINES_MPPI_FIXED_HPP_
