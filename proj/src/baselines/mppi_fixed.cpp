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

#include "ampc/baselines/mppi_fixed.hpp"

#include <limits>

#include "ampc/core/errors.hpp"

namespace ampc {

DialConfig to_dial_config(const FixedMppiConfig& cfg, int action_dim) {
  if (!(cfg.sigma_fixed > 0.0)) {
    throw ValidationError("FixedMppiConfig: sigma_fixed must be > 0");
  }
  if (cfg.iterations < 1) {
    throw ValidationError("FixedMppiConfig: iterations must be >= 1");
  }
  DialConfig out;
  out.schedule.n_stages = cfg.iterations;
  out.schedule.horizon = cfg.horizon;
  out.schedule.action_dim = action_dim;
  out.schedule.beta1 = std::numeric_limits<double>::infinity();
  out.schedule.beta2 = std::numeric_limits<double>::infinity();
  out.schedule.sigma_base = cfg.sigma_fixed;
  out.lambda = cfg.lambda;
  out.n_samples = cfg.n_samples;
  out.dt = cfg.dt;
  out.seed = cfg.seed;
  out.node_count = cfg.node_count;
  out.interp = cfg.interp;
  out.threads = cfg.threads;
  return out;
}

ControlSequence mppi_fixed_step(const DynamicsModel& model, const State& x0,
                                const ControlSequence& plan,
                                const FixedMppiConfig& cfg,
                                const RngStream& step_rng,
                                StepDiagnostics* diag) {
  const DialConfig dcfg = to_dial_config(cfg, model.action_dim());
  ControlSequence u = plan;
  if (diag != nullptr) {
    *diag = StepDiagnostics{};
    diag->accepted_cost = std::numeric_limits<double>::infinity();
  }
  for (int stage = cfg.iterations; stage >= 1; --stage) {
    StageDiagnostics stage_diag;
    u = anneal_step(model, x0, u, stage, dcfg,
                    step_rng.derive(static_cast<uint64_t>(stage)), &stage_diag);
    if (diag != nullptr) {
      diag->accepted_cost = stage_diag.best_cost;
      diag->stages.push_back(stage_diag);
    }
  }
  return u;
}

FixedMppiController::FixedMppiController(std::shared_ptr<const DynamicsModel> model,
                                         const FixedMppiConfig& cfg)
    : inner_(model, to_dial_config(cfg, model ? model->action_dim() : 0)) {}

}  // namespace ampc
