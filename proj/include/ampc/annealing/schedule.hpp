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

#ifndef AMPC_ANNEALING_SCHEDULE_HPP_
#define AMPC_ANNEALING_SCHEDULE_HPP_

// Two-axis exponential noise schedules.
//
// Stages count DOWN from n_stages to 1; stage n_stages uses the largest
// kernel and stage 1 the smallest, so every control step sweeps coarse to
// fine. The per-entry standard deviation factorizes into a trajectory-level
// term (stage axis, rate beta1) and an action-level term (horizon axis,
// rate beta2):
//
//   variance(i, h) = sigma_base^2
//                    * exp(-(n_stages - i) / (beta1 * n_stages))
//                    * exp(-(horizon - h) / (beta2 * horizon)).
//
// Larger beta anneals slower; beta = +inf freezes an axis entirely (the
// factor is exp(-0) = 1), which is how the fixed-kernel planner reuses this
// schedule. At (i, h) = (n_stages, horizon) the std is sigma_base exactly.
// Within a stage, later plan rows (h closer to the horizon) get more noise
// than earlier rows, which are closer to execution.

#include "ampc/core/types.hpp"

namespace ampc {

struct NoiseSchedule {
  int n_stages = 1;        // N >= 1, annealing stages per control step
  int horizon = 1;         // H >= 1, plan rows
  int action_dim = 1;      // d_u >= 1
  double beta1 = 1.0;      // trajectory-axis rate, > 0 (+inf allowed)
  double beta2 = 1.0;      // action-axis rate, > 0 (+inf allowed)
  double sigma_base = 1.0; // largest per-dimension std, > 0

  void validate() const;   // throws ValidationError naming the field
};

// Determinant of a d-dimensional isotropic stage covariance under the
// trajectory-axis law alone: exp(-((n_stages - stage) / (beta * n_stages)) * dim).
// Stage must lie in [1, n_stages].
double exp_schedule(int stage, int n_stages, double beta, int dim);

// Per-dimension std at (stage, h). h is a real horizon position in
// [0, horizon]; fractional values support node grids placed between steps.
double kernel_sigma(int stage, double h, const NoiseSchedule& sched);

// Full H x d_u std array for one stage: row h holds kernel_sigma(stage, h)
// in every action column.
ControlSequence trajectory_kernel(int stage, const NoiseSchedule& sched);

}  // namespace ampc

#endif  // AMPC_ANNEALING_SCHEDULE_HPP_
