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

#ifndef AMPC_CORE_ROLLOUT_HPP_
#define AMPC_CORE_ROLLOUT_HPP_

#include <span>
#include <vector>

#include "ampc/core/dynamics.hpp"
#include "ampc/core/types.hpp"

namespace ampc {

// Integrates the plan from x0 with fixed dt, clamping each action row to
// the model's bounds before stepping. Accumulates running costs in step
// order, then the terminal cost. Throws DivergenceError (with the step
// index) if any state or cost goes non-finite. With record_trace the result
// carries all H+1 states and the H per-step costs.
RolloutResult rollout(const DynamicsModel& model, const State& x0,
                      const ControlSequence& plan, double dt,
                      bool record_trace = false);

// Total costs for a batch of candidate plans, statically partitioned over
// `threads` workers (identical results for any thread count). Divergent
// candidates score +inf instead of throwing.
std::vector<double> rollout_batch(const DynamicsModel& model, const State& x0,
                                  std::span<const ControlSequence> candidates,
                                  double dt, int threads = 1);

// Batch variant over base + noise_rows[k]: candidate k is the plan whose
// flat entries are base[j] + noise_rows[k * base.size() + j]. Avoids
// materializing N_W ControlSequence objects on the planner's hot path.
std::vector<double> rollout_batch_perturbed(const DynamicsModel& model,
                                            const State& x0,
                                            const ControlSequence& base,
                                            std::span<const double> noise_rows,
                                            int n_samples, double dt,
                                            int threads = 1);

// Batch over pre-materialized flat plans: candidate k occupies
// plan_rows[k * horizon * d_u ...]. Used where candidates are not plain
// perturbations of one base (node interpolants, evolutionary populations).
std::vector<double> rollout_batch_rows(const DynamicsModel& model,
                                       const State& x0,
                                       std::span<const double> plan_rows,
                                       int n_candidates, int horizon, double dt,
                                       int threads = 1);

}  // namespace ampc

#endif  // AMPC_CORE_ROLLOUT_HPP_
