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

#include "ampc/envs/double_integrator.hpp"

#include "ampc/core/errors.hpp"

namespace ampc {

DoubleIntegratorEnv::DoubleIntegratorEnv(DoubleIntegratorParams params)
    : params_(params) {
  if (params_.u_max <= 0.0) {
    throw ValidationError("double_integrator: u_max must be > 0");
  }
  if (params_.q_pos < 0.0 || params_.q_vel < 0.0 || params_.r_u < 0.0 ||
      params_.qf_pos < 0.0 || params_.qf_vel < 0.0) {
    throw ValidationError("double_integrator: cost weights must be >= 0");
  }
}

void DoubleIntegratorEnv::step(std::span<const double> x,
                               std::span<const double> u, double dt,
                               std::span<double> x_next) const {
  const double v = x[1] + dt * u[0];
  x_next[0] = x[0] + dt * v;
  x_next[1] = v;
}

double DoubleIntegratorEnv::running_cost(std::span<const double> x,
                                         std::span<const double> u) const {
  return params_.q_pos * x[0] * x[0] + params_.q_vel * x[1] * x[1] +
         params_.r_u * u[0] * u[0];
}

double DoubleIntegratorEnv::terminal_cost(std::span<const double> x) const {
  return params_.qf_pos * x[0] * x[0] + params_.qf_vel * x[1] * x[1];
}

void DoubleIntegratorEnv::action_bounds(std::span<double> lo,
                                        std::span<double> hi) const {
  lo[0] = -params_.u_max;
  hi[0] = params_.u_max;
}

}  // namespace ampc
