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

#include "ampc/annealing/schedule.hpp"

#include <cmath>

#include <string>

#include "ampc/core/errors.hpp"

namespace ampc {

namespace {

void check_beta(double beta, const char* name) {
  // +inf is a valid rate (axis frozen); NaN and non-positive are not.
  if (std::isnan(beta) || !(beta > 0.0)) {
    throw ValidationError(std::string("NoiseSchedule: ") + name + " must be > 0");
  }
}

void check_stage(int stage, int n_stages) {
  if (n_stages < 1) throw ValidationError("NoiseSchedule: n_stages must be >= 1");
  if (stage < 1 || stage > n_stages) {
    throw ValidationError("schedule: stage " + std::to_string(stage) +
                          " outside [1, " + std::to_string(n_stages) + "]");
  }
}

}  // namespace

void NoiseSchedule::validate() const {
  if (n_stages < 1) throw ValidationError("NoiseSchedule: n_stages must be >= 1");
  if (horizon < 1) throw ValidationError("NoiseSchedule: horizon must be >= 1");
  if (action_dim < 1) throw ValidationError("NoiseSchedule: action_dim must be >= 1");
  check_beta(beta1, "beta1");
  check_beta(beta2, "beta2");
  if (!std::isfinite(sigma_base) || !(sigma_base > 0.0)) {
    throw ValidationError("NoiseSchedule: sigma_base must be positive and finite");
  }
}

double exp_schedule(int stage, int n_stages, double beta, int dim) {
  check_stage(stage, n_stages);
  check_beta(beta, "beta");
  if (dim < 1) throw ValidationError("exp_schedule: dim must be >= 1");
  const double lag = static_cast<double>(n_stages - stage);
  return std::exp(-(lag / (beta * n_stages)) * dim);
}

double kernel_sigma(int stage, double h, const NoiseSchedule& sched) {
  sched.validate();
  check_stage(stage, sched.n_stages);
  if (std::isnan(h) || h < 0.0 || h > static_cast<double>(sched.horizon)) {
    throw ValidationError("kernel_sigma: h outside [0, horizon]");
  }
  const double stage_lag = static_cast<double>(sched.n_stages - stage);
  const double horizon_lag = static_cast<double>(sched.horizon) - h;
  const double variance_factor =
      std::exp(-stage_lag / (sched.beta1 * sched.n_stages) -
               horizon_lag / (sched.beta2 * sched.horizon));
  // exp(-0) == 1 exactly, so the (n_stages, horizon) endpoint returns
  // sigma_base itself.
  return sched.sigma_base * std::sqrt(variance_factor);
}

ControlSequence trajectory_kernel(int stage, const NoiseSchedule& sched) {
  sched.validate();
  check_stage(stage, sched.n_stages);
  ControlSequence sigma(sched.horizon, sched.action_dim);
  for (int h = 0; h < sched.horizon; ++h) {
    const double s = kernel_sigma(stage, static_cast<double>(h), sched);
    for (int j = 0; j < sched.action_dim; ++j) sigma.at(h, j) = s;
  }
  return sigma;
}

}  // namespace ampc
