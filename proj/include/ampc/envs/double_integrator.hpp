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

#ifndef AMPC_ENVS_DOUBLE_INTEGRATOR_HPP_
#define AMPC_ENVS_DOUBLE_INTEGRATOR_HPP_

#include <span>
#include <string>

#include "ampc/core/dynamics.hpp"

namespace ampc {

// Point mass on a line with acceleration control. State (position, velocity),
// action (acceleration), semi-implicit Euler. Convex and smooth: the sanity
// environment where a sampling planner has no excuse.
//
// Costs are plain quadratics with settable weights; any dt scaling belongs in
// the weights. The all-zero weight combinations are allowed so the model can
// express pure-effort or pure-terminal problems.
struct DoubleIntegratorParams {
  double q_pos = 1.0;      // running position weight
  double q_vel = 0.1;      // running velocity weight
  double r_u = 0.1;        // running effort weight
  double qf_pos = 10.0;    // terminal position weight
  double qf_vel = 1.0;     // terminal velocity weight
  double u_max = 1.0;      // |u| bound, > 0
};

class DoubleIntegratorEnv final : public DynamicsModel {
 public:
  explicit DoubleIntegratorEnv(DoubleIntegratorParams params = {});

  int state_dim() const override { return 2; }
  int action_dim() const override { return 1; }
  std::string name() const override { return "double_integrator"; }

  void step(std::span<const double> x, std::span<const double> u, double dt,
            std::span<double> x_next) const override;
  double running_cost(std::span<const double> x,
                      std::span<const double> u) const override;
  double terminal_cost(std::span<const double> x) const override;
  void action_bounds(std::span<double> lo, std::span<double> hi) const override;

  const DoubleIntegratorParams& params() const { return params_; }

 private:
  DoubleIntegratorParams params_;
};

}  // namespace ampc

#endif  // AMPC_ENVS_DOUBLE_INTEGRATOR_HPP_
