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

#ifndef AMPC_CORE_DYNAMICS_HPP_
#define AMPC_CORE_DYNAMICS_HPP_

#include <span>
#include <string>

namespace ampc {

// Discrete-time model contract used by every solver and environment.
//
// Requirements on implementations:
//   - step() is a pure function of (x, u, dt): no internal state, no RNG.
//     Concurrent calls from rollout workers must be safe.
//   - running_cost() and terminal_cost() return finite values for finite,
//     bounded inputs. State-constraint violations are priced here, not
//     enforced by the integrator.
//   - action_bounds() fills per-dimension [lo, hi]; rollouts clamp actions
//     to these bounds before stepping.
class DynamicsModel {
 public:
  virtual ~DynamicsModel() = default;

  virtual int state_dim() const = 0;
  virtual int action_dim() const = 0;
  virtual std::string name() const = 0;

  virtual void step(std::span<const double> x, std::span<const double> u,
                    double dt, std::span<double> x_next) const = 0;
  virtual double running_cost(std::span<const double> x,
                              std::span<const double> u) const = 0;
  virtual double terminal_cost(std::span<const double> x) const = 0;
  virtual void action_bounds(std::span<double> lo, std::span<double> hi) const = 0;
};

}  // namespace ampc

#endif  // AMPC_CORE_DYNAMICS_HPP_
