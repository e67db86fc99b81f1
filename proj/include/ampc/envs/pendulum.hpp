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

#ifndef AMPC_ENVS_PENDULUM_HPP_
#define AMPC_ENVS_PENDULUM_HPP_

#include <span>
#include <string>

#include "ampc/core/dynamics.hpp"

namespace ampc {

// Torque-limited pendulum swing-up. State (theta, omega) with theta = 0
// hanging down and theta = pi upright; action is the hip torque.
//
// The integrator is semi-implicit Euler (omega first, then theta), which is
// symplectic on this system: with zero torque and zero friction the energy
// oscillates in a bounded band instead of drifting. The smooth-but-nonconvex
// environment: swing-up needs energy pumping, so greedy descent stalls.
struct PendulumParams {
  double mass = 1.0;       // kg, > 0
  double length = 1.0;     // m, > 0
  double gravity = 9.81;   // m/s^2, > 0
  double friction = 0.0;   // viscous joint friction, >= 0
  double tau_max = 2.0;    // torque bound, > 0; too weak for a direct lift
  double w_angle = 1.0;
  double w_omega = 0.1;
  double w_effort = 0.001;
  double terminal_scale = 10.0;
};

class PendulumEnv final : public DynamicsModel {
 public:
  explicit PendulumEnv(PendulumParams params = {});

  int state_dim() const override { return 2; }
  int action_dim() const override { return 1; }
  std::string name() const override { return "pendulum"; }

  void step(std::span<const double> x, std::span<const double> u, double dt,
            std::span<double> x_next) const override;
  double running_cost(std::span<const double> x,
                      std::span<const double> u) const override;
  double terminal_cost(std::span<const double> x) const override;
  void action_bounds(std::span<double> lo, std::span<double> hi) const override;

  // Total mechanical energy, zero level at the pivot height.
  double energy(std::span<const double> x) const;

  // Forward Euler variant of step(), exposed so tests can demonstrate the
  // secular energy drift the production integrator avoids.
  void step_forward_euler(std::span<const double> x, std::span<const double> u,
                          double dt, std::span<double> x_next) const;

  const PendulumParams& params() const { return params_; }

 private:
  double accel(double theta, double omega, double tau) const;

  PendulumParams params_;
};

}  // namespace ampc

#endif  // AMPC_ENVS_PENDULUM_HPP_
