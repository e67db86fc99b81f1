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

#include "ampc/envs/pendulum.hpp"

#include <cmath>

#include "ampc/core/errors.hpp"

namespace ampc {
namespace {

// Wraps an angle to [-pi, pi).
double wrap_angle(double a) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  a = std::fmod(a + M_PI, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a - M_PI;
}

}  // namespace

PendulumEnv::PendulumEnv(PendulumParams params) : params_(params) {
  if (params_.mass <= 0.0 || params_.length <= 0.0 || params_.gravity <= 0.0) {
    throw ValidationError("pendulum: mass, length, gravity must be > 0");
  }
  if (params_.friction < 0.0) {
    throw ValidationError("pendulum: friction must be >= 0");
  }
  if (params_.tau_max <= 0.0) {
    throw ValidationError("pendulum: tau_max must be > 0");
  }
}

double PendulumEnv::accel(double theta, double omega, double tau) const {
  const double inertia = params_.mass * params_.length * params_.length;
  return (tau - params_.friction * omega) / inertia -
         (params_.gravity / params_.length) * std::sin(theta);
}

void PendulumEnv::step(std::span<const double> x, std::span<const double> u,
                       double dt, std::span<double> x_next) const {
  const double omega = x[1] + dt * accel(x[0], x[1], u[0]);
  x_next[0] = x[0] + dt * omega;
  x_next[1] = omega;
}

void PendulumEnv::step_forward_euler(std::span<const double> x,
                                     std::span<const double> u, double dt,
                                     std::span<double> x_next) const {
  x_next[0] = x[0] + dt * x[1];
  x_next[1] = x[1] + dt * accel(x[0], x[1], u[0]);
}

double PendulumEnv::running_cost(std::span<const double> x,
                                 std::span<const double> u) const {
  const double a = wrap_angle(x[0] - M_PI);
  return params_.w_angle * a * a + params_.w_omega * x[1] * x[1] +
         params_.w_effort * u[0] * u[0];
}

double PendulumEnv::terminal_cost(std::span<const double> x) const {
  const double a = wrap_angle(x[0] - M_PI);
  return params_.terminal_scale *
         (params_.w_angle * a * a + params_.w_omega * x[1] * x[1]);
}

void PendulumEnv::action_bounds(std::span<double> lo,
                                std::span<double> hi) const {
  lo[0] = -params_.tau_max;
  hi[0] = params_.tau_max;
}

double PendulumEnv::energy(std::span<const double> x) const {
  const double inertia = params_.mass * params_.length * params_.length;
  return 0.5 * inertia * x[1] * x[1] -
         params_.mass * params_.gravity * params_.length * std::cos(x[0]);
}

}  // namespace ampc
