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

#include "ampc/envs/wall_jump.hpp"

#include <algorithm>
#include <cmath>

#include "ampc/core/errors.hpp"
#include "ampc/core/rollout.hpp"

namespace ampc {
namespace {

// Below this height the mass counts as standing on the ground.
constexpr double kGroundEps = 1e-9;

}  // namespace

void WallJumpTask::validate() const {
  if (mass <= 0.0) throw ValidationError("wall_jump: mass must be > 0");
  if (gravity <= 0.0) throw ValidationError("wall_jump: gravity must be > 0");
  if (wall_height <= 0.0) {
    throw ValidationError("wall_jump: wall_height must be > 0");
  }
  if (band_half <= 0.0) throw ValidationError("wall_jump: band_half must be > 0");
  if (penalty_weight <= 0.0) {
    throw ValidationError("wall_jump: penalty_weight must be > 0");
  }
  if (effort_weight < 0.0) {
    throw ValidationError("wall_jump: effort_weight must be >= 0");
  }
  if (jump_impulse <= 0.0 || thrust_force <= 0.0) {
    throw ValidationError("wall_jump: jump_impulse and thrust_force must be > 0");
  }
  if (success_tol <= 0.0) {
    throw ValidationError("wall_jump: success_tol must be > 0");
  }
  if (dt <= 0.0) throw ValidationError("wall_jump: dt must be > 0");
}

WallJumpEnv::WallJumpEnv(WallJumpTask task) : task_(task) { task_.validate(); }

void WallJumpEnv::step(std::span<const double> x, std::span<const double> u,
                       double dt, std::span<double> x_next) const {
  const bool grounded = x[1] <= kGroundEps;
  double vx = x[2] + dt * (u[1] * task_.thrust_force / task_.mass);
  double vz;
  if (grounded) {
    // The jump action is an impulse, available only with ground to push on.
    vz = u[0] > 0.0 ? u[0] * task_.jump_impulse / task_.mass : 0.0;
  } else {
    vz = x[3] - dt * task_.gravity;
  }
  double px = x[0] + dt * vx;
  double pz = x[1] + dt * vz;
  if (pz < 0.0) {  // inelastic landing
    pz = 0.0;
    vz = 0.0;
  }
  x_next[0] = px;
  x_next[1] = pz;
  x_next[2] = vx;
  x_next[3] = vz;
}

double WallJumpEnv::penetration(std::span<const double> x) const {
  if (std::abs(x[0] - task_.wall_x) > task_.band_half) return 0.0;
  return std::max(0.0, task_.wall_height - x[1]);
}

double WallJumpEnv::running_cost(std::span<const double> x,
                                 std::span<const double> u) const {
  return task_.effort_weight * (u[0] * u[0] + u[1] * u[1]) +
         task_.penalty_weight * penetration(x);
}

double WallJumpEnv::terminal_cost(std::span<const double> x) const {
  const double miss = x[0] - task_.goal_x;
  return miss * miss;
}

void WallJumpEnv::action_bounds(std::span<double> lo,
                                std::span<double> hi) const {
  lo[0] = 0.0;
  hi[0] = 1.0;
  lo[1] = -1.0;
  hi[1] = 1.0;
}

State WallJumpEnv::start_state() const {
  return State(std::vector<double>{task_.start_x, 0.0, 0.0, 0.0});
}

bool wall_jump_success(const WallJumpTask& task,
                       std::span<const State> states) {
  if (states.empty()) return false;
  WallJumpEnv env(task);
  bool crossed = false;
  for (const State& s : states) {
    if (env.penetration(s.values) > 0.0) return false;
    if (s.values[0] > task.wall_x) crossed = true;
  }
  const State& last = states[states.size() - 1];
  return crossed && std::abs(last.values[0] - task.goal_x) <= task.success_tol;
}

double wall_jump_cost(const WallJumpTask& task, double jump, double thrust,
                      int horizon) {
  if (horizon < 1) throw ValidationError("wall_jump_cost: horizon must be >= 1");
  WallJumpEnv env(task);
  ControlSequence plan(horizon, 2);
  plan.at(0, 0) = jump;
  for (int h = 0; h < horizon; ++h) plan.at(h, 1) = thrust;
  return rollout(env, env.start_state(), plan, task.dt).total_cost;
}

}  // namespace ampc
