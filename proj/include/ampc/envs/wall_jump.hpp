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

#ifndef AMPC_ENVS_WALL_JUMP_HPP_
#define AMPC_ENVS_WALL_JUMP_HPP_

#include <span>
#include <string>
#include <vector>

#include "ampc/core/dynamics.hpp"
#include "ampc/core/types.hpp"

namespace ampc {

// Planar point mass that must clear a wall to reach a goal on the far side.
//
// State (x, z, vx, vz). Action u = (jump, thrust): `jump` in [0, 1] sets the
// vertical launch speed, but only while the mass stands on the ground, and
// `thrust` in [-1, 1] is horizontal force. Flight is ballistic; landing is
// inelastic (vz zeroed). The grounded gate on the jump action and the
// penetration penalty make the cost landscape non-smooth and bimodal: a wide
// shallow basin (stop short of the wall) and a narrow deep one (launch hard
// enough, early enough, to clear it).
//
// The wall is priced, not simulated: inside a band of half-width `band_half`
// around wall_x, every step pays penalty_weight * max(0, wall_height - z).
// Weights absorb any dt scaling; running_cost itself is per step.
struct WallJumpTask {
  double mass = 1.0;            // kg, > 0
  double gravity = 9.81;        // m/s^2, > 0
  double wall_x = 1.0;          // m
  double wall_height = 1.1;     // m, > 0
  double band_half = 0.15;      // m, > 0; the wall band is 2 * band_half wide
  double goal_x = 2.0;          // m
  double penalty_weight = 60.0; // > 0
  double effort_weight = 0.02;  // >= 0
  double jump_impulse = 5.0;    // N*s; launch speed at jump=1 is this / mass
  double thrust_force = 5.0;    // N at |thrust| = 1
  double start_x = 0.0;
  double success_tol = 0.25;    // m, > 0
  double dt = 0.05;             // s, > 0; the task's native control period

  void validate() const;
};

class WallJumpEnv final : public DynamicsModel {
 public:
  explicit WallJumpEnv(WallJumpTask task = {});

  int state_dim() const override { return 4; }
  int action_dim() const override { return 2; }
  std::string name() const override { return "wall_jump"; }

  void step(std::span<const double> x, std::span<const double> u, double dt,
            std::span<double> x_next) const override;
  double running_cost(std::span<const double> x,
                      std::span<const double> u) const override;
  double terminal_cost(std::span<const double> x) const override;
  void action_bounds(std::span<double> lo, std::span<double> hi) const override;

  // Depth by which a state pokes into the wall band: max(0, wall_height - z)
  // when |x - wall_x| <= band_half, else 0.
  double penetration(std::span<const double> x) const;

  State start_state() const;

  const WallJumpTask& task() const { return task_; }

 private:
  WallJumpTask task_;
};

// Episode outcome on a realized state trace: the mass crossed the wall band
// without ever dipping below the wall top inside it, and finished within
// success_tol of the goal. Scraping through the band on the ground reaches
// the same x but does not count.
bool wall_jump_success(const WallJumpTask& task,
                       std::span<const State> states);

// Collapses the task to two decision variables for landscape analysis and
// brute-force search: launch speed fraction `jump` spent entirely on the
// first step, constant `thrust` thereafter. Returns the total rollout cost
// of that plan over `horizon` steps at the task's dt.
double wall_jump_cost(const WallJumpTask& task, double jump, double thrust,
                      int horizon);

}  // namespace ampc

#endif  // AMPC_ENVS_WALL_JUMP_HPP_
