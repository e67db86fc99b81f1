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

#ifndef AMPC_ENVS_HOPPER_HPP_
#define AMPC_ENVS_HOPPER_HPP_

#include <span>
#include <string>
#include <vector>

#include "ampc/core/dynamics.hpp"
#include "ampc/core/types.hpp"
#include "ampc/envs/contact.hpp"

namespace ampc {

// Planar one-legged hopper: a body at (x, z) with a telescoping leg of
// length r hanging at hip angle phi (0 = straight down). Actions are the hip
// torque command and the leg extension force, both normalized to [-1, 1].
//
// This is a deliberately simple analog of an articulated legged system, not
// a reproduction of one: the leg is massless for body dynamics, ground
// contact is a spring-damper penalty on foot penetration with a velocity-
// based friction force capped at mu * Fn, and the leg actuator couples to the
// body only through that ground force. Torque commands pass through
// damped_torque() before acting, mirroring joint-velocity damping on real
// actuators.
//
// State layout (9 entries): x, z, phi, r, vx, vz, omega, vr, clock.
// The trailing clock advances by dt each step. It exists because the staged
// contact reward is a function of absolute task time (each pad owns a time
// window); folding the clock into the state keeps step() and running_cost()
// pure functions of (state, action).
struct HopperTask {
  double body_mass = 1.0;       // kg, > 0
  double inertia = 0.1;         // leg rotational inertia about the hip, > 0
  double leg_mass = 0.2;        // effective mass of the telescoping DOF, > 0
  double gravity = 9.81;
  double r_min = 0.3;           // leg length rails, 0 < r_min < r_max
  double r_max = 0.8;
  double leg_spring = 100.0;    // N/m passive spring holding r at r_rest
  double r_rest = 0.55;         // spring rest length, within [r_min, r_max]
  double tau_scale = 2.0;       // N*m at |u0| = 1
  double force_scale = 30.0;    // N at |u1| = 1
  double damping_gain = kJointDampingGain;  // joint-velocity damping on tau
  double ground_stiffness = 300.0;  // N/m, > 0
  double ground_damping = 15.0;     // N*s/m, >= 0
  double friction_mu = 1.0;         // Coulomb cap on tangential force, >= 0
  double friction_vel_gain = 50.0;  // tangential force per unit slip speed
  std::vector<Pad> pads;            // contact targets; may be empty
  double w_correct = kContactRewardWeight;
  double w_wrong = kContactPenaltyWeight;
  double contact_weight = 1.0;  // scales -r_con inside the running cost
  double w_track = 1.0;         // (x - active pad center)^2
  double w_height = 0.5;        // (z - z_ref)^2
  double w_upright = 0.2;       // phi^2
  double w_effort = 0.001;      // |u|^2
  double z_ref = 0.45;          // nominal body height
  double dt = 0.02;             // native control period, 50 Hz

  void validate() const;
};

class HopperEnv final : public DynamicsModel {
 public:
  explicit HopperEnv(HopperTask task = {});

  int state_dim() const override { return 9; }
  int action_dim() const override { return 2; }
  std::string name() const override { return "hopper"; }

  void step(std::span<const double> x, std::span<const double> u, double dt,
            std::span<double> x_next) const override;
  double running_cost(std::span<const double> x,
                      std::span<const double> u) const override;
  double terminal_cost(std::span<const double> x) const override;
  void action_bounds(std::span<double> lo, std::span<double> hi) const override;

  // Foot position and contact flag derived from the state.
  FootContact foot(std::span<const double> x) const;

  // 1-based index of the pad whose window contains the clock, clamped to the
  // first/last stage outside the scheduled range. 0 when no pads are set.
  int stage_of(double clock) const;

  // Standing start centered over the first pad (or x = 0 without pads).
  State start_state() const;

  const HopperTask& task() const { return task_; }

 private:
  double state_cost(std::span<const double> x) const;

  HopperTask task_;
};

// Buckets per-step staged rewards from a realized state trace into one
// record per pad window and sums the per-stage minima. A stage window with
// no trace samples inside it is an error: an unobserved stage scores
// nothing, it does not score zero.
std::vector<ContactStageRecord> contact_records_from_trace(
    const HopperTask& task, std::span<const State> states);
double hopper_contact_score(const HopperTask& task,
                            std::span<const State> states);

}  // namespace ampc

#endif  // AMPC_ENVS_HOPPER_HPP_
