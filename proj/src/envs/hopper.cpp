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

#include "ampc/envs/hopper.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ampc/core/errors.hpp"

namespace ampc {
namespace {

// Foot counts as contacting once it presses into the ground model.
constexpr double kContactEps = 1e-6;

enum : int { kX = 0, kZ, kPhi, kR, kVx, kVz, kOmega, kVr, kClock };

}  // namespace

void HopperTask::validate() const {
  if (body_mass <= 0.0 || inertia <= 0.0 || leg_mass <= 0.0) {
    throw ValidationError("hopper: masses and inertia must be > 0");
  }
  if (gravity <= 0.0) throw ValidationError("hopper: gravity must be > 0");
  if (!(0.0 < r_min && r_min < r_max)) {
    throw ValidationError("hopper: need 0 < r_min < r_max");
  }
  if (leg_spring < 0.0) {
    throw ValidationError("hopper: leg_spring must be >= 0");
  }
  if (r_rest < r_min || r_rest > r_max) {
    throw ValidationError("hopper: r_rest must lie within [r_min, r_max]");
  }
  if (ground_stiffness <= 0.0) {
    throw ValidationError("hopper: ground_stiffness must be > 0");
  }
  if (ground_damping < 0.0 || friction_mu < 0.0 || friction_vel_gain < 0.0) {
    throw ValidationError("hopper: ground friction terms must be >= 0");
  }
  if (dt <= 0.0) throw ValidationError("hopper: dt must be > 0");
  for (size_t j = 0; j < pads.size(); ++j) {
    const Pad& pad = pads[j];
    if (pad.radius <= 0.0) {
      throw ValidationError("hopper: pad " + std::to_string(j + 1) +
                            " radius must be > 0");
    }
    if (!(pad.t_min < pad.t_max)) {
      throw ValidationError("hopper: pad " + std::to_string(j + 1) +
                            " window must have t_min < t_max");
    }
    if (j > 0 && pad.t_min < pads[j - 1].t_max) {
      throw ValidationError("hopper: pad " + std::to_string(j + 1) +
                            " window overlaps its predecessor");
    }
  }
}

HopperEnv::HopperEnv(HopperTask task) : task_(std::move(task)) {
  task_.validate();
}

FootContact HopperEnv::foot(std::span<const double> x) const {
  const double foot_z = x[kZ] - x[kR] * std::cos(x[kPhi]);
  FootContact f;
  f.x = x[kX] + x[kR] * std::sin(x[kPhi]);
  f.in_contact = foot_z <= kContactEps;
  return f;
}

int HopperEnv::stage_of(double clock) const {
  if (task_.pads.empty()) return 0;
  for (size_t j = 0; j < task_.pads.size(); ++j) {
    if (clock < task_.pads[j].t_max) return static_cast<int>(j + 1);
  }
  return static_cast<int>(task_.pads.size());
}

void HopperEnv::step(std::span<const double> x, std::span<const double> u,
                     double dt, std::span<double> x_next) const {
  const double s = std::sin(x[kPhi]);
  const double c = std::cos(x[kPhi]);
  const double tau = damped_torque(u[0] * task_.tau_scale, x[kOmega],
                                   task_.damping_gain);
  const double f_leg = u[1] * task_.force_scale;

  // Foot kinematics follow from the body state; the leg carries no state of
  // its own beyond (phi, r).
  const double foot_z = x[kZ] - x[kR] * c;
  const double vfx = x[kVx] + x[kVr] * s + x[kR] * c * x[kOmega];
  const double vfz = x[kVz] - x[kVr] * c + x[kR] * s * x[kOmega];

  double fn = 0.0;
  double ft = 0.0;
  if (foot_z < 0.0) {
    fn = std::max(0.0, -task_.ground_stiffness * foot_z -
                           task_.ground_damping * vfz);
    const double cap = task_.friction_mu * fn;
    ft = std::clamp(-task_.friction_vel_gain * vfx, -cap, cap);
  }
  // Guard the body itself against tunneling through the ground plane.
  double fb = 0.0;
  if (x[kZ] < 0.0) {
    fb = std::max(0.0, -task_.ground_stiffness * x[kZ] -
                           task_.ground_damping * x[kVz]);
  }

  const double ax = ft / task_.body_mass;
  const double az = (fn + fb) / task_.body_mass - task_.gravity;
  // Ground force decomposed along the leg axis (s, -c) and its normal
  // (c, s): the axial part loads the telescoping DOF, the normal part
  // torques the hip.
  const double f_axial = ft * s - fn * c;
  const double f_normal = ft * c + fn * s;
  // Gravity pulls the foot along the leg axis (s, -c): projection g * c.
  // The passive spring makes stance a force-free equilibrium and gives the
  // leg its bounce; the actuator works around it.
  const double f_spring = task_.leg_spring * (task_.r_rest - x[kR]);
  const double ar =
      (f_leg + f_spring + f_axial) / task_.leg_mass + task_.gravity * c;
  const double alpha = (tau + x[kR] * f_normal) / task_.inertia;

  double vx = x[kVx] + dt * ax;
  double vz = x[kVz] + dt * az;
  double omega = x[kOmega] + dt * alpha;
  double vr = x[kVr] + dt * ar;

  double px = x[kX] + dt * vx;
  double pz = x[kZ] + dt * vz;
  double phi = x[kPhi] + dt * omega;
  double r = x[kR] + dt * vr;
  if (r < task_.r_min) {  // rail stops absorb the closing velocity
    r = task_.r_min;
    vr = std::max(0.0, vr);
  } else if (r > task_.r_max) {
    r = task_.r_max;
    vr = std::min(0.0, vr);
  }

  x_next[kX] = px;
  x_next[kZ] = pz;
  x_next[kPhi] = phi;
  x_next[kR] = r;
  x_next[kVx] = vx;
  x_next[kVz] = vz;
  x_next[kOmega] = omega;
  x_next[kVr] = vr;
  x_next[kClock] = x[kClock] + dt;
}

double HopperEnv::state_cost(std::span<const double> x) const {
  double cost = task_.w_height * (x[kZ] - task_.z_ref) * (x[kZ] - task_.z_ref) +
                task_.w_upright * x[kPhi] * x[kPhi];
  const int j = stage_of(x[kClock]);
  if (j > 0) {
    const Pad& target = task_.pads[static_cast<size_t>(j - 1)];
    const double miss = x[kX] - target.center_x;
    cost += task_.w_track * miss * miss;
    const FootContact f = foot(x);
    cost -= task_.contact_weight *
            staged_contact_reward(std::span<const FootContact>(&f, 1), j,
                                  task_.pads, task_.w_correct, task_.w_wrong);
  }
  return cost;
}

double HopperEnv::running_cost(std::span<const double> x,
                               std::span<const double> u) const {
  return state_cost(x) + task_.w_effort * (u[0] * u[0] + u[1] * u[1]);
}

double HopperEnv::terminal_cost(std::span<const double> x) const {
  return state_cost(x);
}

void HopperEnv::action_bounds(std::span<double> lo,
                              std::span<double> hi) const {
  lo[0] = -1.0;
  hi[0] = 1.0;
  lo[1] = -1.0;
  hi[1] = 1.0;
}

State HopperEnv::start_state() const {
  const double x0 = task_.pads.empty() ? 0.0 : task_.pads[0].center_x;
  State s(std::vector<double>(9, 0.0));
  s.values[kX] = x0;
  s.values[kZ] = task_.z_ref;
  s.values[kR] = std::clamp(task_.z_ref, task_.r_min, task_.r_max);
  return s;
}

std::vector<ContactStageRecord> contact_records_from_trace(
    const HopperTask& task, std::span<const State> states) {
  if (task.pads.empty()) {
    throw ValidationError("contact_records_from_trace: task has no pads");
  }
  HopperEnv env(task);
  const int n_stages = static_cast<int>(task.pads.size());
  std::vector<std::vector<double>> buckets(task.pads.size());
  for (const State& s : states) {
    const double clock = s.values[8];
    for (size_t j = 0; j < task.pads.size(); ++j) {
      if (clock >= task.pads[j].t_min && clock < task.pads[j].t_max) {
        const FootContact f = env.foot(s.values);
        buckets[j].push_back(staged_contact_reward(
            std::span<const FootContact>(&f, 1), static_cast<int>(j + 1),
            task.pads, task.w_correct, task.w_wrong));
        break;
      }
    }
  }
  std::vector<ContactStageRecord> records;
  records.reserve(task.pads.size());
  for (int j = 0; j < n_stages; ++j) {
    if (buckets[static_cast<size_t>(j)].empty()) {
      throw ValidationError("contact_records_from_trace: no trace samples in "
                            "stage " + std::to_string(j + 1) + " window");
    }
    records.push_back(
        make_stage_record(j + 1, std::move(buckets[static_cast<size_t>(j)])));
  }
  return records;
}

double hopper_contact_score(const HopperTask& task,
                            std::span<const State> states) {
  const std::vector<ContactStageRecord> records =
      contact_records_from_trace(task, states);
  return total_contact_score(records, static_cast<int>(task.pads.size()));
}

}  // namespace ampc
