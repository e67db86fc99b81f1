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

#ifndef AMPC_ENVS_CONTACT_HPP_
#define AMPC_ENVS_CONTACT_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace ampc {

// Default derivative gain for joint-velocity damping of torque commands.
inline constexpr double kJointDampingGain = 0.65;

// Default contact reward / penalty weights for staged contact scoring.
inline constexpr double kContactRewardWeight = 0.1;
inline constexpr double kContactPenaltyWeight = 0.1;

// Default stage window length in seconds: each contact target is active for
// one second before the next one takes over.
inline constexpr double kStageWindowSeconds = 1.0;

// A contact target: a segment of ground centered at `center_x` that feet
// should stand on during the half-open time window [t_min, t_max).
struct Pad {
  double center_x = 0.0;
  double radius = 0.1;   // > 0
  double t_min = 0.0;
  double t_max = 1.0;    // > t_min; windows of consecutive pads are disjoint
};

// Snapshot of one foot for contact scoring.
struct FootContact {
  double x = 0.0;        // horizontal foot position
  bool in_contact = false;
};

// Per-stage summary of the contact reward over that stage's time window.
// stage_min is the worst-case value; the aggregate score sums these minima,
// so a single bad instant anywhere in a window costs the whole stage.
struct ContactStageRecord {
  int stage = 0;                  // 1-based
  std::vector<double> r_values;   // reward samples inside [t_min, t_max)
  double stage_min = 0.0;
};

// True when the foot position lies on the pad segment (inclusive edges).
bool on_pad(const Pad& pad, double foot_x);

// Staged contact reward for stage j (1-based):
//
//   r = w_correct * n_correct - w_wrong * (n_wrong - n_prev_valid)
//
// n_correct counts contacting feet on the stage-j pad, n_wrong counts
// contacting feet anywhere else, and n_prev_valid counts the subset of the
// wrong feet that still stand on the stage-(j-1) pad. The last term cancels
// the penalty for feet that have not yet left their previous target, so a
// foot is never punished for lingering where it was just told to be. For
// j = 1 there is no previous target and n_prev_valid is 0.
//
// Throws ValidationError when j is outside [1, pads.size()].
double staged_contact_reward(std::span<const FootContact> feet, int stage_j,
                             std::span<const Pad> pads,
                             double w_correct = kContactRewardWeight,
                             double w_wrong = kContactPenaltyWeight);

// Builds the per-stage record; stage_min = min over r_values.
// Throws ValidationError when r_values is empty (a stage must be observed).
ContactStageRecord make_stage_record(int stage, std::vector<double> r_values);

// Total score: sum over stages 1..n_stages of that stage's minimum.
// Requires exactly one record per stage; a missing or duplicate stage is a
// ValidationError, not a zero.
double total_contact_score(std::span<const ContactStageRecord> records,
                           int n_stages);

// Effective torque after joint-velocity damping: tau_hat = tau - gain * omega.
// Applied to the commanded torque before the dynamics step.
double damped_torque(double tau, double omega, double gain = kJointDampingGain);

// Generates `count` pads with consecutive 1 s windows. Pad j+1 is displaced
// from pad j by a uniform draw in [-max_shift, +max_shift]; the draws come
// from a seeded counter-based stream, so a (seed, count) pair is a complete
// description of the sequence.
std::vector<Pad> random_pads(uint64_t seed, int count, double first_center,
                             double radius, double max_shift = 0.65,
                             double window = kStageWindowSeconds);

}  // namespace ampc

#endif  // AMPC_ENVS_CONTACT_HPP_
