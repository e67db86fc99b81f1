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

#include "ampc/envs/contact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ampc/core/errors.hpp"
#include "ampc/sampler/rng.hpp"

namespace ampc {

bool on_pad(const Pad& pad, double foot_x) {
  return std::abs(foot_x - pad.center_x) <= pad.radius;
}

double staged_contact_reward(std::span<const FootContact> feet, int stage_j,
                             std::span<const Pad> pads, double w_correct,
                             double w_wrong) {
  if (stage_j < 1 || stage_j > static_cast<int>(pads.size())) {
    throw ValidationError("staged_contact_reward: stage " +
                          std::to_string(stage_j) + " outside [1, " +
                          std::to_string(pads.size()) + "]");
  }
  const Pad& current = pads[static_cast<size_t>(stage_j - 1)];
  const Pad* previous =
      stage_j >= 2 ? &pads[static_cast<size_t>(stage_j - 2)] : nullptr;

  int n_correct = 0;
  int n_wrong = 0;
  int n_prev_valid = 0;
  for (const FootContact& foot : feet) {
    if (!foot.in_contact) continue;
    if (on_pad(current, foot.x)) {
      ++n_correct;
    } else {
      ++n_wrong;
      if (previous != nullptr && on_pad(*previous, foot.x)) ++n_prev_valid;
    }
  }
  return w_correct * n_correct - w_wrong * (n_wrong - n_prev_valid);
}

ContactStageRecord make_stage_record(int stage, std::vector<double> r_values) {
  if (r_values.empty()) {
    throw ValidationError("make_stage_record: stage " + std::to_string(stage) +
                          " has an empty window");
  }
  ContactStageRecord rec;
  rec.stage = stage;
  rec.stage_min = *std::min_element(r_values.begin(), r_values.end());
  rec.r_values = std::move(r_values);
  return rec;
}

double total_contact_score(std::span<const ContactStageRecord> records,
                           int n_stages) {
  if (n_stages < 1) {
    throw ValidationError("total_contact_score: n_stages must be >= 1");
  }
  std::vector<bool> seen(static_cast<size_t>(n_stages), false);
  double total = 0.0;
  for (const ContactStageRecord& rec : records) {
    if (rec.stage < 1 || rec.stage > n_stages) {
      throw ValidationError("total_contact_score: record for stage " +
                            std::to_string(rec.stage) + " outside [1, " +
                            std::to_string(n_stages) + "]");
    }
    if (seen[static_cast<size_t>(rec.stage - 1)]) {
      throw ValidationError("total_contact_score: duplicate stage " +
                            std::to_string(rec.stage));
    }
    seen[static_cast<size_t>(rec.stage - 1)] = true;
    total += rec.stage_min;
  }
  for (int j = 0; j < n_stages; ++j) {
    if (!seen[static_cast<size_t>(j)]) {
      throw ValidationError("total_contact_score: missing stage " +
                            std::to_string(j + 1));
    }
  }
  return total;
}

double damped_torque(double tau, double omega, double gain) {
  return tau - gain * omega;
}

std::vector<Pad> random_pads(uint64_t seed, int count, double first_center,
                             double radius, double max_shift, double window) {
  if (count < 1) throw ValidationError("random_pads: count must be >= 1");
  if (radius <= 0.0) throw ValidationError("random_pads: radius must be > 0");
  if (window <= 0.0) throw ValidationError("random_pads: window must be > 0");

  RngStream rng(seed);
  std::vector<Pad> pads;
  pads.reserve(static_cast<size_t>(count));
  double center = first_center;
  for (int j = 0; j < count; ++j) {
    Pad pad;
    pad.center_x = center;
    pad.radius = radius;
    pad.t_min = window * j;
    pad.t_max = window * (j + 1);
    pads.push_back(pad);
    // Next target displaced uniformly in [-max_shift, +max_shift], keyed by
    // the stage index so the sequence is invariant to how it is consumed.
    RngStream stage_rng = rng.derive(static_cast<uint64_t>(j));
    center += (2.0 * stage_rng.next_uniform() - 1.0) * max_shift;
  }
  return pads;
}

}  // namespace ampc
