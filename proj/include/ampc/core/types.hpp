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

#ifndef AMPC_CORE_TYPES_HPP_
#define AMPC_CORE_TYPES_HPP_

#include <span>
#include <vector>

namespace ampc {

// Dense row-major H x d_u action plan. Row h is the action applied over
// step h; a plan of horizon H drives H integration steps and H+1 states.
// The same container doubles as any entry-aligned H x d_u array (per-entry
// noise scales, score estimates) since those align with the plan slot for
// slot.
class ControlSequence {
 public:
  ControlSequence() = default;
  ControlSequence(int horizon, int action_dim);  // zero-initialized
  static ControlSequence constant(int horizon, int action_dim, double value);

  int horizon() const { return horizon_; }
  int action_dim() const { return action_dim_; }
  int size() const { return horizon_ * action_dim_; }

  double& at(int h, int j) { return values_[static_cast<size_t>(h) * action_dim_ + j]; }
  double at(int h, int j) const { return values_[static_cast<size_t>(h) * action_dim_ + j]; }

  std::span<double> row(int h);
  std::span<const double> row(int h) const;
  std::span<double> flat() { return values_; }
  std::span<const double> flat() const { return values_; }

  bool same_shape(const ControlSequence& other) const {
    return horizon_ == other.horizon_ && action_dim_ == other.action_dim_;
  }

 private:
  int horizon_ = 0;
  int action_dim_ = 0;
  std::vector<double> values_;
};

struct State {
  std::vector<double> values;

  State() = default;
  explicit State(std::vector<double> v) : values(std::move(v)) {}
  int dim() const { return static_cast<int>(values.size()); }
};

// Cost breakdown of one trajectory. total_cost is exactly the sequential
// sum of per-step running costs plus terminal_cost; rollout() accumulates
// in step order so the identity holds bit-for-bit.
struct RolloutResult {
  double total_cost = 0.0;
  double terminal_cost = 0.0;
  // H running costs; filled only when a trace is requested.
  std::vector<double> per_step_costs;
  // (H+1) x d_x states, x0 first; filled only when a trace is requested.
  std::vector<double> state_trace;
};

}  // namespace ampc

#endif  // AMPC_CORE_TYPES_HPP_
