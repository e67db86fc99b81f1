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

#include "ampc/core/types.hpp"

#include "ampc/core/errors.hpp"

namespace ampc {

ControlSequence::ControlSequence(int horizon, int action_dim)
    : horizon_(horizon), action_dim_(action_dim) {
  if (horizon < 1) throw ValidationError("ControlSequence: horizon must be >= 1");
  if (action_dim < 1) throw ValidationError("ControlSequence: action_dim must be >= 1");
  values_.assign(static_cast<size_t>(horizon) * action_dim, 0.0);
}

ControlSequence ControlSequence::constant(int horizon, int action_dim, double value) {
  ControlSequence out(horizon, action_dim);
  for (double& v : out.values_) v = value;
  return out;
}

std::span<double> ControlSequence::row(int h) {
  return {values_.data() + static_cast<size_t>(h) * action_dim_,
          static_cast<size_t>(action_dim_)};
}

std::span<const double> ControlSequence::row(int h) const {
  return {values_.data() + static_cast<size_t>(h) * action_dim_,
          static_cast<size_t>(action_dim_)};
}

}  // namespace ampc
