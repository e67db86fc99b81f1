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

#include "ampc/landscape/bundled.hpp"

#include <span>
#include <utility>
#include <vector>

namespace ampc {

BundledLandscape bundled_wall_jump_landscape(int n_per_axis, double lambda,
                                             int horizon) {
  WallJumpTask task;  // stock parameters
  std::vector<GridAxis> axes = {GridAxis{0.0, 1.0, n_per_axis},
                                GridAxis{-1.0, 1.0, n_per_axis}};
  GridDensity density = target_density(
      [&task, horizon](std::span<const double> u) {
        return wall_jump_cost(task, u[0], u[1], horizon);
      },
      std::move(axes), lambda);
  return BundledLandscape{task, horizon, lambda, std::move(density),
                          {0.0, 0.005, 0.01, 0.02, 0.07}};
}

}  // namespace ampc
