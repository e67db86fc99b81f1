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
//
// Brute-force ground-truth instruments shared by the unit and acceptance
// suites. Nothing here is clever on purpose: these provide the answers the
// solvers are judged against.

#ifndef AMPC_TESTS_SUPPORT_GRID_ORACLE_HPP_
#define AMPC_TESTS_SUPPORT_GRID_ORACLE_HPP_

#include <algorithm>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "ampc/core/dynamics.hpp"
#include "ampc/core/rollout.hpp"
#include "ampc/core/types.hpp"
#include "ampc/envs/wall_jump.hpp"

namespace ampc::testing {

// Dense scan of the two-variable wall-jump cost over
// [0, 1] x [-1, 1]. costs is row-major: cell (j, t) at j * n_thrust + t.
// final_x records where each plan ends up, which is what separates the
// "cleared the wall" basin from the "stayed home" one.
struct WallJumpLandscape {
  int n_jump = 0;
  int n_thrust = 0;
  std::vector<double> costs;
  std::vector<double> final_x;
  double best_cost = 0.0;
  int best_jump = 0;
  int best_thrust = 0;

  double jump_at(int j) const { return static_cast<double>(j) / (n_jump - 1); }
  double thrust_at(int t) const {
    return -1.0 + 2.0 * static_cast<double>(t) / (n_thrust - 1);
  }
};

inline WallJumpLandscape scan_wall_jump(const WallJumpTask& task, int horizon,
                                        int n_jump, int n_thrust) {
  WallJumpEnv env(task);
  WallJumpLandscape scan;
  scan.n_jump = n_jump;
  scan.n_thrust = n_thrust;
  scan.costs.resize(static_cast<size_t>(n_jump) * n_thrust);
  scan.final_x.resize(scan.costs.size());
  scan.best_cost = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n_jump; ++j) {
    for (int t = 0; t < n_thrust; ++t) {
      // Same plan shape as wall_jump_cost: impulse on the first step,
      // constant thrust throughout.
      ControlSequence plan(horizon, 2);
      plan.at(0, 0) = scan.jump_at(j);
      for (int h = 0; h < horizon; ++h) plan.at(h, 1) = scan.thrust_at(t);
      const RolloutResult res =
          rollout(env, env.start_state(), plan, task.dt, true);
      const double c = res.total_cost;
      scan.costs[static_cast<size_t>(j) * n_thrust + t] = c;
      scan.final_x[static_cast<size_t>(j) * n_thrust + t] =
          res.state_trace[res.state_trace.size() - 4];
      if (c < scan.best_cost) {
        scan.best_cost = c;
        scan.best_jump = j;
        scan.best_thrust = t;
      }
    }
  }
  return scan;
}

// Cells strictly below every 8-neighbor. Returns their flat indices sorted
// by cost ascending, so [0] is the global minimum.
inline std::vector<int> grid_local_minima(const std::vector<double>& costs,
                                          int nx, int ny) {
  std::vector<int> minima;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const double c = costs[static_cast<size_t>(i) * ny + j];
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1 && is_min; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ni = i + di;
          const int nj = j + dj;
          if (ni < 0 || ni >= nx || nj < 0 || nj >= ny) continue;
          if (costs[static_cast<size_t>(ni) * ny + nj] <= c) is_min = false;
        }
      }
      if (is_min) minima.push_back(i * ny + j);
    }
  }
  std::sort(minima.begin(), minima.end(), [&](int a, int b) {
    return costs[static_cast<size_t>(a)] < costs[static_cast<size_t>(b)];
  });
  return minima;
}

// Lowest threshold at which cells a and b join the same connected component
// when cells activate in cost order (8-connectivity). This is the min-max
// saddle value separating the two basins.
inline double grid_merge_barrier(const std::vector<double>& costs, int nx,
                                 int ny, int cell_a, int cell_b) {
  const int n = nx * ny;
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return costs[static_cast<size_t>(a)] < costs[static_cast<size_t>(b)];
  });
  std::vector<int> parent(static_cast<size_t>(n), -1);  // -1 = inactive
  const auto find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  for (int cell : order) {
    parent[static_cast<size_t>(cell)] = cell;
    const int i = cell / ny;
    const int j = cell % ny;
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) continue;
        const int ni = i + di;
        const int nj = j + dj;
        if (ni < 0 || ni >= nx || nj < 0 || nj >= ny) continue;
        const int neighbor = ni * ny + nj;
        if (parent[static_cast<size_t>(neighbor)] < 0) continue;
        const int ra = find(cell);
        const int rb = find(neighbor);
        if (ra != rb) parent[static_cast<size_t>(ra)] = rb;
      }
    }
    if (parent[static_cast<size_t>(cell_a)] >= 0 &&
        parent[static_cast<size_t>(cell_b)] >= 0 &&
        find(cell_a) == find(cell_b)) {
      return costs[static_cast<size_t>(cell)];
    }
  }
  return std::numeric_limits<double>::infinity();
}

// Exhaustive enumeration of every plan whose per-step action takes one of
// `levels` evenly spaced values in [lo, hi], for a scalar-action model.
// Depth-first with shared prefixes, so the cost is ~levels^horizon steps.
struct PlanOracleResult {
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<double> best_plan;
};

inline void plan_oracle_dfs(const DynamicsModel& model, int horizon,
                            const std::vector<double>& grid, double dt,
                            int depth, const std::vector<double>& x,
                            double cost_so_far, std::vector<double>& plan,
                            PlanOracleResult& result) {
  if (depth == horizon) {
    const double total = cost_so_far + model.terminal_cost(x);
    if (total < result.best_cost) {
      result.best_cost = total;
      result.best_plan = plan;
    }
    return;
  }
  std::vector<double> x_next(x.size());
  for (double u : grid) {
    const double u_arr[1] = {u};
    const double c =
        cost_so_far + model.running_cost(x, std::span<const double>(u_arr, 1));
    model.step(x, std::span<const double>(u_arr, 1), dt,
               std::span<double>(x_next));
    plan[static_cast<size_t>(depth)] = u;
    plan_oracle_dfs(model, horizon, grid, dt, depth + 1, x_next, c, plan,
                    result);
  }
}

inline PlanOracleResult exhaustive_plan_oracle(const DynamicsModel& model,
                                               const State& x0, int horizon,
                                               int levels, double dt) {
  std::vector<double> lo(1), hi(1);
  model.action_bounds(std::span<double>(lo), std::span<double>(hi));
  std::vector<double> grid(static_cast<size_t>(levels));
  for (int i = 0; i < levels; ++i) {
    grid[static_cast<size_t>(i)] =
        lo[0] + (hi[0] - lo[0]) * static_cast<double>(i) / (levels - 1);
  }
  PlanOracleResult result;
  std::vector<double> plan(static_cast<size_t>(horizon), 0.0);
  plan_oracle_dfs(model, horizon, grid, dt, 0, x0.values, 0.0, plan, result);
  return result;
}

}  // namespace ampc::testing

#endif  // AMPC_TESTS_SUPPORT_GRID_ORACLE_HPP_
