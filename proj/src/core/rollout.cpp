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

#include "ampc/core/rollout.hpp"

#include <cmath>

#include <algorithm>
#include <limits>
#include <vector>

#include "ampc/core/errors.hpp"
#include "ampc/core/parallel.hpp"

namespace ampc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Workspace {
  std::vector<double> x, x_next, u, lo, hi;

  void init(const DynamicsModel& model) {
    x.resize(model.state_dim());
    x_next.resize(model.state_dim());
    u.resize(model.action_dim());
    lo.resize(model.action_dim());
    hi.resize(model.action_dim());
    model.action_bounds(lo, hi);
  }
};

bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

// Integrates base (+ optional noise) from x0. Returns the total cost, or
// +inf with *diverged_step set when a state or cost goes non-finite. When
// `full` is non-null, per-step costs and the state trace are recorded; the
// scalar accumulation is identical either way.
double roll_impl(const DynamicsModel& model, std::span<const double> x0,
                 std::span<const double> base, const double* noise, int horizon,
                 double dt, Workspace& ws, RolloutResult* full,
                 int* diverged_step) {
  const int d_u = model.action_dim();
  std::copy(x0.begin(), x0.end(), ws.x.begin());
  if (full != nullptr) {
    full->state_trace.insert(full->state_trace.end(), ws.x.begin(), ws.x.end());
  }

  double total = 0.0;
  for (int h = 0; h < horizon; ++h) {
    const double* row = base.data() + static_cast<size_t>(h) * d_u;
    for (int j = 0; j < d_u; ++j) {
      double a = row[j];
      if (noise != nullptr) a += noise[static_cast<size_t>(h) * d_u + j];
      ws.u[j] = std::clamp(a, ws.lo[j], ws.hi[j]);
    }
    const double c = model.running_cost(ws.x, ws.u);
    model.step(ws.x, ws.u, dt, ws.x_next);
    if (!std::isfinite(c) || !all_finite(ws.x_next)) {
      if (diverged_step != nullptr) *diverged_step = h;
      return kInf;
    }
    total += c;
    ws.x.swap(ws.x_next);
    if (full != nullptr) {
      full->per_step_costs.push_back(c);
      full->state_trace.insert(full->state_trace.end(), ws.x.begin(), ws.x.end());
    }
  }

  const double cf = model.terminal_cost(ws.x);
  if (!std::isfinite(cf)) {
    if (diverged_step != nullptr) *diverged_step = horizon;
    return kInf;
  }
  if (full != nullptr) full->terminal_cost = cf;
  total += cf;
  return total;
}

void check_plan(const DynamicsModel& model, const State& x0,
                const ControlSequence& plan, double dt) {
  if (plan.horizon() < 1) throw ValidationError("rollout: empty plan");
  if (plan.action_dim() != model.action_dim()) {
    throw ValidationError("rollout: plan action_dim does not match model");
  }
  if (x0.dim() != model.state_dim()) {
    throw ValidationError("rollout: x0 dimension does not match model");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("rollout: dt must be positive and finite");
  }
  if (!all_finite(x0.values)) {
    throw ValidationError("rollout: x0 must be finite");
  }
}

}  // namespace

RolloutResult rollout(const DynamicsModel& model, const State& x0,
                      const ControlSequence& plan, double dt, bool record_trace) {
  check_plan(model, x0, plan, dt);
  Workspace ws;
  ws.init(model);

  RolloutResult out;
  RolloutResult* full = nullptr;
  if (record_trace) {
    out.per_step_costs.reserve(plan.horizon());
    out.state_trace.reserve(static_cast<size_t>(plan.horizon() + 1) * model.state_dim());
    full = &out;
  }
  int diverged_step = -1;
  const double total = roll_impl(model, x0.values, plan.flat(), nullptr,
                                 plan.horizon(), dt, ws, full, &diverged_step);
  if (!std::isfinite(total)) {
    throw DivergenceError("rollout: non-finite state or cost", diverged_step);
  }
  out.total_cost = total;
  return out;
}

std::vector<double> rollout_batch(const DynamicsModel& model, const State& x0,
                                  std::span<const ControlSequence> candidates,
                                  double dt, int threads) {
  std::vector<double> costs(candidates.size(), kInf);
  if (candidates.empty()) return costs;
  for (const ControlSequence& c : candidates) check_plan(model, x0, c, dt);

  parallel_for(static_cast<int64_t>(candidates.size()), threads,
               [&](int64_t begin, int64_t end) {
                 Workspace ws;
                 ws.init(model);
                 for (int64_t k = begin; k < end; ++k) {
                   costs[k] = roll_impl(model, x0.values, candidates[k].flat(),
                                        nullptr, candidates[k].horizon(), dt, ws,
                                        nullptr, nullptr);
                 }
               });
  return costs;
}

std::vector<double> rollout_batch_rows(const DynamicsModel& model,
                                       const State& x0,
                                       std::span<const double> plan_rows,
                                       int n_candidates, int horizon, double dt,
                                       int threads) {
  if (n_candidates < 1) throw ValidationError("rollout_batch_rows: n_candidates must be >= 1");
  if (horizon < 1) throw ValidationError("rollout_batch_rows: horizon must be >= 1");
  if (x0.dim() != model.state_dim()) {
    throw ValidationError("rollout_batch_rows: x0 dimension does not match model");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("rollout_batch_rows: dt must be positive and finite");
  }
  if (!all_finite(x0.values)) {
    throw ValidationError("rollout_batch_rows: x0 must be finite");
  }
  const size_t len = static_cast<size_t>(horizon) * model.action_dim();
  if (plan_rows.size() != len * static_cast<size_t>(n_candidates)) {
    throw ValidationError("rollout_batch_rows: plan buffer size mismatch");
  }

  std::vector<double> costs(n_candidates, kInf);
  parallel_for(n_candidates, threads, [&](int64_t begin, int64_t end) {
    Workspace ws;
    ws.init(model);
    for (int64_t k = begin; k < end; ++k) {
      const std::span<const double> plan{plan_rows.data() + static_cast<size_t>(k) * len, len};
      costs[k] = roll_impl(model, x0.values, plan, nullptr, horizon, dt, ws,
                           nullptr, nullptr);
    }
  });
  return costs;
}

std::vector<double> rollout_batch_perturbed(const DynamicsModel& model,
                                            const State& x0,
                                            const ControlSequence& base,
                                            std::span<const double> noise_rows,
                                            int n_samples, double dt,
                                            int threads) {
  check_plan(model, x0, base, dt);
  if (n_samples < 1) throw ValidationError("rollout_batch_perturbed: n_samples must be >= 1");
  const size_t len = base.flat().size();
  if (noise_rows.size() != len * static_cast<size_t>(n_samples)) {
    throw ValidationError("rollout_batch_perturbed: noise buffer size mismatch");
  }

  std::vector<double> costs(n_samples, kInf);
  parallel_for(n_samples, threads, [&](int64_t begin, int64_t end) {
    Workspace ws;
    ws.init(model);
    for (int64_t k = begin; k < end; ++k) {
      const double* noise = noise_rows.data() + static_cast<size_t>(k) * len;
      costs[k] = roll_impl(model, x0.values, base.flat(), noise, base.horizon(),
                           dt, ws, nullptr, nullptr);
    }
  });
  return costs;
}

}  // namespace ampc
