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

#include "ampc/dial/controller.hpp"

#include <cmath>

#include <algorithm>
#include <limits>
#include <utility>

#include "ampc/core/errors.hpp"
#include "ampc/kernels/kernels.hpp"
#include "ampc/sampler/sampler.hpp"

namespace ampc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void fill_stage_diag(StageDiagnostics& diag, int stage,
                     const ControlSequence& sigma,
                     const PerturbationBatch& batch, double lambda) {
  diag.stage = stage;
  diag.sigma_max = 0.0;
  for (double s : sigma.flat()) diag.sigma_max = std::max(diag.sigma_max, s);
  diag.best_cost = kernels::active().reduce_min(
      batch.costs.data(), static_cast<int>(batch.costs.size()));
  diag.n_valid = 0;
  for (double c : batch.costs) {
    if (std::isfinite(c)) ++diag.n_valid;
  }
  diag.entropy = 0.0;
  diag.held = diag.n_valid == 0;
  if (!diag.held) {
    for (double w : softmax_weights(batch.costs, lambda)) {
      if (w > 0.0) diag.entropy -= w * std::log(w);
    }
  }
}

// Shared stage body for plan- and node-space updates. `positions` gives the
// horizon position of each row for the schedule; `to_plan` materializes a
// candidate's flat plan (or is null when rows are already plan rows).
ControlSequence annealed_stage(const DynamicsModel& model, const State& x0,
                               const ControlSequence& decision, int stage,
                               const DialConfig& cfg, const RngStream& stage_rng,
                               StageDiagnostics* diag, bool node_space) {
  cfg.validate(model);
  const int rows = decision.horizon();
  const int d_u = decision.action_dim();

  // Per-row kernel std from the two-axis schedule.
  ControlSequence sigma(rows, d_u);
  if (node_space) {
    const std::vector<double> pos = node_positions(rows, cfg.schedule.horizon);
    for (int s = 0; s < rows; ++s) {
      const double k = kernel_sigma(stage, pos[s], cfg.schedule);
      for (int j = 0; j < d_u; ++j) sigma.at(s, j) = k;
    }
  } else {
    sigma = trajectory_kernel(stage, cfg.schedule);
  }

  SamplerParams params;
  params.lambda = cfg.lambda;
  params.sigma = sigma;
  PerturbationBatch batch = sample_perturbations(params, cfg.n_samples, stage_rng);

  if (node_space) {
    // Materialize each candidate's interpolated plan, then score.
    const size_t plan_len = static_cast<size_t>(cfg.schedule.horizon) * d_u;
    std::vector<double> plans(plan_len * static_cast<size_t>(cfg.n_samples));
    ControlSequence candidate(rows, d_u);
    for (int k = 0; k < cfg.n_samples; ++k) {
      const std::span<const double> noise = batch.noise_row(k);
      for (int j = 0; j < decision.size(); ++j) {
        candidate.flat()[j] = decision.flat()[j] + noise[j];
      }
      const ControlSequence plan =
          nodes_to_controls(candidate, cfg.schedule.horizon, cfg.interp);
      std::copy(plan.flat().begin(), plan.flat().end(),
                plans.begin() + static_cast<size_t>(k) * plan_len);
    }
    batch.costs = rollout_batch_rows(model, x0, plans, cfg.n_samples,
                                     cfg.schedule.horizon, cfg.dt, cfg.threads);
  } else {
    batch.costs = rollout_batch_perturbed(model, x0, decision, batch.noise,
                                          cfg.n_samples, cfg.dt, cfg.threads);
  }

  if (diag != nullptr) fill_stage_diag(*diag, stage, sigma, batch, cfg.lambda);

  // Ascent route: estimate grad log p_1, precondition by the kernel.
  const ControlSequence score = estimate_score(batch, cfg.lambda, sigma);
  return score_ascent_step(decision, score, sigma);
}

}  // namespace

void DialConfig::validate(const DynamicsModel& model) const {
  schedule.validate();
  if (schedule.action_dim != model.action_dim()) {
    throw ValidationError("DialConfig: schedule action_dim does not match model");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("DialConfig: lambda must be positive and finite (no default)");
  }
  if (n_samples < 1) throw ValidationError("DialConfig: n_samples must be >= 1");
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("DialConfig: dt must be positive and finite");
  }
  if (node_count != 0) {
    if (node_count < 2) throw ValidationError("DialConfig: node_count must be 0 or >= 2");
    if (node_count > schedule.horizon) {
      throw ValidationError("DialConfig: node_count must not exceed horizon");
    }
  }
  if (threads < 1) throw ValidationError("DialConfig: threads must be >= 1");
}

ControlSequence anneal_step(const DynamicsModel& model, const State& x0,
                            const ControlSequence& plan, int stage,
                            const DialConfig& cfg, const RngStream& stage_rng,
                            StageDiagnostics* diag) {
  if (plan.horizon() != cfg.schedule.horizon ||
      plan.action_dim() != cfg.schedule.action_dim) {
    throw ValidationError("anneal_step: plan shape does not match schedule");
  }
  return annealed_stage(model, x0, plan, stage, cfg, stage_rng, diag,
                        /*node_space=*/false);
}

ControlSequence anneal_step_nodes(const DynamicsModel& model, const State& x0,
                                  const ControlSequence& nodes, int stage,
                                  const DialConfig& cfg, const RngStream& stage_rng,
                                  StageDiagnostics* diag) {
  if (nodes.horizon() != cfg.node_count ||
      nodes.action_dim() != cfg.schedule.action_dim) {
    throw ValidationError("anneal_step_nodes: node shape does not match config");
  }
  return annealed_stage(model, x0, nodes, stage, cfg, stage_rng, diag,
                        /*node_space=*/true);
}

ControlSequence shift(const ControlSequence& plan) {
  ControlSequence out = plan;
  const int h_last = plan.horizon() - 1;
  for (int h = 0; h < h_last; ++h) {
    const auto src = plan.row(h + 1);
    std::copy(src.begin(), src.end(), out.row(h).begin());
  }
  // Tail keeps the previous last row (replication).
  return out;
}

std::vector<double> node_positions(int node_count, int horizon) {
  if (node_count < 2) throw ValidationError("node_positions: node_count must be >= 2");
  if (horizon < 2) throw ValidationError("node_positions: horizon must be >= 2");
  std::vector<double> pos(node_count);
  const double span = static_cast<double>(horizon - 1);
  for (int s = 0; s < node_count; ++s) {
    pos[s] = span * s / (node_count - 1);
  }
  return pos;
}

namespace {

// Evaluates the interpolant at plan position p in [0, horizon-1].
void eval_interp(const ControlSequence& nodes, int horizon, InterpMode mode,
                 double p, std::span<double> out) {
  const int S = nodes.horizon();
  const int d_u = nodes.action_dim();
  const double spacing = static_cast<double>(horizon - 1) / (S - 1);
  // Segment index and local parameter in [0, 1].
  int seg = static_cast<int>(std::floor(p / spacing));
  seg = std::clamp(seg, 0, S - 2);
  double t = p / spacing - seg;
  t = std::clamp(t, 0.0, 1.0);

  // Exact node hits return the node value itself; this makes
  // node_count == horizon a bitwise identity in every mode.
  if (t == 0.0 || t == 1.0) {
    const int s = t == 0.0 ? seg : seg + 1;
    for (int j = 0; j < d_u; ++j) out[j] = nodes.at(s, j);
    return;
  }

  if (mode == InterpMode::kLinear) {
    for (int j = 0; j < d_u; ++j) {
      out[j] = (1.0 - t) * nodes.at(seg, j) + t * nodes.at(seg + 1, j);
    }
    return;
  }

  // Uniform Catmull-Rom with clamped virtual endpoints, written in
  // node-difference form: every polynomial coefficient is a combination of
  // node differences, so constant node values reproduce exactly.
  const int i0 = std::max(seg - 1, 0);
  const int i3 = std::min(seg + 2, S - 1);
  for (int j = 0; j < d_u; ++j) {
    const double p0 = nodes.at(i0, j);
    const double p1 = nodes.at(seg, j);
    const double p2 = nodes.at(seg + 1, j);
    const double p3 = nodes.at(i3, j);
    const double c1 = 0.5 * (p2 - p0);
    const double c2 = (p0 - p1) + 2.0 * (p2 - p1) + 0.5 * (p1 - p3);
    const double c3 = 1.5 * (p1 - p2) + 0.5 * (p3 - p0);
    out[j] = p1 + t * (c1 + t * (c2 + t * c3));
  }
}

}  // namespace

ControlSequence nodes_to_controls(const ControlSequence& nodes, int horizon,
                                  InterpMode mode) {
  if (nodes.horizon() < 2) {
    throw ValidationError("nodes_to_controls: need at least 2 nodes");
  }
  if (horizon < nodes.horizon()) {
    throw ValidationError("nodes_to_controls: horizon smaller than node count");
  }
  ControlSequence plan(horizon, nodes.action_dim());
  for (int h = 0; h < horizon; ++h) {
    eval_interp(nodes, horizon, mode, static_cast<double>(h), plan.row(h));
  }
  return plan;
}

ControlSequence shift_nodes(const ControlSequence& nodes, int horizon,
                            InterpMode mode) {
  const std::vector<double> pos = node_positions(nodes.horizon(), horizon);
  ControlSequence out(nodes.horizon(), nodes.action_dim());
  const double last = static_cast<double>(horizon - 1);
  for (int s = 0; s < nodes.horizon(); ++s) {
    eval_interp(nodes, horizon, mode, std::min(pos[s] + 1.0, last), out.row(s));
  }
  return out;
}

DialController::DialController(std::shared_ptr<const DynamicsModel> model,
                               DialConfig cfg)
    : model_(std::move(model)), cfg_(std::move(cfg)), root_(cfg_.seed) {
  if (!model_) throw ValidationError("DialController: null model");
  cfg_.validate(*model_);
  reset();
}

void DialController::reset() {
  plan_ = ControlSequence(cfg_.schedule.horizon, cfg_.schedule.action_dim);
  if (cfg_.node_count > 0) {
    nodes_ = ControlSequence(cfg_.node_count, cfg_.schedule.action_dim);
  } else {
    nodes_ = ControlSequence();
  }
  slot_updates_.assign(cfg_.schedule.horizon, 0);
  last_ = StepDiagnostics{};
  root_ = RngStream(cfg_.seed);
  step_ = 0;
  total_rollouts_ = 0;
}

const ControlSequence& DialController::nodes() const {
  if (cfg_.node_count == 0) {
    throw ValidationError("DialController::nodes: planner is not in node mode");
  }
  return nodes_;
}

std::vector<double> DialController::control_step(const State& x) {
  const bool node_mode = cfg_.node_count > 0;
  const RngStream step_rng = root_.derive(static_cast<uint64_t>(step_));

  last_ = StepDiagnostics{};
  last_.step_index = step_;
  last_.stages.reserve(cfg_.schedule.n_stages);
  last_.accepted_cost = kInf;

  // Coarse-to-fine sweep: stage n_stages uses the largest kernel.
  for (int stage = cfg_.schedule.n_stages; stage >= 1; --stage) {
    StageDiagnostics diag;
    const RngStream stage_rng = step_rng.derive(static_cast<uint64_t>(stage));
    try {
      if (node_mode) {
        nodes_ = anneal_step_nodes(*model_, x, nodes_, stage, cfg_, stage_rng, &diag);
        plan_ = nodes_to_controls(nodes_, cfg_.schedule.horizon, cfg_.interp);
      } else {
        plan_ = anneal_step(*model_, x, plan_, stage, cfg_, stage_rng, &diag);
      }
      for (int64_t& c : slot_updates_) ++c;
      last_.accepted_cost = diag.best_cost;
    } catch (const NoValidSampleError&) {
      diag.stage = stage;
      diag.held = true;
      diag.best_cost = kInf;
    }
    total_rollouts_ += cfg_.n_samples;
    last_.stages.push_back(diag);
  }

  last_.plan_held = true;
  for (const StageDiagnostics& d : last_.stages) {
    if (!d.held) last_.plan_held = false;
  }

  const auto row0 = plan_.row(0);
  last_.action.assign(row0.begin(), row0.end());
  last_.emitted_update_count = slot_updates_[0];

  // Advance the receding horizon.
  if (node_mode) {
    nodes_ = shift_nodes(nodes_, cfg_.schedule.horizon, cfg_.interp);
    plan_ = nodes_to_controls(nodes_, cfg_.schedule.horizon, cfg_.interp);
  } else {
    plan_ = shift(plan_);
  }
  for (size_t h = 0; h + 1 < slot_updates_.size(); ++h) {
    slot_updates_[h] = slot_updates_[h + 1];
  }
  slot_updates_.back() = 0;
  ++step_;
  return last_.action;
}

}  // namespace ampc
