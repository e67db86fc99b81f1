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

#include "ampc/baselines/evolution.hpp"

#include <cmath>

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "ampc/core/errors.hpp"
#include "ampc/dial/controller.hpp"

namespace ampc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Standard strategy constants for dimension n and the selected mu; the
// covariance learning rates carry the (n+2)/3 separable speedup.
struct Constants {
  std::vector<double> weights;  // mu entries, sum 1
  double mu_eff;
  double c_sigma, d_sigma, c_c, c_1, c_mu, chi_n;
};

Constants make_constants(int n, int mu) {
  Constants k;
  k.weights.resize(mu);
  double total = 0.0;
  for (int i = 0; i < mu; ++i) {
    k.weights[i] = std::log(mu + 0.5) - std::log(i + 1.0);
    total += k.weights[i];
  }
  double sq = 0.0;
  for (double& w : k.weights) {
    w /= total;
    sq += w * w;
  }
  k.mu_eff = 1.0 / sq;

  const double n_d = n;
  k.c_sigma = (k.mu_eff + 2.0) / (n_d + k.mu_eff + 5.0);
  k.d_sigma = 1.0 + 2.0 * std::max(0.0, std::sqrt((k.mu_eff - 1.0) / (n_d + 1.0)) - 1.0) +
              k.c_sigma;
  k.c_c = (4.0 + k.mu_eff / n_d) / (n_d + 4.0 + 2.0 * k.mu_eff / n_d);
  const double sep_boost = (n_d + 2.0) / 3.0;
  k.c_1 = std::min(1.0, sep_boost * 2.0 / ((n_d + 1.3) * (n_d + 1.3) + k.mu_eff));
  k.c_mu = std::min(1.0 - k.c_1,
                    sep_boost * 2.0 * (k.mu_eff - 2.0 + 1.0 / k.mu_eff) /
                        ((n_d + 2.0) * (n_d + 2.0) + k.mu_eff));
  k.chi_n = std::sqrt(n_d) * (1.0 - 1.0 / (4.0 * n_d) + 1.0 / (21.0 * n_d * n_d));
  return k;
}

}  // namespace

void EvoStrategyConfig::validate(const DynamicsModel& model) const {
  (void)model;
  if (population < 2) throw ValidationError("EvoStrategyConfig: population must be >= 2");
  if (generations < 1) throw ValidationError("EvoStrategyConfig: generations must be >= 1");
  if (!(initial_step > 0.0) || !std::isfinite(initial_step)) {
    throw ValidationError("EvoStrategyConfig: initial_step must be positive and finite");
  }
  if (!(selection_fraction > 0.0) || selection_fraction > 1.0) {
    throw ValidationError("EvoStrategyConfig: selection_fraction must be in (0, 1]");
  }
  if (horizon < 1) throw ValidationError("EvoStrategyConfig: horizon must be >= 1");
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("EvoStrategyConfig: dt must be positive and finite");
  }
  if (threads < 1) throw ValidationError("EvoStrategyConfig: threads must be >= 1");
}

EvoStepResult evo_step(const DynamicsModel& model, const State& x0,
                       const ControlSequence& plan, const EvoStrategyConfig& cfg,
                       const RngStream& step_rng) {
  cfg.validate(model);
  if (plan.horizon() != cfg.horizon || plan.action_dim() != model.action_dim()) {
    throw ValidationError("evo_step: plan shape does not match config/model");
  }

  const int n = plan.size();
  const int pop = cfg.population;
  const int mu = std::max(1, static_cast<int>(pop * cfg.selection_fraction));
  const Constants k = make_constants(n, mu);

  std::vector<double> mean(plan.flat().begin(), plan.flat().end());
  std::vector<double> cov(n, 1.0);       // diagonal of C
  std::vector<double> p_sigma(n, 0.0), p_c(n, 0.0);
  double sigma = cfg.initial_step;

  EvoStepResult out;
  out.best_cost = kInf;

  std::vector<double> candidates(static_cast<size_t>(pop) * n);
  std::vector<double> steps(static_cast<size_t>(pop) * n);  // y_k = sqrt(C) z_k
  std::vector<int> order(pop);
  std::vector<double> new_mean(n), mean_diff(n);

  for (int gen = 0; gen < cfg.generations; ++gen) {
    const RngStream gen_rng = step_rng.derive(static_cast<uint64_t>(gen));
    for (int m = 0; m < pop; ++m) {
      RngStream member_rng = gen_rng.derive(static_cast<uint64_t>(m));
      double* y = steps.data() + static_cast<size_t>(m) * n;
      double* x = candidates.data() + static_cast<size_t>(m) * n;
      for (int j = 0; j < n; ++j) {
        y[j] = std::sqrt(cov[j]) * member_rng.next_normal();
        x[j] = mean[j] + sigma * y[j];
      }
    }

    const std::vector<double> costs = rollout_batch_rows(
        model, x0, candidates, pop, cfg.horizon, cfg.dt, cfg.threads);
    out.rollouts += pop;

    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (costs[a] != costs[b]) return costs[a] < costs[b];
      return a < b;  // deterministic tie-break
    });
    if (std::isfinite(costs[order[0]])) {
      out.best_cost = std::min(out.best_cost, costs[order[0]]);
    } else {
      // Every member diverged; nothing to adapt on this generation.
      continue;
    }

    std::fill(new_mean.begin(), new_mean.end(), 0.0);
    for (int i = 0; i < mu; ++i) {
      const double* x = candidates.data() + static_cast<size_t>(order[i]) * n;
      for (int j = 0; j < n; ++j) new_mean[j] += k.weights[i] * x[j];
    }
    for (int j = 0; j < n; ++j) mean_diff[j] = new_mean[j] - mean[j];

    // Step-size path, whitened by the current diagonal covariance.
    double p_sigma_sq = 0.0;
    const double cs_in = std::sqrt(k.c_sigma * (2.0 - k.c_sigma) * k.mu_eff);
    for (int j = 0; j < n; ++j) {
      p_sigma[j] = (1.0 - k.c_sigma) * p_sigma[j] +
                   cs_in * mean_diff[j] / (sigma * std::sqrt(cov[j]));
      p_sigma_sq += p_sigma[j] * p_sigma[j];
    }
    const double p_sigma_norm = std::sqrt(p_sigma_sq);
    const double decay = 1.0 - std::pow(1.0 - k.c_sigma, 2.0 * (gen + 1));
    const bool h_sig = p_sigma_norm / std::sqrt(decay) / k.chi_n <
                       1.4 + 2.0 / (n + 1.0);

    const double cc_in = std::sqrt(k.c_c * (2.0 - k.c_c) * k.mu_eff);
    for (int j = 0; j < n; ++j) {
      p_c[j] = (1.0 - k.c_c) * p_c[j] +
               (h_sig ? cc_in * mean_diff[j] / sigma : 0.0);
    }

    const double c1_leak = (1.0 - (h_sig ? 1.0 : 0.0)) * k.c_c * (2.0 - k.c_c);
    for (int j = 0; j < n; ++j) {
      double rank_mu = 0.0;
      for (int i = 0; i < mu; ++i) {
        const double y = steps[static_cast<size_t>(order[i]) * n + j];
        rank_mu += k.weights[i] * y * y;
      }
      cov[j] = (1.0 - k.c_1 - k.c_mu) * cov[j] +
               k.c_1 * (p_c[j] * p_c[j] + c1_leak * cov[j]) + k.c_mu * rank_mu;
    }

    mean.swap(new_mean);
    sigma *= std::exp((k.c_sigma / k.d_sigma) * (p_sigma_norm / k.chi_n - 1.0));

    // Degeneracy guard: collapse or blow-up restarts the scales in place.
    bool degenerate = !std::isfinite(sigma) ||
                      sigma < 1e-12 * cfg.initial_step ||
                      sigma > 1e8 * cfg.initial_step;
    for (double c : cov) {
      if (!std::isfinite(c) || c <= 0.0) degenerate = true;
    }
    if (degenerate) {
      sigma = cfg.initial_step;
      std::fill(cov.begin(), cov.end(), 1.0);
      std::fill(p_sigma.begin(), p_sigma.end(), 0.0);
      std::fill(p_c.begin(), p_c.end(), 0.0);
      out.reset_triggered = true;
    }
  }

  out.plan = ControlSequence(cfg.horizon, plan.action_dim());
  std::copy(mean.begin(), mean.end(), out.plan.flat().begin());
  return out;
}

EvoController::EvoController(std::shared_ptr<const DynamicsModel> model,
                             EvoStrategyConfig cfg)
    : model_(std::move(model)), cfg_(std::move(cfg)), root_(cfg_.seed) {
  if (!model_) throw ValidationError("EvoController: null model");
  cfg_.validate(*model_);
  reset();
}

void EvoController::reset() {
  plan_ = ControlSequence(cfg_.horizon, model_->action_dim());
  root_ = RngStream(cfg_.seed);
  step_ = 0;
  last_best_cost_ = 0.0;
  last_reset_ = false;
  total_rollouts_ = 0;
}

std::vector<double> EvoController::control_step(const State& x) {
  const EvoStepResult result =
      evo_step(*model_, x, plan_, cfg_, root_.derive(static_cast<uint64_t>(step_)));
  plan_ = result.plan;
  last_best_cost_ = result.best_cost;
  last_reset_ = result.reset_triggered;
  total_rollouts_ += result.rollouts;

  const auto row0 = plan_.row(0);
  std::vector<double> action(row0.begin(), row0.end());
  plan_ = shift(plan_);
  ++step_;
  return action;
}

}  // namespace ampc
