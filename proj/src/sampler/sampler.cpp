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

#include "ampc/sampler/sampler.hpp"

#include <cmath>

#include <limits>

#include "ampc/core/errors.hpp"
#include "ampc/kernels/kernels.hpp"

namespace ampc {

namespace {

void check_sigma(const ControlSequence& sigma, bool strictly_positive) {
  if (sigma.size() == 0) throw ValidationError("sampler: sigma is empty");
  for (double s : sigma.flat()) {
    if (!std::isfinite(s)) throw ValidationError("sampler: sigma must be finite");
    if (strictly_positive ? !(s > 0.0) : s < 0.0) {
      throw ValidationError(strictly_positive
                                ? "sampler: sigma entries must be > 0"
                                : "sampler: sigma entries must be >= 0");
    }
  }
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("sampler: lambda must be positive and finite");
  }
}

}  // namespace

PerturbationBatch sample_perturbations(const SamplerParams& params, int n_samples,
                                       const RngStream& rng) {
  check_lambda(params.lambda);
  check_sigma(params.sigma, /*strictly_positive=*/false);
  if (n_samples < 1) throw ValidationError("sample_perturbations: n_samples must be >= 1");

  PerturbationBatch batch;
  batch.n_samples = n_samples;
  batch.horizon = params.sigma.horizon();
  batch.action_dim = params.sigma.action_dim();
  const size_t len = params.sigma.flat().size();
  batch.noise.resize(len * static_cast<size_t>(n_samples));
  batch.costs.assign(n_samples, 0.0);

  const std::span<const double> sig = params.sigma.flat();
  for (int k = 0; k < n_samples; ++k) {
    RngStream stream = rng.derive(static_cast<uint64_t>(k));
    const std::span<double> row = batch.noise_row(k);
    stream.fill_normal(row);
    for (size_t j = 0; j < len; ++j) row[j] *= sig[j];
  }
  return batch;
}

std::vector<double> softmax_weights(std::span<const double> costs, double lambda) {
  check_lambda(lambda);
  if (costs.empty()) throw ValidationError("softmax_weights: empty cost array");
  for (double c : costs) {
    if (std::isnan(c) || c == -std::numeric_limits<double>::infinity()) {
      throw ValidationError("softmax_weights: costs must be finite or +inf");
    }
  }

  const auto& ops = kernels::active();
  const double m = ops.reduce_min(costs.data(), static_cast<int>(costs.size()));
  if (!std::isfinite(m)) {
    throw NoValidSampleError("softmax_weights: every candidate cost is +inf");
  }

  std::vector<double> w(costs.size());
  for (size_t i = 0; i < costs.size(); ++i) {
    // (c - m) >= 0, so exp() <= 1: no overflow. c = +inf gives weight 0.
    w[i] = std::exp(-(costs[i] - m) / lambda);
  }
  const double total = ops.reduce_sum(w.data(), static_cast<int>(w.size()));
  ops.scale(w.data(), 1.0 / total, static_cast<int>(w.size()));
  return w;
}

ControlSequence mppi_update(const ControlSequence& plan,
                            const PerturbationBatch& batch, double lambda) {
  if (batch.horizon != plan.horizon() || batch.action_dim != plan.action_dim()) {
    throw ValidationError("mppi_update: batch shape does not match plan");
  }
  const std::vector<double> w = softmax_weights(batch.costs, lambda);

  ControlSequence out = plan;
  kernels::active().weighted_accum(out.flat().data(), batch.noise.data(),
                                   w.data(), batch.n_samples, out.size());
  return out;
}

ControlSequence estimate_score(const PerturbationBatch& batch, double lambda,
                               const ControlSequence& sigma) {
  check_sigma(sigma, /*strictly_positive=*/true);
  if (batch.horizon != sigma.horizon() || batch.action_dim != sigma.action_dim()) {
    throw ValidationError("estimate_score: batch shape does not match sigma");
  }
  const std::vector<double> w = softmax_weights(batch.costs, lambda);

  ControlSequence score(sigma.horizon(), sigma.action_dim());
  kernels::active().weighted_accum(score.flat().data(), batch.noise.data(),
                                   w.data(), batch.n_samples, score.size());
  const std::span<const double> sig = sigma.flat();
  const std::span<double> s = score.flat();
  for (size_t j = 0; j < s.size(); ++j) s[j] /= sig[j] * sig[j];
  return score;
}

ControlSequence score_ascent_step(const ControlSequence& plan,
                                  const ControlSequence& score,
                                  const ControlSequence& sigma) {
  check_sigma(sigma, /*strictly_positive=*/true);
  if (!plan.same_shape(score) || !plan.same_shape(sigma)) {
    throw ValidationError("score_ascent_step: shape mismatch");
  }
  ControlSequence out = plan;
  const std::span<const double> sig = sigma.flat();
  const std::span<const double> s = score.flat();
  const std::span<double> u = out.flat();
  for (size_t j = 0; j < u.size(); ++j) u[j] += sig[j] * sig[j] * s[j];
  return out;
}

}  // namespace ampc
