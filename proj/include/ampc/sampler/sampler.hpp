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

#ifndef AMPC_SAMPLER_SAMPLER_HPP_
#define AMPC_SAMPLER_SAMPLER_HPP_

// Monte-Carlo planning primitives. Two algebraically equivalent update
// routes are deliberately kept separate:
//
//   mppi_update:        U+ = U + sum_k softmax(-J/lambda)_k W_k
//   score ascent:       U+ = U + Sigma * score,  with
//                       score = Sigma^{-1} sum_k softmax(-J/lambda)_k W_k
//
// The second factors the same blend through an explicit estimate of
// grad log p_1(U), where p_1 = p_0 * N(0, Sigma) is the Gaussian-smoothed
// target exp(-J/lambda). Equality of the two routes (to floating-point
// roundoff) is the core correctness check of the planner; tests compare
// them rather than collapsing one into the other.

#include <span>
#include <vector>

#include "ampc/core/types.hpp"
#include "ampc/sampler/rng.hpp"

namespace ampc {

struct SamplerParams {
  double lambda = 1.0;     // softmax temperature, > 0
  ControlSequence sigma;   // per-entry noise std deviations, H x d_u, >= 0
};

// Noise rows plus their rollout costs. Row k holds sample k's perturbation
// of every plan entry, in the plan's own row-major layout.
struct PerturbationBatch {
  int n_samples = 0;
  int horizon = 0;
  int action_dim = 0;
  std::vector<double> noise;  // n_samples x (horizon * action_dim)
  std::vector<double> costs;  // n_samples; finite or +inf

  std::span<const double> noise_row(int k) const {
    const size_t len = static_cast<size_t>(horizon) * action_dim;
    return {noise.data() + static_cast<size_t>(k) * len, len};
  }
  std::span<double> noise_row(int k) {
    const size_t len = static_cast<size_t>(horizon) * action_dim;
    return {noise.data() + static_cast<size_t>(k) * len, len};
  }
};

// Draws n_samples rows W_k ~ N(0, diag(sigma^2)). Sample k uses the child
// stream rng.derive(k), entries filled row-major (h major, j minor), so the
// noise for a given (stream key, k) never depends on batch size or thread
// schedule. Costs are left at 0 for the caller to fill.
PerturbationBatch sample_perturbations(const SamplerParams& params, int n_samples,
                                       const RngStream& rng);

// softmax(-costs / lambda), stabilized by subtracting the minimum finite
// cost. +inf costs get weight exactly 0; all-infinite batches throw
// NoValidSampleError. Weights sum to 1 up to roundoff.
std::vector<double> softmax_weights(std::span<const double> costs, double lambda);

inline std::vector<double> softmax_weights(std::initializer_list<double> costs,
                                           double lambda) {
  return softmax_weights(std::span<const double>(costs.begin(), costs.size()),
                         lambda);
}

// Direct softmax blend of the noise rows into the plan (route one).
ControlSequence mppi_update(const ControlSequence& plan,
                            const PerturbationBatch& batch, double lambda);

// Monte-Carlo estimate of grad log p_1 at the plan: per entry,
// (sum_k w_k W_k[h,j]) / sigma[h,j]^2. Requires sigma > 0 entrywise.
ControlSequence estimate_score(const PerturbationBatch& batch, double lambda,
                               const ControlSequence& sigma);

// One ascent step U+ = U + diag(sigma^2) * score (route two). No step-size
// factor and no added noise: the smoothing covariance itself is the
// preconditioner.
ControlSequence score_ascent_step(const ControlSequence& plan,
                                  const ControlSequence& score,
                                  const ControlSequence& sigma);

}  // namespace ampc

#endif  // AMPC_SAMPLER_SAMPLER_HPP_
