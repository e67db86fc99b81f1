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

#ifndef AMPC_SAMPLER_RNG_HPP_
#define AMPC_SAMPLER_RNG_HPP_

#include <cstdint>

#include <span>

namespace ampc {

// Deterministic counter-based random stream.
//
// A stream is identified by a 64-bit key; derive() mixes a coordinate into
// the key to produce an independent child stream. The planner keys noise as
// root(seed).derive(step).derive(stage).derive(sample), so the noise tensor
// for a given (seed, step, stage, sample) is identical no matter which
// thread, batch layout, or call order produced it.
//
// The generator is SplitMix64 (passes BigCrush); normals come from an
// explicit Box-Muller transform rather than std::normal_distribution, whose
// algorithm the standard leaves unspecified. Output is reproducible
// bit-for-bit across runs for a fixed libm.
class RngStream {
 public:
  explicit RngStream(uint64_t seed);

  // Child stream keyed by (this stream, coord). Deterministic, stateless:
  // does not consume from this stream.
  RngStream derive(uint64_t coord) const;

  uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double next_uniform();

  // Standard normal. Box-Muller pairs; the spare is cached.
  double next_normal();

  // Fills out with independent standard normals.
  void fill_normal(std::span<double> out);

  uint64_t key() const { return key_; }

 private:
  RngStream(uint64_t key, int);  // internal: key is final, not a seed

  uint64_t key_;
  uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ampc

#endif  // AMPC_SAMPLER_RNG_HPP_
