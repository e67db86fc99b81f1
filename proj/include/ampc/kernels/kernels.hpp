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

#ifndef AMPC_KERNELS_KERNELS_HPP_
#define AMPC_KERNELS_KERNELS_HPP_

// Data-parallel inner loops behind the planner and the landscape tool.
//
// Every operation has a scalar reference implementation and may have SIMD
// variants. All variants of one operation are bit-exact equals, not merely
// close: they perform the same floating-point operations on each output
// element in the same order. Concretely,
//   - vectorization is across independent output elements where possible,
//   - reductions use a fixed 4-lane blocked order in every variant,
//   - only mul and add are used (no FMA; the build disables fp contraction).
// The active variant is chosen once at startup from CPU capabilities and
// can be overridden with the ANNEALED_MPC_SIMD environment variable
// ("scalar" or "avx2") or force_backend(). Tests assert bitwise equality
// between variants on random inputs.

namespace ampc::kernels {

enum class Backend { kScalar, kAvx2 };

struct Ops {
  // dst[j] += sum_k w[k] * rows[k*len + j], k ascending for every j.
  void (*weighted_accum)(double* dst, const double* rows, const double* w,
                         int n_rows, int len);
  // Sum of v[0..n) in blocked order: four lane accumulators over blocks of
  // four, combined as (lane0+lane2) + (lane1+lane3), then a scalar tail.
  double (*reduce_sum)(const double* v, int n);
  // Minimum of v[0..n). Exact in any order; +inf entries never win unless
  // all entries are +inf. NaN inputs are the caller's bug.
  double (*reduce_min)(const double* v, int n);
  // v[j] *= s.
  void (*scale)(double* v, double s, int n);
  // Correlation against an already padded source:
  //   dst[c] = sum_t taps[t] * padded_src[c + t],  t ascending,
  // where padded_src has n_out + n_taps - 1 entries. Callers implement
  // zero-padded convolution by building the padded buffer themselves.
  void (*correlate_padded)(const double* padded_src, int n_out,
                           const double* taps, int n_taps, double* dst);
};

// Variant selected at startup (honors ANNEALED_MPC_SIMD).
const Ops& active();

// Scalar reference, always available.
const Ops& scalar_ops();

// Specific variant; throws ValidationError if unsupported on this CPU.
const Ops& ops_for(Backend backend);

Backend active_backend();
bool backend_supported(Backend backend);

// Overrides auto selection for the rest of the process (tests).
void force_backend(Backend backend);

const char* backend_name(Backend backend);

}  // namespace ampc::kernels

#endif  // AMPC_KERNELS_KERNELS_HPP_
