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

#include "kernels_impl.hpp"

namespace ampc::kernels {

namespace {

void weighted_accum_scalar(double* dst, const double* rows, const double* w,
                           int n_rows, int len) {
  for (int k = 0; k < n_rows; ++k) {
    const double wk = w[k];
    const double* row = rows + static_cast<long>(k) * len;
    for (int j = 0; j < len; ++j) {
      dst[j] += wk * row[j];
    }
  }
}

double reduce_sum_scalar(const double* v, int n) {
  // The blocked order here is the contract; the AVX2 variant reproduces it
  // lane for lane.
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  const int blocked = n - (n % 4);
  for (int i = 0; i < blocked; i += 4) {
    acc0 += v[i];
    acc1 += v[i + 1];
    acc2 += v[i + 2];
    acc3 += v[i + 3];
  }
  double total = (acc0 + acc2) + (acc1 + acc3);
  for (int i = blocked; i < n; ++i) total += v[i];
  return total;
}

double reduce_min_scalar(const double* v, int n) {
  double m = v[0];
  for (int i = 1; i < n; ++i) {
    if (v[i] < m) m = v[i];
  }
  return m;
}

void scale_scalar(double* v, double s, int n) {
  for (int i = 0; i < n; ++i) v[i] *= s;
}

void correlate_padded_scalar(const double* padded_src, int n_out,
                             const double* taps, int n_taps, double* dst) {
  for (int c = 0; c < n_out; ++c) {
    double acc = 0.0;
    const double* src = padded_src + c;
    for (int t = 0; t < n_taps; ++t) {
      acc += taps[t] * src[t];
    }
    dst[c] = acc;
  }
}

}  // namespace

const Ops kScalarOps = {
    weighted_accum_scalar, reduce_sum_scalar, reduce_min_scalar, scale_scalar,
    correlate_padded_scalar,
};

}  // namespace ampc::kernels
