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

// AVX2 variants. Compiled with -mavx2 but NOT -mfma: fused multiply-add
// would round differently from the scalar reference. Each output element
// sees the same add/mul sequence as in kernels_scalar.cpp.

#include "kernels_impl.hpp"

#if defined(AMPC_HAVE_AVX2)

#include <immintrin.h>

namespace ampc::kernels {

namespace {

void weighted_accum_avx2(double* dst, const double* rows, const double* w,
                         int n_rows, int len) {
  const int blocked = len - (len % 4);
  for (int k = 0; k < n_rows; ++k) {
    const double wk = w[k];
    const __m256d vw = _mm256_set1_pd(wk);
    const double* row = rows + static_cast<long>(k) * len;
    for (int j = 0; j < blocked; j += 4) {
      __m256d d = _mm256_loadu_pd(dst + j);
      __m256d r = _mm256_loadu_pd(row + j);
      d = _mm256_add_pd(d, _mm256_mul_pd(vw, r));
      _mm256_storeu_pd(dst + j, d);
    }
    for (int j = blocked; j < len; ++j) {
      dst[j] += wk * row[j];
    }
  }
}

double reduce_sum_avx2(const double* v, int n) {
  const int blocked = n - (n % 4);
  __m256d acc = _mm256_setzero_pd();
  for (int i = 0; i < blocked; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
  }
  // Lanes hold (acc0, acc1, acc2, acc3); lo+hi gives (acc0+acc2, acc1+acc3),
  // matching the scalar combine order exactly.
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  double total = _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
  for (int i = blocked; i < n; ++i) total += v[i];
  return total;
}

double reduce_min_avx2(const double* v, int n) {
  if (n < 8) {
    double m = v[0];
    for (int i = 1; i < n; ++i) {
      if (v[i] < m) m = v[i];
    }
    return m;
  }
  const int blocked = n - (n % 4);
  __m256d acc = _mm256_loadu_pd(v);
  for (int i = 4; i < blocked; i += 4) {
    acc = _mm256_min_pd(acc, _mm256_loadu_pd(v + i));
  }
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d pair = _mm_min_pd(lo, hi);
  double m = _mm_cvtsd_f64(_mm_min_sd(pair, _mm_unpackhi_pd(pair, pair)));
  for (int i = blocked; i < n; ++i) {
    if (v[i] < m) m = v[i];
  }
  return m;
}

void scale_avx2(double* v, double s, int n) {
  const __m256d vs = _mm256_set1_pd(s);
  const int blocked = n - (n % 4);
  for (int i = 0; i < blocked; i += 4) {
    _mm256_storeu_pd(v + i, _mm256_mul_pd(_mm256_loadu_pd(v + i), vs));
  }
  for (int i = blocked; i < n; ++i) v[i] *= s;
}

void correlate_padded_avx2(const double* padded_src, int n_out,
                           const double* taps, int n_taps, double* dst) {
  const int blocked = n_out - (n_out % 4);
  for (int c = 0; c < blocked; c += 4) {
    __m256d acc = _mm256_setzero_pd();
    const double* src = padded_src + c;
    for (int t = 0; t < n_taps; ++t) {
      const __m256d vt = _mm256_set1_pd(taps[t]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(vt, _mm256_loadu_pd(src + t)));
    }
    _mm256_storeu_pd(dst + c, acc);
  }
  for (int c = blocked; c < n_out; ++c) {
    double acc = 0.0;
    const double* src = padded_src + c;
    for (int t = 0; t < n_taps; ++t) {
      acc += taps[t] * src[t];
    }
    dst[c] = acc;
  }
}

}  // namespace

const Ops kAvx2Ops = {
    weighted_accum_avx2, reduce_sum_avx2, reduce_min_avx2, scale_avx2,
    correlate_padded_avx2,
};

}  // namespace ampc::kernels

#endif  // AMPC_HAVE_AVX2
