// Copyright 2026 The kurlab Authors
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

// Built with -mavx2 -mfma; only reached through the runtime dispatch table.

#include <immintrin.h>

#include "kurlab/kernels.hpp"

namespace kurlab::kernels::avx2 {
namespace {

// Two interleaved complex doubles per register: [re0, im0, re1, im1].
inline __m256d load2(const Complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(Complex* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// (ar + i ai) * x for a broadcast scalar a.
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d x) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, swapped));
}

// Elementwise complex product of two packed vectors.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d ar = _mm256_movedup_pd(a);
  const __m256d ai = _mm256_permute_pd(a, 0b1111);
  return cmul_broadcast(ar, ai, b);
}

}  // namespace

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul_broadcast(ar, ai, load2(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void gemv(const Complex* m, std::size_t rows, std::size_t cols, const Complex* x, Complex* y) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = Complex{0.0, 0.0};
  for (std::size_t j = 0; j < cols; ++j) axpy(x[j], m + j * rows, y, rows);
}

Complex dotu(const Complex* x, const Complex* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = _mm256_add_pd(acc, cmul(load2(x + i), load2(y + i)));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  Complex out{lanes[0] + lanes[2], lanes[1] + lanes[3]};
  for (; i < n; ++i) out += x[i] * y[i];
  return out;
}

}  // namespace kurlab::kernels::avx2
