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

#include "kurlab/kernels.hpp"

#include <atomic>

#include "kurlab/error.hpp"

namespace kurlab::kernels {
namespace {

constexpr KernelTable kScalarTable{&scalar::axpy, &scalar::gemv, &scalar::dotu};
#if defined(KURLAB_HAVE_AVX2)
constexpr KernelTable kAvx2Table{&avx2::axpy, &avx2::gemv, &avx2::dotu};
#endif

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detected_isa()};
  return slot;
}

void require_size(bool ok, const char* what) {
  if (!ok) throw KurError(ErrorKind::InvalidInput, what);
}

}  // namespace

bool avx2_available() {
#if defined(KURLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detected_isa() { return avx2_available() ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_available()) {
    throw KurError(ErrorKind::InvalidInput, "AVX2 kernels are not available on this machine");
  }
  active_slot().store(isa, std::memory_order_relaxed);
}

const KernelTable& table(Isa isa) {
#if defined(KURLAB_HAVE_AVX2)
  if (isa == Isa::Avx2) return kAvx2Table;
#endif
  (void)isa;
  return kScalarTable;
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  require_size(x.size() == y.size(), "axpy: length mismatch");
  table(active_isa()).axpy(alpha, x.data(), y.data(), x.size());
}

void gemv(std::span<const Complex> m, std::size_t rows, std::size_t cols,
          std::span<const Complex> x, std::span<Complex> y) {
  require_size(m.size() == rows * cols && x.size() == cols && y.size() == rows,
               "gemv: dimension mismatch");
  table(active_isa()).gemv(m.data(), rows, cols, x.data(), y.data());
}

Complex dotu(std::span<const Complex> x, std::span<const Complex> y) {
  require_size(x.size() == y.size(), "dotu: length mismatch");
  return table(active_isa()).dotu(x.data(), y.data(), x.size());
}

void kron_accumulate(Complex c, std::span<const Complex> b, std::span<const Complex> a,
                     std::size_t d, std::span<Complex> out) {
  const std::size_t n = d * d;
  require_size(a.size() == n && b.size() == n && out.size() == n * n,
               "kron_accumulate: dimension mismatch");
  const auto axpy_fn = table(active_isa()).axpy;
  // Block (r, s) of b^T kron a is b(s, r) * a.
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t r = 0; r < d; ++r) {
      const Complex coeff = c * b[r * d + s];
      if (coeff == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < d; ++j) {
        axpy_fn(coeff, a.data() + j * d, out.data() + (s * d + j) * n + r * d, d);
      }
    }
  }
}

}  // namespace kurlab::kernels
