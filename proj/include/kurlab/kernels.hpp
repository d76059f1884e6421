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

#pragma once

// Complex dense inner loops used by superoperator assembly and application.
//
// Every kernel has a scalar reference implementation; an AVX2/FMA variant is
// compiled into its own translation unit and selected at runtime when the CPU
// supports it. Matrices are column-major, matching Eigen's default storage.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace kurlab::kernels {

using Complex = std::complex<double>;

enum class Isa { Scalar, Avx2 };

constexpr std::string_view to_string(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

struct KernelTable {
  // y += alpha * x
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t n);
  // y = M x, M is rows x cols column-major; y must not alias x
  void (*gemv)(const Complex* m, std::size_t rows, std::size_t cols, const Complex* x,
               Complex* y);
  // sum_i x_i * y_i (no conjugation)
  Complex (*dotu)(const Complex* x, const Complex* y, std::size_t n);
};

namespace scalar {
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n);
void gemv(const Complex* m, std::size_t rows, std::size_t cols, const Complex* x, Complex* y);
Complex dotu(const Complex* x, const Complex* y, std::size_t n);
}  // namespace scalar

#if defined(KURLAB_HAVE_AVX2)
namespace avx2 {
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n);
void gemv(const Complex* m, std::size_t rows, std::size_t cols, const Complex* x, Complex* y);
Complex dotu(const Complex* x, const Complex* y, std::size_t n);
}  // namespace avx2
#endif

/// True when the AVX2 variant was compiled in and the running CPU reports AVX2+FMA.
bool avx2_available();

/// Best ISA for this machine; used as the initial active ISA.
Isa detected_isa();

Isa active_isa();

/// Overrides dispatch (tests, benchmarking). Throws KurError if `isa` is unavailable.
void set_active_isa(Isa isa);

const KernelTable& table(Isa isa);

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
void gemv(std::span<const Complex> m, std::size_t rows, std::size_t cols,
          std::span<const Complex> x, std::span<Complex> y);
Complex dotu(std::span<const Complex> x, std::span<const Complex> y);

/// out += c * (b^T kron a), where a and b are d x d and out is d^2 x d^2.
void kron_accumulate(Complex c, std::span<const Complex> b, std::span<const Complex> a,
                     std::size_t d, std::span<Complex> out);

}  // namespace kurlab::kernels
