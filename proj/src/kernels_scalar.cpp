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

namespace kurlab::kernels::scalar {

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void gemv(const Complex* m, std::size_t rows, std::size_t cols, const Complex* x, Complex* y) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = Complex{0.0, 0.0};
  for (std::size_t j = 0; j < cols; ++j) axpy(x[j], m + j * rows, y, rows);
}

Complex dotu(const Complex* x, const Complex* y, std::size_t n) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

}  // namespace kurlab::kernels::scalar
