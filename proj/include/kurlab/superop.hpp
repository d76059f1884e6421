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

// Vectorized superoperator algebra for Lindblad generators.
//
// Density matrices are column-stacked: vec(rho) = [rho_00, rho_10, ..., rho_01, rho_11, ...]^T,
// so that A rho B becomes (B^T kron A) vec(rho).

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace kurlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

namespace tolerance {
inline constexpr double kHamiltonianHermiticity = 1e-12;
inline constexpr double kDensityMatrix = 1e-10;
inline constexpr double kSteadyStateResidual = 1e-10;
inline constexpr double kDegenerateNullSpace = 1e-10;
inline constexpr double kNoNullVector = 1e-8;
inline constexpr double kImaginaryResidual = 1e-9;
}  // namespace tolerance

struct JumpChannel {
  std::string label;
  CMatrix op;  // rate prefactor absorbed: entries carry units of sqrt(rate)
};

/// Hamiltonian plus labeled jump operators. Validated on construction.
class OpenSystemModel {
 public:
  /// Throws KurError(InvalidInput) if H is not Hermitian, dimensions disagree, dim < 2, or
  /// there are no channels and `allow_pure_hamiltonian` is false.
  OpenSystemModel(CMatrix hamiltonian, std::vector<JumpChannel> channels,
                  bool allow_pure_hamiltonian = false);

  int dim() const { return static_cast<int>(hamiltonian_.rows()); }
  const CMatrix& hamiltonian() const { return hamiltonian_; }
  const std::vector<JumpChannel>& channels() const { return channels_; }
  std::size_t channel_count() const { return channels_.size(); }

  /// Index of the channel with `label`; throws InvalidInput when absent.
  std::size_t channel_index(std::string_view label) const;

  /// Same model with every jump operator multiplied by `factor`.
  OpenSystemModel with_scaled_jumps(double factor) const;

  /// Same model with channels permuted: result.channels()[i] = channels()[order[i]].
  OpenSystemModel with_channel_order(const std::vector<std::size_t>& order) const;

 private:
  CMatrix hamiltonian_;
  std::vector<JumpChannel> channels_;
  bool allow_pure_hamiltonian_;
};

/// Hermitian, unit-trace, positive semidefinite matrix (all within 1e-10).
class DensityMatrix {
 public:
  /// Validates the invariants; throws NumericalInconsistency on violation.
  explicit DensityMatrix(CMatrix matrix);

  const CMatrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  CVector vectorized() const;
  double min_eigenvalue() const;

 private:
  CMatrix matrix_;
};

/// d^2 x d^2 matrix acting on column-stacked vectorizations.
class Superoperator {
 public:
  Superoperator() = default;
  Superoperator(CMatrix matrix, int dim);

  static Superoperator zero(int dim);
  static Superoperator identity(int dim);

  const CMatrix& matrix() const { return matrix_; }
  int dim() const { return dim_; }

  /// Applies to a vectorized operator through the dispatched gemv kernel.
  CVector apply(const CVector& v) const;

  Superoperator& operator+=(const Superoperator& other);
  Superoperator& operator-=(const Superoperator& other);
  Superoperator& operator*=(Complex scale);

  friend Superoperator operator+(Superoperator a, const Superoperator& b) { return a += b; }
  friend Superoperator operator-(Superoperator a, const Superoperator& b) { return a -= b; }
  friend Superoperator operator*(Complex s, Superoperator a) { return a *= s; }
  /// Composition (a after b).
  friend Superoperator operator*(const Superoperator& a, const Superoperator& b);

 private:
  CMatrix matrix_;
  int dim_ = 0;
};

CVector vectorize(const CMatrix& m);
CMatrix devectorize(const CVector& v, int dim);

/// Row vector t with t . vec(X) = Tr X.
CRowVector trace_row(int dim);

/// Tr of the operator whose vectorization is `v`.
Complex vec_trace(const CVector& v, int dim);

/// Real part of vec_trace; throws NumericalInconsistency if |Im| > tol.
double real_vec_trace(const CVector& v, int dim, double tol, std::string_view what);

/// B^T kron A, i.e. the superoperator rho -> A rho B.
Superoperator sandwich_superop(const CMatrix& a, const CMatrix& b);

/// rho -> -i[H, rho].
Superoperator hamiltonian_superop(const CMatrix& h);

/// rho -> L rho L^dag - {L^dag L, rho}/2.
Superoperator dissipator_superop(const CMatrix& l);

Superoperator build_liouvillian(const OpenSystemModel& model);

/// Unique stationary state via row-replacement solve; uniqueness is verified from the
/// singular values of L. Throws DegenerateSteadyState or NoStationaryState.
DensityMatrix steady_state(const Superoperator& liouvillian);

/// Drazin (group) inverse (I - P) L^MP (I - P) with P = vec(rho_ss) . trace_row.
Superoperator drazin_inverse(const Superoperator& liouvillian, const DensityMatrix& rho_ss);

/// l1 norm of coherence: sum of |off-diagonal| entries.
double l1_coherence(const CMatrix& rho);

// Generic generator routines shared by quantum and classical callers. The generator G has a
// left null vector `trace_functional` (conservation of total probability) whose last entry is
// nonzero; the last row of G is replaced by it.

/// Uniqueness check from singular values. Throws DegenerateSteadyState / NoStationaryState.
void check_unique_null_space(const CMatrix& generator);

/// Null vector x of G normalized to trace_functional . x = 1.
CVector stationary_vector(const CMatrix& generator, const CRowVector& trace_functional);

/// (I - P) Y where G Y = (I - P) with the trace condition trace_functional . Y = 0.
CMatrix drazin_matrix(const CMatrix& generator, const CVector& stationary,
                      const CRowVector& trace_functional);

}  // namespace kurlab
