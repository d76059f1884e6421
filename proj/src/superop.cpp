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

#include "kurlab/superop.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "kurlab/error.hpp"
#include "kurlab/kernels.hpp"

namespace kurlab {
namespace {

std::span<const Complex> view(const CMatrix& m) {
  return {m.data(), static_cast<std::size_t>(m.size())};
}

std::span<const Complex> view(const CVector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw KurError(ErrorKind::InvalidInput, what);
}

void require_square(const CMatrix& m, int d, const char* what) {
  require(m.rows() == d && m.cols() == d, std::string(what) + ": expected a " +
                                              std::to_string(d) + "x" + std::to_string(d) +
                                              " matrix");
}

// Replace the last row of G by the trace functional.
CMatrix bordered(const CMatrix& generator, const CRowVector& trace_functional) {
  const Eigen::Index n = generator.rows();
  require(generator.cols() == n && trace_functional.size() == n,
          "generator and trace functional disagree in size");
  if (std::abs(trace_functional(n - 1)) == 0.0) {
    throw KurError(ErrorKind::InvalidInput, "trace functional has a zero last entry");
  }
  CMatrix m = generator;
  m.row(n - 1) = trace_functional;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// OpenSystemModel

OpenSystemModel::OpenSystemModel(CMatrix hamiltonian, std::vector<JumpChannel> channels,
                                 bool allow_pure_hamiltonian)
    : hamiltonian_(std::move(hamiltonian)),
      channels_(std::move(channels)),
      allow_pure_hamiltonian_(allow_pure_hamiltonian) {
  const auto d = hamiltonian_.rows();
  require(d >= 2 && hamiltonian_.cols() == d, "hamiltonian must be square with dim >= 2");
  require(hamiltonian_.allFinite(), "hamiltonian has non-finite entries");
  const double herm = (hamiltonian_ - hamiltonian_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tolerance::kHamiltonianHermiticity) {
    std::ostringstream os;
    os << "hamiltonian is not Hermitian (max |H - H^dag| = " << herm << ")";
    throw KurError(ErrorKind::InvalidInput, os.str());
  }
  if (channels_.empty() && !allow_pure_hamiltonian_) {
    throw KurError(ErrorKind::InvalidInput,
                   "model has no jump channels; request a pure-Hamiltonian run explicitly");
  }
  for (const auto& ch : channels_) {
    require(ch.op.rows() == d && ch.op.cols() == d,
            "jump operator '" + ch.label + "' has the wrong dimension");
    require(ch.op.allFinite(), "jump operator '" + ch.label + "' has non-finite entries");
  }
}

std::size_t OpenSystemModel::channel_index(std::string_view label) const {
  for (std::size_t k = 0; k < channels_.size(); ++k) {
    if (channels_[k].label == label) return k;
  }
  throw KurError(ErrorKind::InvalidInput, "no channel labeled '" + std::string(label) + "'");
}

OpenSystemModel OpenSystemModel::with_scaled_jumps(double factor) const {
  std::vector<JumpChannel> scaled = channels_;
  for (auto& ch : scaled) ch.op *= factor;
  return OpenSystemModel(hamiltonian_, std::move(scaled), allow_pure_hamiltonian_);
}

OpenSystemModel OpenSystemModel::with_channel_order(const std::vector<std::size_t>& order) const {
  require(order.size() == channels_.size(), "channel permutation has the wrong length");
  std::vector<bool> seen(order.size(), false);
  std::vector<JumpChannel> out;
  out.reserve(order.size());
  for (auto k : order) {
    require(k < channels_.size() && !seen[k], "channel order is not a permutation");
    seen[k] = true;
    out.push_back(channels_[k]);
  }
  return OpenSystemModel(hamiltonian_, std::move(out), allow_pure_hamiltonian_);
}

// ---------------------------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(CMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw KurError(ErrorKind::InvalidInput, "density matrix must be square");
  }
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= tolerance::kDensityMatrix)) {
    throw KurError(ErrorKind::NumericalInconsistency, "density matrix is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (!(std::abs(tr - 1.0) <= tolerance::kDensityMatrix)) {
    throw KurError(ErrorKind::NumericalInconsistency, "density matrix trace differs from 1");
  }
  if (!(min_eigenvalue() >= -tolerance::kDensityMatrix)) {
    throw KurError(ErrorKind::NumericalInconsistency, "density matrix is not positive");
  }
}

CVector DensityMatrix::vectorized() const { return vectorize(matrix_); }

double DensityMatrix::min_eigenvalue() const {
  const CMatrix h = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// ---------------------------------------------------------------------------------------------
// Superoperator

Superoperator::Superoperator(CMatrix matrix, int dim) : matrix_(std::move(matrix)), dim_(dim) {
  require(dim >= 1 && matrix_.rows() == dim * dim && matrix_.cols() == dim * dim,
          "superoperator must be d^2 x d^2");
}

Superoperator Superoperator::zero(int dim) {
  return Superoperator(CMatrix::Zero(dim * dim, dim * dim), dim);
}

Superoperator Superoperator::identity(int dim) {
  return Superoperator(CMatrix::Identity(dim * dim, dim * dim), dim);
}

CVector Superoperator::apply(const CVector& v) const {
  require(v.size() == matrix_.cols(), "superoperator applied to a vector of the wrong size");
  CVector out(matrix_.rows());
  kernels::gemv(view(matrix_), static_cast<std::size_t>(matrix_.rows()),
                static_cast<std::size_t>(matrix_.cols()), view(v),
                {out.data(), static_cast<std::size_t>(out.size())});
  return out;
}

Superoperator& Superoperator::operator+=(const Superoperator& other) {
  require(dim_ == other.dim_, "superoperator dimension mismatch");
  matrix_ += other.matrix_;
  return *this;
}

Superoperator& Superoperator::operator-=(const Superoperator& other) {
  require(dim_ == other.dim_, "superoperator dimension mismatch");
  matrix_ -= other.matrix_;
  return *this;
}

Superoperator& Superoperator::operator*=(Complex scale) {
  matrix_ *= scale;
  return *this;
}

Superoperator operator*(const Superoperator& a, const Superoperator& b) {
  require(a.dim_ == b.dim_, "superoperator dimension mismatch");
  return Superoperator(a.matrix_ * b.matrix_, a.dim_);
}

// ---------------------------------------------------------------------------------------------
// Free functions

CVector vectorize(const CMatrix& m) {
  require(m.rows() == m.cols() && m.rows() >= 1, "vectorize: matrix must be square");
  return Eigen::Map<const CVector>(m.data(), m.size());
}

CMatrix devectorize(const CVector& v, int dim) {
  require(dim >= 1 && v.size() == static_cast<Eigen::Index>(dim) * dim,
          "devectorize: vector length is not d^2");
  return Eigen::Map<const CMatrix>(v.data(), dim, dim);
}

CRowVector trace_row(int dim) {
  CRowVector t = CRowVector::Zero(dim * dim);
  for (int i = 0; i < dim; ++i) t(i * dim + i) = 1.0;
  return t;
}

Complex vec_trace(const CVector& v, int dim) {
  require(v.size() == static_cast<Eigen::Index>(dim) * dim, "vec_trace: size mismatch");
  Complex s = 0.0;
  for (int i = 0; i < dim; ++i) s += v(i * dim + i);
  return s;
}

double real_vec_trace(const CVector& v, int dim, double tol, std::string_view what) {
  const Complex t = vec_trace(v, dim);
  if (!(std::abs(t.imag()) <= tol * std::max(1.0, std::abs(t.real())))) {
    std::ostringstream os;
    os << what << ": imaginary residual " << t.imag() << " exceeds tolerance";
    throw KurError(ErrorKind::NumericalInconsistency, os.str());
  }
  return t.real();
}

Superoperator sandwich_superop(const CMatrix& a, const CMatrix& b) {
  const int d = static_cast<int>(a.rows());
  require(d >= 1, "sandwich_superop: empty operand");
  require_square(a, d, "sandwich_superop");
  require_square(b, d, "sandwich_superop");
  CMatrix out = CMatrix::Zero(d * d, d * d);
  kernels::kron_accumulate(1.0, view(b), view(a), static_cast<std::size_t>(d),
                           {out.data(), static_cast<std::size_t>(out.size())});
  return Superoperator(std::move(out), d);
}

Superoperator hamiltonian_superop(const CMatrix& h) {
  const int d = static_cast<int>(h.rows());
  require_square(h, d, "hamiltonian_superop");
  const CMatrix eye = CMatrix::Identity(d, d);
  const Complex mi{0.0, -1.0};
  return mi * (sandwich_superop(h, eye) - sandwich_superop(eye, h));
}

Superoperator dissipator_superop(const CMatrix& l) {
  const int d = static_cast<int>(l.rows());
  require_square(l, d, "dissipator_superop");
  const CMatrix eye = CMatrix::Identity(d, d);
  const CMatrix ldl = l.adjoint() * l;
  return sandwich_superop(l, l.adjoint()) - 0.5 * sandwich_superop(ldl, eye) -
         0.5 * sandwich_superop(eye, ldl);
}

Superoperator build_liouvillian(const OpenSystemModel& model) {
  Superoperator lv = hamiltonian_superop(model.hamiltonian());
  for (const auto& ch : model.channels()) lv += dissipator_superop(ch.op);
  return lv;
}

void check_unique_null_space(const CMatrix& generator) {
  const Eigen::Index n = generator.rows();
  require(n >= 2 && generator.cols() == n, "generator must be square with size >= 2");
  Eigen::JacobiSVD<CMatrix> svd(generator);
  const RVector& s = svd.singularValues();  // descending
  const double smax = s(0);
  if (smax == 0.0) {
    throw KurError(ErrorKind::DegenerateSteadyState, "generator is identically zero");
  }
  if (s(n - 2) < tolerance::kDegenerateNullSpace * smax) {
    std::ostringstream os;
    os << "null space has dimension > 1 (second-smallest singular value " << s(n - 2)
       << ", largest " << smax << ")";
    throw KurError(ErrorKind::DegenerateSteadyState, os.str());
  }
  if (s(n - 1) > tolerance::kNoNullVector * smax) {
    std::ostringstream os;
    os << "generator has no null vector (smallest singular value " << s(n - 1) << ")";
    throw KurError(ErrorKind::NoStationaryState, os.str());
  }
}

CVector stationary_vector(const CMatrix& generator, const CRowVector& trace_functional) {
  check_unique_null_space(generator);
  const CMatrix m = bordered(generator, trace_functional);
  CVector rhs = CVector::Zero(m.rows());
  rhs(m.rows() - 1) = 1.0;
  Eigen::PartialPivLU<CMatrix> lu(m);
  CVector x = lu.solve(rhs);
  const double scale = std::max(1.0, generator.cwiseAbs().maxCoeff());
  const double residual = (generator * x).norm();
  if (!(residual <= tolerance::kSteadyStateResidual * scale)) {
    std::ostringstream os;
    os << "stationary solve residual " << residual << " exceeds tolerance";
    throw KurError(ErrorKind::NumericalInconsistency, os.str());
  }
  return x;
}

CMatrix drazin_matrix(const CMatrix& generator, const CVector& stationary,
                      const CRowVector& trace_functional) {
  const Eigen::Index n = generator.rows();
  require(stationary.size() == n, "stationary vector has the wrong size");
  const CMatrix m = bordered(generator, trace_functional);
  const CMatrix q = CMatrix::Identity(n, n) - stationary * trace_functional;
  CMatrix rhs = q;
  rhs.row(n - 1).setZero();
  Eigen::PartialPivLU<CMatrix> lu(m);
  const CMatrix y = lu.solve(rhs);
  return q * y;
}

DensityMatrix steady_state(const Superoperator& liouvillian) {
  const int d = liouvillian.dim();
  CVector x = stationary_vector(liouvillian.matrix(), trace_row(d));
  CMatrix rho = devectorize(x, d);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace();
  return DensityMatrix(std::move(rho));
}

Superoperator drazin_inverse(const Superoperator& liouvillian, const DensityMatrix& rho_ss) {
  const int d = liouvillian.dim();
  require(rho_ss.dim() == d, "steady state dimension does not match the Liouvillian");
  check_unique_null_space(liouvillian.matrix());
  return Superoperator(drazin_matrix(liouvillian.matrix(), rho_ss.vectorized(), trace_row(d)),
                       d);
}

double l1_coherence(const CMatrix& rho) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < rho.cols(); ++j) {
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
      if (i != j) s += std::abs(rho(i, j));
    }
  }
  return s;
}

}  // namespace kurlab
