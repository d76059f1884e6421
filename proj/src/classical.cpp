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

#include "kurlab/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kurlab/error.hpp"

namespace kurlab {
namespace {

constexpr double kColumnSum = 1e-12;
constexpr double kProbability = 1e-12;

CRowVector ones_row(Eigen::Index n) { return CRowVector::Ones(n); }

}  // namespace

RateModel::RateModel(RMatrix w, std::vector<std::string> labels)
    : w_(std::move(w)), labels_(std::move(labels)) {
  const auto n = w_.rows();
  if (n < 2 || w_.cols() != n) {
    throw KurError(ErrorKind::InvalidInput, "rate matrix must be square with n >= 2");
  }
  if (!w_.allFinite()) throw KurError(ErrorKind::InvalidInput, "rate matrix is not finite");
  if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != n) {
    throw KurError(ErrorKind::InvalidInput, "label count differs from state count");
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k != j && w_(k, j) < 0.0) {
        std::ostringstream os;
        os << "negative rate W(" << k << "," << j << ") = " << w_(k, j);
        throw KurError(ErrorKind::InvalidInput, os.str());
      }
    }
    const double scale = std::max(1.0, w_.col(j).cwiseAbs().maxCoeff());
    if (std::abs(w_.col(j).sum()) > kColumnSum * scale) {
      std::ostringstream os;
      os << "column " << j << " of the rate matrix sums to " << w_.col(j).sum();
      throw KurError(ErrorKind::InvalidInput, os.str());
    }
  }
}

RVector generator_stationary(const RMatrix& w) {
  const CMatrix g = w.cast<Complex>();
  const CVector x = stationary_vector(g, ones_row(w.rows()));
  if (x.imag().cwiseAbs().maxCoeff() > kProbability) {
    throw KurError(ErrorKind::NumericalInconsistency, "stationary vector is not real");
  }
  return x.real();
}

RVector classical_steady_state(const RateModel& rm) {
  const CMatrix g = rm.w().cast<Complex>();
  const CVector x = stationary_vector(g, ones_row(rm.n()));
  RVector p = x.real();
  if (x.imag().cwiseAbs().maxCoeff() > kProbability || p.minCoeff() < -kProbability) {
    throw KurError(ErrorKind::NumericalInconsistency, "stationary distribution is not a probability");
  }
  p = p.cwiseMax(0.0);
  p /= p.sum();
  return p;
}

RMatrix classical_drazin(const RateModel& rm, const RVector& p) {
  const CMatrix g = rm.w().cast<Complex>();
  return drazin_matrix(g, p.cast<Complex>(), ones_row(rm.n())).real();
}

CurrentStatistics classical_current_stats(const RateModel& rm, const TransitionWeights& weights) {
  const int n = rm.n();
  if (weights.nu.rows() != n || weights.nu.cols() != n) {
    throw KurError(ErrorKind::InvalidInput, "weight matrix size differs from the rate matrix");
  }
  const RMatrix& counted = weights.counted_rates ? *weights.counted_rates : rm.w();
  if (counted.rows() != n || counted.cols() != n) {
    throw KurError(ErrorKind::InvalidInput, "counted-rate matrix has the wrong size");
  }
  RMatrix jw = RMatrix::Zero(n, n);   // nu * R
  RMatrix jw2 = RMatrix::Zero(n, n);  // nu^2 * R
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      if (counted(k, j) < 0.0 || counted(k, j) > rm.w()(k, j) * (1.0 + 1e-12) + 1e-300) {
        throw KurError(ErrorKind::InvalidInput, "counted rates must lie within [0, W]");
      }
      jw(k, j) = weights.nu(k, j) * counted(k, j);
      jw2(k, j) = weights.nu(k, j) * weights.nu(k, j) * counted(k, j);
    }
  }
  const RVector p = classical_steady_state(rm);
  const RMatrix wd = classical_drazin(rm, p);
  CurrentStatistics st;
  st.J = (jw * p).sum();
  st.D = (jw2 * p).sum() - 2.0 * (jw * (wd * (jw * p))).sum();
  st.A = classical_activity(rm);
  st.method = StatsMethod::Drazin;
  return st;
}

double classical_activity(const RateModel& rm) {
  const RVector p = classical_steady_state(rm);
  double a = 0.0;
  for (int j = 0; j < rm.n(); ++j) {
    for (int k = 0; k < rm.n(); ++k) {
      if (k != j) a += rm.w()(k, j) * p(j);
    }
  }
  return a;
}

double perturbative_interdot_rate(double g, double gamma_l, double gamma_r, double dephasing) {
  const double den = gamma_l + gamma_r + 2.0 * dephasing;
  if (!(den > 0.0)) {
    throw KurError(ErrorKind::InvalidInput, "gamma_L + gamma_R + 2 Gamma must be positive");
  }
  return 4.0 * g * g / den;
}

RMatrix change_basis(const RMatrix& w, const RMatrix& t) {
  if (t.rows() != w.rows() || t.cols() != w.cols() || w.rows() != w.cols()) {
    throw KurError(ErrorKind::InvalidInput, "basis change has the wrong size");
  }
  Eigen::FullPivLU<RMatrix> lu(t);
  if (!lu.isInvertible()) throw KurError(ErrorKind::InvalidInput, "basis change is singular");
  return t * w * lu.inverse();
}

AdiabaticResult adiabatic_eliminate(const RMatrix& w_tilde, int fast_index, double threshold) {
  const int n = static_cast<int>(w_tilde.rows());
  if (n < 3 || w_tilde.cols() != n || fast_index < 0 || fast_index >= n) {
    throw KurError(ErrorKind::InvalidInput, "bad matrix or fast index for elimination");
  }
  const double wff = w_tilde(fast_index, fast_index);
  if (wff == 0.0) throw KurError(ErrorKind::InvalidInput, "fast diagonal entry is zero");
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    if (i != fast_index) keep.push_back(i);
  }
  const int m = n - 1;
  RMatrix red(m, m);
  double slow = 0.0;
  for (int a = 0; a < m; ++a) {
    slow = std::max(slow, std::abs(w_tilde(keep[a], keep[a])));
    for (int b = 0; b < m; ++b) {
      red(a, b) = w_tilde(keep[a], keep[b]) -
                  w_tilde(keep[a], fast_index) * w_tilde(fast_index, keep[b]) / wff;
    }
  }
  for (int b = 0; b < m; ++b) {
    const double scale = std::max(1.0, red.col(b).cwiseAbs().maxCoeff());
    if (std::abs(red.col(b).sum()) > 1e-10 * scale) {
      throw KurError(ErrorKind::InvalidInput,
                     "eliminated generator does not conserve probability; the input columns "
                     "of the retained coordinates must sum to zero");
    }
  }
  AdiabaticResult out;
  out.p = generator_stationary(red);
  for (int b = 0; b < m; ++b) {
    for (int a = 0; a < m; ++a) {
      if (a != b) out.activity += red(a, b) * out.p(b);
    }
  }
  out.reduced = std::move(red);
  out.gap_ratio = slow > 0.0 ? std::abs(wff) / slow : std::numeric_limits<double>::infinity();
  out.fast_dominates = out.gap_ratio >= threshold;
  return out;
}

}  // namespace kurlab
