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

#include "kurlab/counting.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "kurlab/error.hpp"

namespace kurlab {
namespace {

constexpr double kCurrentImaginary = 1e-10;

double weight_square_sum(const CountingScheme& scheme) {
  double s = 0.0;
  for (double nu : scheme.weights()) s += nu * nu;
  return s;
}

double trace_of(const CVector& v, int d, std::string_view what) {
  return real_vec_trace(v, d, tolerance::kImaginaryResidual, what);
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// CountingScheme

CountingScheme::CountingScheme(Unraveling kind, std::vector<double> weights,
                               std::vector<double> phases)
    : kind_(kind), weights_(std::move(weights)), phases_(std::move(phases)) {
  if (weights_.empty()) throw KurError(ErrorKind::InvalidInput, "counting scheme has no weights");
  if (kind_ == Unraveling::Diffusive && phases_.size() != weights_.size()) {
    throw KurError(ErrorKind::InvalidInput, "diffusive scheme needs one phase per channel");
  }
  if (kind_ == Unraveling::Jump && !phases_.empty()) {
    throw KurError(ErrorKind::InvalidInput, "jump scheme carries no phases");
  }
  bool any = false;
  for (double nu : weights_) {
    if (!std::isfinite(nu)) throw KurError(ErrorKind::InvalidInput, "non-finite weight");
    any = any || nu != 0.0;
  }
  for (double phi : phases_) {
    if (!std::isfinite(phi)) throw KurError(ErrorKind::InvalidInput, "non-finite phase");
  }
  if (!any) throw KurError(ErrorKind::InvalidInput, "all counting weights are zero");
}

CountingScheme CountingScheme::jump(std::vector<double> weights) {
  return CountingScheme(Unraveling::Jump, std::move(weights), {});
}

CountingScheme CountingScheme::diffusive(std::vector<double> weights,
                                         std::vector<double> phases) {
  return CountingScheme(Unraveling::Diffusive, std::move(weights), std::move(phases));
}

void CountingScheme::validate(const OpenSystemModel& model) const {
  if (weights_.size() != model.channel_count()) {
    std::ostringstream os;
    os << "scheme has " << weights_.size() << " weights but the model has "
       << model.channel_count() << " channels";
    throw KurError(ErrorKind::InvalidInput, os.str());
  }
}

CountingScheme CountingScheme::scaled(double factor) const {
  std::vector<double> w = weights_;
  for (double& nu : w) nu *= factor;
  return CountingScheme(kind_, std::move(w), phases_);
}

CountingScheme CountingScheme::reordered(const std::vector<std::size_t>& order) const {
  if (order.size() != weights_.size()) {
    throw KurError(ErrorKind::InvalidInput, "channel permutation has the wrong length");
  }
  std::vector<double> w, p;
  for (auto k : order) {
    if (k >= weights_.size()) throw KurError(ErrorKind::InvalidInput, "bad channel index");
    w.push_back(weights_[k]);
    if (kind_ == Unraveling::Diffusive) p.push_back(phases_[k]);
  }
  return CountingScheme(kind_, std::move(w), std::move(p));
}

// ---------------------------------------------------------------------------------------------
// Drazin route

Superoperator current_superop(const OpenSystemModel& model, const CountingScheme& scheme) {
  scheme.validate(model);
  const int d = model.dim();
  const CMatrix eye = CMatrix::Identity(d, d);
  Superoperator out = Superoperator::zero(d);
  for (std::size_t k = 0; k < model.channel_count(); ++k) {
    const double nu = scheme.weights()[k];
    if (nu == 0.0) continue;
    const CMatrix& l = model.channels()[k].op;
    if (scheme.kind() == Unraveling::Jump) {
      out += Complex(nu) * sandwich_superop(l, l.adjoint());
    } else {
      const double phi = scheme.phases()[k];
      out += (nu * std::exp(Complex(0.0, -phi))) * sandwich_superop(l, eye);
      out += (nu * std::exp(Complex(0.0, phi))) * sandwich_superop(eye, l.adjoint());
    }
  }
  return out;
}

double mean_current(const Superoperator& current, const DensityMatrix& rho_ss) {
  if (current.dim() != rho_ss.dim()) {
    throw KurError(ErrorKind::InvalidInput, "current and state dimensions differ");
  }
  const Complex j = vec_trace(current.apply(rho_ss.vectorized()), rho_ss.dim());
  if (!(std::abs(j.imag()) <= kCurrentImaginary)) {
    std::ostringstream os;
    os << "mean current has imaginary part " << j.imag();
    throw KurError(ErrorKind::NumericalInconsistency, os.str());
  }
  return j.real();
}

double dynamical_activity(const OpenSystemModel& model, const DensityMatrix& rho_ss) {
  double a = 0.0;
  for (const auto& ch : model.channels()) {
    a += (ch.op * rho_ss.matrix() * ch.op.adjoint()).trace().real();
  }
  return a;
}

double noise_drazin(const OpenSystemModel& model, const CountingScheme& scheme,
                    const DensityMatrix& rho_ss, const Superoperator& drazin) {
  const int d = model.dim();
  const Superoperator jop = current_superop(model, scheme);
  double offset = 0.0;
  if (scheme.kind() == Unraveling::Jump) {
    for (std::size_t k = 0; k < model.channel_count(); ++k) {
      const double nu = scheme.weights()[k];
      if (nu == 0.0) continue;
      const CMatrix& l = model.channels()[k].op;
      offset += nu * nu * (l * rho_ss.matrix() * l.adjoint()).trace().real();
    }
  } else {
    offset = weight_square_sum(scheme);
  }
  const CVector v = jop.apply(drazin.apply(jop.apply(rho_ss.vectorized())));
  return offset - 2.0 * trace_of(v, d, "noise_drazin");
}

SteadyStateSolution solve_steady_state(const OpenSystemModel& model) {
  Superoperator lv = build_liouvillian(model);
  DensityMatrix rho = steady_state(lv);
  Superoperator ld = drazin_inverse(lv, rho);
  return SteadyStateSolution{std::move(lv), std::move(rho), std::move(ld)};
}

CurrentStatistics drazin_statistics(const OpenSystemModel& model, const CountingScheme& scheme,
                                    const SteadyStateSolution& sol) {
  CurrentStatistics st;
  st.J = mean_current(current_superop(model, scheme), sol.rho);
  st.D = noise_drazin(model, scheme, sol.rho, sol.drazin);
  st.A = dynamical_activity(model, sol.rho);
  st.method = StatsMethod::Drazin;
  return st;
}

CurrentStatistics drazin_statistics(const OpenSystemModel& model, const CountingScheme& scheme) {
  return drazin_statistics(model, scheme, solve_steady_state(model));
}

// ---------------------------------------------------------------------------------------------
// Counting-field route

CMatrix tilted_generator(const OpenSystemModel& model, const CountingScheme& scheme, double chi) {
  scheme.validate(model);
  CMatrix lchi = build_liouvillian(model).matrix();
  if (scheme.kind() == Unraveling::Jump) {
    for (std::size_t k = 0; k < model.channel_count(); ++k) {
      const double nu = scheme.weights()[k];
      if (nu == 0.0) continue;
      const CMatrix& l = model.channels()[k].op;
      const Complex tilt = std::exp(Complex(0.0, nu * chi)) - 1.0;
      lchi += tilt * sandwich_superop(l, l.adjoint()).matrix();
    }
  } else {
    const CMatrix jd = current_superop(model, scheme).matrix();
    lchi += Complex(0.0, chi) * jd;
    lchi.diagonal().array() -= 0.5 * chi * chi * weight_square_sum(scheme);
  }
  return lchi;
}

namespace {

struct LeadingEigenvalue {
  Complex value;
  double gap;  // Re(leading) - Re(runner-up)
};

LeadingEigenvalue leading_eigenvalue(const CMatrix& lchi) {
  Eigen::ComplexEigenSolver<CMatrix> es(lchi, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw KurError(ErrorKind::OracleFailure, "eigensolver did not converge");
  }
  const CVector& ev = es.eigenvalues();
  Eigen::Index lead = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i) {
    if (ev(i).real() > ev(lead).real()) lead = i;
  }
  double second = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (i != lead) second = std::max(second, ev(i).real());
  }
  return {ev(lead), ev(lead).real() - second};
}

}  // namespace

Complex tilted_leading_eigenvalue(const OpenSystemModel& model, const CountingScheme& scheme,
                                  double chi, double min_gap) {
  const LeadingEigenvalue le = leading_eigenvalue(tilted_generator(model, scheme, chi));
  if (!(le.gap > min_gap)) {
    std::ostringstream os;
    os << "leading eigenvalue not separated at chi=" << chi << " (gap " << le.gap << ")";
    throw KurError(ErrorKind::OracleFailure, os.str());
  }
  return le.value;
}

CurrentStatistics fcs_oracle(const OpenSystemModel& model, const CountingScheme& scheme,
                             const FcsOptions& options) {
  scheme.validate(model);
  const double h = options.step;
  if (!(h > 0.0)) throw KurError(ErrorKind::InvalidInput, "FCS step must be positive");
  const std::array<double, 5> grid{-2.0 * h, -h, 0.0, h, 2.0 * h};
  std::array<LeadingEigenvalue, 5> le;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    le[i] = leading_eigenvalue(tilted_generator(model, scheme, grid[i]));
    if (!(le[i].gap > options.min_gap)) {
      std::ostringstream os;
      os << "spectral gap " << le[i].gap << " at chi=" << grid[i] << " below " << options.min_gap;
      throw KurError(ErrorKind::OracleFailure, os.str());
    }
  }
  // Tracking: consecutive stencil values must move by less than half the local gap,
  // otherwise the maximal-real-part eigenvalue may have switched branch.
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double step = std::abs(le[i].value - le[i - 1].value);
    if (step >= 0.5 * std::min(le[i].gap, le[i - 1].gap)) {
      throw KurError(ErrorKind::OracleFailure, "leading eigenvalue crossing inside the stencil");
    }
  }
  const Complex l0 = le[0].value, l1 = le[1].value, l2 = le[2].value, l3 = le[3].value,
                l4 = le[4].value;
  const Complex first = (l0 - 8.0 * l1 + 8.0 * l3 - l4) / (12.0 * h);
  const Complex second = (-l0 + 16.0 * l1 - 30.0 * l2 + 16.0 * l3 - l4) / (12.0 * h * h);
  CurrentStatistics st;
  st.J = first.imag();
  st.D = -second.real();
  st.A = dynamical_activity(model, steady_state(build_liouvillian(model)));
  st.method = StatsMethod::Fcs;
  return st;
}

// ---------------------------------------------------------------------------------------------
// theta deformation

double deformed_current(const OpenSystemModel& model, const CountingScheme& scheme,
                        double theta) {
  scheme.validate(model);
  if (!(theta > -1.0)) throw KurError(ErrorKind::InvalidInput, "theta must exceed -1");
  const OpenSystemModel deformed = model.with_scaled_jumps(std::sqrt(1.0 + theta));
  const DensityMatrix rho = steady_state(build_liouvillian(deformed));
  const double prefactor =
      scheme.kind() == Unraveling::Jump ? 1.0 + theta : std::sqrt(1.0 + theta);
  return prefactor * mean_current(current_superop(model, scheme), rho);
}

double theta_derivative_check(const OpenSystemModel& model, const CountingScheme& scheme,
                              double theta) {
  if (!(theta > 0.0 && theta <= 1e-2)) {
    throw KurError(ErrorKind::InvalidInput, "theta must lie in (0, 1e-2]");
  }
  return (deformed_current(model, scheme, theta) - deformed_current(model, scheme, -theta)) /
         (2.0 * theta);
}

}  // namespace kurlab
