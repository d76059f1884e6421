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

#include "kurlab/kur.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kurlab/error.hpp"

namespace kurlab {

double psi_factor(const OpenSystemModel& model, const CountingScheme& scheme,
                  const DensityMatrix& rho_ss, const Superoperator& drazin) {
  const Superoperator jop = current_superop(model, scheme);
  const double j = mean_current(jop, rho_ss);
  if (!(std::abs(j) > kZeroCurrent)) {
    std::ostringstream os;
    os << "mean current " << j << " is too small for psi";
    throw KurError(ErrorKind::UndefinedPsi, os.str());
  }
  const Superoperator hop = hamiltonian_superop(model.hamiltonian());
  const CVector v = jop.apply(drazin.apply(hop.apply(rho_ss.vectorized())));
  return real_vec_trace(v, model.dim(), tolerance::kImaginaryResidual, "psi_factor") / j;
}

double chi_factor(const OpenSystemModel& model, const DensityMatrix& rho_ss,
                  const Superoperator& drazin) {
  const int d = model.dim();
  const CMatrix eye = CMatrix::Identity(d, d);
  const CMatrix& h = model.hamiltonian();
  const Complex i1{0.0, 1.0};
  Superoperator kl = sandwich_superop(-i1 * h, eye);
  Superoperator kr = sandwich_superop(eye, i1 * h);
  for (const auto& ch : model.channels()) {
    const CMatrix& l = ch.op;
    const CMatrix ldl = l.adjoint() * l;
    const Superoperator jump = sandwich_superop(l, l.adjoint());
    kl += 0.5 * (jump - sandwich_superop(ldl, eye));
    kr += 0.5 * (jump - sandwich_superop(eye, ldl));
  }
  const CVector rho = rho_ss.vectorized();
  const CVector v = kl.apply(drazin.apply(kr.apply(rho))) + kr.apply(drazin.apply(kl.apply(rho)));
  return -4.0 * real_vec_trace(v, d, tolerance::kImaginaryResidual, "chi_factor");
}

bool bound_satisfied(double lhs, double rhs) {
  return lhs - rhs >= -kBoundSlack * std::max(1.0, std::abs(lhs));
}

double psi_bound_numerator(Unraveling kind, double psi) {
  const double base = kind == Unraveling::Jump ? 1.0 : 0.5;
  return (base + psi) * (base + psi);
}

double chi_bound_numerator(Unraveling kind) { return kind == Unraveling::Jump ? 1.0 : 0.25; }

UncertaintyReport make_report(Unraveling kind, double J, double D, double A,
                              std::optional<double> psi, double chi) {
  UncertaintyReport r;
  r.kind = kind;
  r.J = J;
  r.D = D;
  r.A = A;
  r.psi = psi;
  r.chi = chi;
  if (A > 0.0) {
    r.bound_classical = 1.0 / A;
    if (psi) r.bound_psi = psi_bound_numerator(kind, *psi) / A;
  }
  if (A + chi != 0.0) r.bound_chi = chi_bound_numerator(kind) / (A + chi);
  if (std::abs(J) > kZeroCurrent) {
    r.ratio = D / (J * J);
    if (r.bound_classical) r.ok_classical = bound_satisfied(*r.ratio, *r.bound_classical);
    if (r.bound_psi) r.ok_psi = bound_satisfied(*r.ratio, *r.bound_psi);
    if (r.bound_chi) r.ok_chi = bound_satisfied(*r.ratio, *r.bound_chi);
  }
  return r;
}

UncertaintyReport kur_report(const OpenSystemModel& model, const CountingScheme& scheme,
                             const SteadyStateSolution& sol) {
  const CurrentStatistics st = drazin_statistics(model, scheme, sol);
  std::optional<double> psi;
  if (std::abs(st.J) > kZeroCurrent) psi = psi_factor(model, scheme, sol.rho, sol.drazin);
  const double chi = chi_factor(model, sol.rho, sol.drazin);
  return make_report(scheme.kind(), st.J, st.D, st.A, psi, chi);
}

UncertaintyReport kur_report(const OpenSystemModel& model, const CountingScheme& scheme) {
  return kur_report(model, scheme, solve_steady_state(model));
}

}  // namespace kurlab
