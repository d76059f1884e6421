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

// Coherence factors and kinetic uncertainty bounds.
//
//   classical   D/J^2 >= 1/A
//   psi-bound   D/J^2 >= (1 + psi)^2 / A        (jump)    (1/2 + psi)^2 / A   (diffusive)
//   chi-bound   D/J^2 >= 1 / (A + chi)          (jump)    (1/4) / (A + chi)   (diffusive)

#include <optional>

#include "kurlab/counting.hpp"

namespace kurlab {

/// Currents with |J| at or below this are treated as zero; ratio quantities become undefined.
inline constexpr double kZeroCurrent = 1e-12;

/// Relative slack used when testing a bound lhs >= rhs.
inline constexpr double kBoundSlack = 1e-9;

/// psi = Tr{J L^+ H rho} / J with H rho = -i[H, rho]. Throws UndefinedPsi when |J| <= 1e-12.
double psi_factor(const OpenSystemModel& model, const CountingScheme& scheme,
                  const DensityMatrix& rho_ss, const Superoperator& drazin);

/// chi = -4 (Tr{K_L L^+ K_R rho} + Tr{K_R L^+ K_L rho}); independent of the unraveling.
double chi_factor(const OpenSystemModel& model, const DensityMatrix& rho_ss,
                  const Superoperator& drazin);

/// lhs - rhs >= -1e-9 max(1, |lhs|).
bool bound_satisfied(double lhs, double rhs);

struct UncertaintyReport {
  Unraveling kind = Unraveling::Jump;
  double J = 0.0;
  double D = 0.0;
  double A = 0.0;
  std::optional<double> psi;
  double chi = 0.0;
  std::optional<double> ratio;  // D / J^2
  std::optional<double> bound_classical;
  std::optional<double> bound_psi;
  std::optional<double> bound_chi;
  std::optional<bool> ok_classical;
  std::optional<bool> ok_psi;
  std::optional<bool> ok_chi;
};

/// Numerator of the psi bound: (1 + psi)^2 or (1/2 + psi)^2.
double psi_bound_numerator(Unraveling kind, double psi);

/// Numerator of the chi bound: 1 or 1/4.
double chi_bound_numerator(Unraveling kind);

UncertaintyReport kur_report(const OpenSystemModel& model, const CountingScheme& scheme);
UncertaintyReport kur_report(const OpenSystemModel& model, const CountingScheme& scheme,
                             const SteadyStateSolution& sol);

/// Assembles the bound fields from raw statistics (exposed so classical or analytic values can
/// be reported through the same path).
UncertaintyReport make_report(Unraveling kind, double J, double D, double A,
                              std::optional<double> psi, double chi);

}  // namespace kurlab
