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

// Model catalog: serial double quantum dot, coherently driven qubit, random 5-level networks.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kurlab/classical.hpp"
#include "kurlab/counting.hpp"

namespace kurlab {

/// A generator plus the counting schemes defined for it, looked up by name.
struct BuiltModel {
  OpenSystemModel model;
  std::vector<std::pair<std::string, CountingScheme>> schemes;

  const CountingScheme& scheme(std::string_view name) const;
};

// ---------------------------------------------------------------------------------------------
// Double quantum dot

struct DqdParams {
  double gamma_l = 1.0;
  double gamma_r = 1.0;
  double dephasing = 0.0;  // Gamma
  double g = 1.0;
  double eps = 0.0;
  double beta_l = 1.0;
  double beta_r = 1.0;
  double mu_l = 7.0;
  double mu_r = -7.0;

  double f_l() const;
  double f_r() const;

  /// Throws InvalidInput unless gamma_l, gamma_r > 0, Gamma >= 0 and 0 < f < 1.
  void validate() const;

  /// Parameters with chemical potentials chosen to give occupations (f_l, f_r) at eps.
  static DqdParams with_occupations(double f_l, double f_r, double gamma_l = 1.0,
                                    double gamma_r = 1.0, double dephasing = 0.0, double g = 1.0);
};

/// Basis |00>, |10>, |01>, |11> (index n_L + 2 n_R). Channels, in order:
/// "L_in" sqrt(gL fL) c_L^dag, "L_out" sqrt(gL (1-fL)) c_L, "R_in", "R_out", and "dephasing"
/// sqrt(Gamma/2)(n_L - n_R). Schemes: "through", "in-only", "charge-diff".
BuiltModel build_dqd(const DqdParams& p);

/// Closed-form steady-state quantities of the DQD with the through-current counted.
struct DqdAnalytic {
  double J = 0.0;
  double A = 0.0;
  double D_jump = 0.0;
  double D_classical = 0.0;
  double psi_jump = 0.0;
  double psi_diff = 0.0;
  std::optional<double> psi_inonly;  // only for Gamma = 0
  double J_d = 0.0;
  double C = 0.0;  // l1 coherence, sum of |off-diagonal| entries
  Complex alpha;   // <10| rho |01>
  double p0 = 0.0, pL = 0.0, pR = 0.0, pD = 0.0;
  double W_LR = 0.0;
  double A_classical = 0.0;
};

DqdAnalytic dqd_analytic(const DqdParams& p);

/// Classical DQD rate model on [p0, pL, pR, pD] and the through-current weights.
std::pair<RateModel, TransitionWeights> dqd_classical(const DqdParams& p);

/// Map [p0, pL, pR, pD] -> [p0, pL + pR, pL - pR, pD].
RMatrix dqd_symmetric_basis();

/// Three-state model [p0, pL + pR, pD] after eliminating pL - pR.
AdiabaticResult dqd_adiabatic(const DqdParams& p);

// ---------------------------------------------------------------------------------------------
// Driven qubit

struct QubitParams {
  double kappa = 1.0;
  double nbar = 0.0;
  double delta = 0.0;
  double omega = 1.0;

  double q() const;
  void validate() const;
};

/// Basis |0> (ground), |1> (excited); H = (Delta/2) sigma_z + Omega sigma_x.
/// Channels "absorb" sqrt(kappa nbar) sigma_+, "emit" sqrt(kappa (nbar + 1)) sigma_-.
/// Schemes: "emission" (jump), "homodyne" (diffusive, phi = pi/2).
BuiltModel build_qubit(const QubitParams& p);

struct QubitAnalytic {
  double rho00 = 0.0;
  double rho11 = 0.0;
  Complex rho10;
  double J = 0.0;
  double A = 0.0;
  double D = 0.0;
  double psi = 0.0;
  double J_d = 0.0;  // signed, for nu = +1 on sigma_- and phi = pi/2
  double psi_d = 0.0;
  double D_classical = 0.0;
  double gamma_c = 0.0;
};

QubitAnalytic qubit_analytic(const QubitParams& p);

std::pair<RateModel, TransitionWeights> qubit_classical(const QubitParams& p);

// ---------------------------------------------------------------------------------------------
// Random networks

struct NetworkEdge {
  int a = 0;  // a < b
  int b = 0;
  bool coherent = false;
  double g = 0.0;
  double gamma_fwd = 0.0;  // rate of b -> a, jump operator sqrt(gamma_fwd) |a><b|
  double gamma_bwd = 0.0;  // rate of a -> b
  double sigma = 0.0;

  bool operator==(const NetworkEdge&) const = default;
};

struct NetworkSpec {
  int n = 5;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::vector<NetworkEdge> edges;
  std::pair<int, int> counted_edge{0, 0};
  int retries = 0;

  bool operator==(const NetworkSpec&) const = default;
};

struct NetworkSample {
  OpenSystemModel model;
  CountingScheme scheme;
  NetworkSpec spec;
};

inline constexpr int kNetworkRetryBudget = 100;

/// Name of the pseudo-random generator family used for ensembles (recorded in outputs).
inline constexpr std::string_view kNetworkRngName = "mt19937_64/seed_seq(seed,index)";

/// Builds the generator for an explicit edge list (no validation of the counted edge).
OpenSystemModel network_model(const NetworkSpec& spec);

/// Deterministic in (seed, index). Throws RetryBudgetExhausted after 100 rejected draws.
NetworkSample sample_network(std::uint64_t seed, std::uint64_t index, int n = 5);

}  // namespace kurlab
