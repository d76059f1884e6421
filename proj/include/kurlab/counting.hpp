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

// Monitored currents and their long-time statistics.
//
// J is the mean rate, D the scaled variance Var[N(t)]/t as t -> infinity, and A the mean
// number of jumps per unit time. Two independent routes compute (J, D): the Drazin-inverse
// formulas and finite differences of the leading eigenvalue of a tilted generator.

#include <optional>
#include <string_view>
#include <vector>

#include "kurlab/superop.hpp"

namespace kurlab {

enum class Unraveling { Jump, Diffusive };

constexpr std::string_view to_string(Unraveling u) {
  return u == Unraveling::Jump ? "jump" : "diffusive";
}

/// Per-channel weights nu_k (and phases phi_k for homodyne-type detection).
class CountingScheme {
 public:
  static CountingScheme jump(std::vector<double> weights);
  static CountingScheme diffusive(std::vector<double> weights, std::vector<double> phases);

  Unraveling kind() const { return kind_; }
  const std::vector<double>& weights() const { return weights_; }
  /// Empty for jump schemes.
  const std::vector<double>& phases() const { return phases_; }

  /// Throws InvalidInput if the weight count differs from the model's channel count.
  void validate(const OpenSystemModel& model) const;

  CountingScheme scaled(double factor) const;

  /// Weights and phases permuted alongside OpenSystemModel::with_channel_order.
  CountingScheme reordered(const std::vector<std::size_t>& order) const;

 private:
  CountingScheme(Unraveling kind, std::vector<double> weights, std::vector<double> phases);

  Unraveling kind_;
  std::vector<double> weights_;
  std::vector<double> phases_;
};

enum class StatsMethod { Drazin, Fcs };

struct CurrentStatistics {
  double J = 0.0;
  double D = 0.0;
  double A = 0.0;
  StatsMethod method = StatsMethod::Drazin;
};

/// Jump: sum nu_k L_k . L_k^dag.  Diffusive: sum nu_k (e^{-i phi_k} L_k . + e^{i phi_k} . L_k^dag).
Superoperator current_superop(const OpenSystemModel& model, const CountingScheme& scheme);

/// Re Tr{J rho}; throws NumericalInconsistency if the imaginary part exceeds 1e-10.
double mean_current(const Superoperator& current, const DensityMatrix& rho_ss);

/// sum_k Tr{L_k rho L_k^dag} over every channel.
double dynamical_activity(const OpenSystemModel& model, const DensityMatrix& rho_ss);

double noise_drazin(const OpenSystemModel& model, const CountingScheme& scheme,
                    const DensityMatrix& rho_ss, const Superoperator& drazin);

/// Shared intermediate results of the Drazin pipeline for one model.
struct SteadyStateSolution {
  Superoperator liouvillian;
  DensityMatrix rho;
  Superoperator drazin;
};

SteadyStateSolution solve_steady_state(const OpenSystemModel& model);

CurrentStatistics drazin_statistics(const OpenSystemModel& model, const CountingScheme& scheme);
CurrentStatistics drazin_statistics(const OpenSystemModel& model, const CountingScheme& scheme,
                                    const SteadyStateSolution& sol);

struct FcsOptions {
  double step = 1e-3;
  /// Minimum separation (real part) between the leading eigenvalue and the rest.
  double min_gap = 1e-8;
};

/// Leading eigenvalue (largest real part) of the tilted generator at counting field chi.
Complex tilted_leading_eigenvalue(const OpenSystemModel& model, const CountingScheme& scheme,
                                  double chi, double min_gap = 1e-8);

/// Tilted generator L_chi (exposed for tests).
CMatrix tilted_generator(const OpenSystemModel& model, const CountingScheme& scheme, double chi);

/// (J, D) from 5-point central differences of the leading eigenvalue; A from the steady state.
CurrentStatistics fcs_oracle(const OpenSystemModel& model, const CountingScheme& scheme,
                             const FcsOptions& options = {});

/// Mean current of the model with all jump operators scaled by sqrt(1 + theta), including the
/// unraveling prefactor: (1 + theta) for jump, sqrt(1 + theta) for diffusive detection.
double deformed_current(const OpenSystemModel& model, const CountingScheme& scheme,
                        double theta);

/// Central difference of deformed_current at theta = 0.
double theta_derivative_check(const OpenSystemModel& model, const CountingScheme& scheme,
                              double theta);

}  // namespace kurlab
