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

// Classical rate equations dp/dt = W p and their current statistics.

#include <optional>
#include <string>
#include <vector>

#include "kurlab/counting.hpp"

namespace kurlab {

/// Column-generator W: W(k, j) is the rate of j -> k for k != j, columns sum to zero.
class RateModel {
 public:
  /// Throws InvalidInput on negative off-diagonal rates or a column sum above
  /// 1e-12 max(1, max |W(:, j)|).
  explicit RateModel(RMatrix w, std::vector<std::string> labels = {});

  int n() const { return static_cast<int>(w_.rows()); }
  const RMatrix& w() const { return w_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  RMatrix w_;
  std::vector<std::string> labels_;
};

/// nu(k, j) weights the transition j -> k. `counted_rates`, when present, replaces W as the
/// rate matrix whose transitions are counted (for models where only part of a rate belongs to
/// the monitored process); it must be elementwise bounded by W off the diagonal.
struct TransitionWeights {
  RMatrix nu;
  std::optional<RMatrix> counted_rates;
};

/// Unique stationary distribution. Throws DegenerateSteadyState for a reducible chain.
RVector classical_steady_state(const RateModel& rm);

/// Drazin inverse of W (same row-replacement solver as the quantum case).
RMatrix classical_drazin(const RateModel& rm, const RVector& p);

/// J, D and the classical activity A_cl = sum_{k != j} W(k, j) p(j).
CurrentStatistics classical_current_stats(const RateModel& rm, const TransitionWeights& weights);

/// 4 g^2 / (gamma_L + gamma_R + 2 Gamma).
double perturbative_interdot_rate(double g, double gamma_l, double gamma_r, double dephasing);

/// T W T^{-1}: the generator for the transformed coordinates q = T p.
RMatrix change_basis(const RMatrix& w, const RMatrix& t);

/// Reduced generator of an adiabatic elimination. Columns still sum to zero, but off-diagonal
/// entries may be slightly negative (of order slow^2 / fast), so it is kept as a plain matrix.
struct AdiabaticResult {
  RMatrix reduced;
  RVector p;          // stationary vector of `reduced`, normalized to sum 1
  double activity = 0.0;  // sum_{k != j} reduced(k, j) p(j)
  /// |W(f, f)| >= threshold * max_k |W(k, k)| over the retained indices.
  bool fast_dominates = false;
  double gap_ratio = 0.0;
};

/// Eliminates coordinate `fast_index`: W'(k, j) = W(k, j) - W(k, f) W(f, j) / W(f, f).
/// Throws InvalidInput if W(f, f) == 0; the timescale check is reported, not enforced.
AdiabaticResult adiabatic_eliminate(const RMatrix& w_tilde, int fast_index,
                                    double threshold = 10.0);

/// Stationary vector of a column-conserving generator (entries need not be rates).
RVector generator_stationary(const RMatrix& w);

/// Total jump rate sum_{k != j} W(k, j) p(j) of a rate model at its steady state.
double classical_activity(const RateModel& rm);

}  // namespace kurlab
