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

// Parameter sweeps and ensembles producing the figure tables.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "kurlab/report_io.hpp"

namespace kurlab {

enum class Experiment { Fig1a, Fig1b, Fig1c, Fig2, QubitJump, QubitDiffusive, Verify };

Experiment parse_experiment(std::string_view name);
std::string_view to_string(Experiment e);

struct SweepConfig {
  Experiment experiment = Experiment::Fig1a;
  int points = 50;
  std::optional<double> xmin;  // g/gamma or Omega/kappa; default 1e-2
  std::optional<double> xmax;  // default 1e2
  bool log_grid = true;
  std::optional<double> dephasing;  // Gamma/gamma; default 0, or 1 for fig1c
  double bias = 7.0;                // beta mu_L = -beta mu_R
  double nbar = 0.0;
  double detuning = 0.0;
  std::uint64_t seed = 42;
  int samples = 1000;
  std::string out;  // empty: standard output
  OutputFormat format = OutputFormat::Csv;
  int threads = 1;

  /// Throws InvalidInput on inconsistent settings.
  void validate() const;
};

/// Columns: x, J, D, A, psi, chi, ratio, bound_classical, bound_psi, bound_chi, ok_psi, then
/// experiment-specific columns, then error. Rows are in grid/sample order.
Table run_table(const SweepConfig& cfg);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidConfig = 2;

/// Runs the experiment and writes the output (file or stdout). `verify` runs the acceptance
/// suite and prints its report. Returns an exit code.
int run_sweep(const SweepConfig& cfg);

}  // namespace kurlab
