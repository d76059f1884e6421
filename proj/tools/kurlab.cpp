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

// Command-line runner for the sweeps, ensembles and the verification suite.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "kurlab/error.hpp"
#include "kurlab/sweep.hpp"

int main(int argc, char** argv) {
  using namespace kurlab;
  CLI::App app{"Kinetic uncertainty relation experiments for open quantum systems"};

  std::string experiment = "fig1a";
  std::string format = "csv";
  std::optional<double> gmin, gmax, omega_min, omega_max, dephasing;
  SweepConfig cfg;
  bool linear = false;

  app.add_option("--experiment", experiment,
                 "fig1a | fig1b | fig1c | fig2 | qubit_jump | qubit_diffusive | verify");
  app.add_option("--points", cfg.points, "Grid points of a sweep")->capture_default_str();
  app.add_option("--gmin", gmin, "Smallest g/gamma (DQD sweeps, default 1e-2)");
  app.add_option("--gmax", gmax, "Largest g/gamma (DQD sweeps, default 1e2)");
  app.add_option("--omega-min", omega_min, "Smallest Omega/kappa (qubit sweeps, default 1e-2)");
  app.add_option("--omega-max", omega_max, "Largest Omega/kappa (qubit sweeps, default 1e2)");
  app.add_option("--gamma-dephasing", dephasing, "Dephasing rate Gamma/gamma (default 0, fig1c 1)");
  app.add_option("--bias", cfg.bias, "beta*mu_L = -beta*mu_R")->capture_default_str();
  app.add_option("--nbar", cfg.nbar, "Thermal occupation of the qubit bath")->capture_default_str();
  app.add_option("--detuning", cfg.detuning, "Qubit detuning Delta/kappa")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Ensemble seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Ensemble size (fig2)")->capture_default_str();
  app.add_option("--out", cfg.out, "Output file (default: standard output)");
  app.add_option("--format", format, "csv | json")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
  app.add_flag("--linear", linear, "Use a linear instead of a logarithmic grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    cfg.experiment = parse_experiment(experiment);
    cfg.format = parse_format(format);
    const bool qubit =
        cfg.experiment == Experiment::QubitJump || cfg.experiment == Experiment::QubitDiffusive;
    if (qubit && (gmin || gmax)) {
      throw KurError(ErrorKind::InvalidInput, "--gmin/--gmax apply to DQD sweeps only");
    }
    if (!qubit && (omega_min || omega_max)) {
      throw KurError(ErrorKind::InvalidInput, "--omega-min/--omega-max apply to qubit sweeps only");
    }
    cfg.xmin = qubit ? omega_min : gmin;
    cfg.xmax = qubit ? omega_max : gmax;
    cfg.dephasing = dephasing;
    cfg.log_grid = !linear;
  } catch (const KurError& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitInvalidConfig;
  }

  try {
    return run_sweep(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}
