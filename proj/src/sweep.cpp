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

#include "kurlab/sweep.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>
#include <vector>

#include "kurlab/acceptance.hpp"
#include "kurlab/error.hpp"
#include "kurlab/models.hpp"

namespace kurlab {
namespace {

const std::vector<std::string> kBaseColumns{"x",         "J",         "D",     "A",
                                            "psi",       "chi",       "ratio", "bound_classical",
                                            "bound_psi", "bound_chi", "ok_psi"};

struct Row {
  std::vector<Cell> base;
  std::vector<Cell> extra;
  std::string error;
};

std::vector<Cell> base_cells(double x, const UncertaintyReport& r) {
  return {x,          r.J,         r.D,           r.A,
          cell(r.psi), r.chi,      cell(r.ratio), cell(r.bound_classical),
          cell(r.bound_psi), cell(r.bound_chi), cell(r.ok_psi)};
}

std::vector<double> grid(const SweepConfig& cfg) {
  const double lo = cfg.xmin.value_or(1e-2), hi = cfg.xmax.value_or(1e2);
  std::vector<double> xs(cfg.points);
  for (int i = 0; i < cfg.points; ++i) {
    const double t = static_cast<double>(i) / (cfg.points - 1);
    xs[i] = cfg.log_grid ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

// Runs f(i) for i in [0, n) on up to `threads` workers; results land at their own index.
void parallel_for(int n, int threads, const std::function<void(int)>& f) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

DqdParams dqd_params(const SweepConfig& cfg, double g, double default_dephasing) {
  DqdParams p;
  p.g = g;
  p.dephasing = cfg.dephasing.value_or(default_dephasing);
  p.mu_l = cfg.bias;
  p.mu_r = -cfg.bias;
  return p;
}

QubitParams qubit_params(const SweepConfig& cfg, double omega) {
  QubitParams p;
  p.omega = omega;
  p.nbar = cfg.nbar;
  p.delta = cfg.detuning;
  return p;
}

Row evaluate(const SweepConfig& cfg, int i, double x) {
  Row row;
  switch (cfg.experiment) {
    case Experiment::Fig1a: {
      const DqdParams p = dqd_params(cfg, x, 0.0);
      const BuiltModel bm = build_dqd(p);
      const auto r = kur_report(bm.model, bm.scheme("through"));
      const auto [rm, w] = dqd_classical(p);
      (void)w;
      row.base = base_cells(x, r);
      row.extra = {classical_activity(rm), dqd_adiabatic(p).activity};
      break;
    }
    case Experiment::Fig1b: {
      const DqdParams p = dqd_params(cfg, x, 0.0);
      const BuiltModel bm = build_dqd(p);
      const SteadyStateSolution sol = solve_steady_state(bm.model);
      const auto r = kur_report(bm.model, bm.scheme("through"), sol);
      const auto [rm, w] = dqd_classical(p);
      row.base = base_cells(x, r);
      row.extra = {classical_current_stats(rm, w).D, l1_coherence(sol.rho.matrix())};
      break;
    }
    case Experiment::Fig1c: {
      const DqdParams p = dqd_params(cfg, x, 1.0);
      const BuiltModel bm = build_dqd(p);
      const auto r = kur_report(bm.model, bm.scheme("charge-diff"));
      row.base = base_cells(x, r);
      row.extra = {r.A + r.chi != 0.0 ? Cell(1.0 / (r.A + r.chi)) : Cell()};
      break;
    }
    case Experiment::QubitJump: {
      const QubitParams p = qubit_params(cfg, x);
      const BuiltModel bm = build_qubit(p);
      const SteadyStateSolution sol = solve_steady_state(bm.model);
      const auto r = kur_report(bm.model, bm.scheme("emission"), sol);
      const auto [rm, w] = qubit_classical(p);
      row.base = base_cells(x, r);
      row.extra = {classical_current_stats(rm, w).D, l1_coherence(sol.rho.matrix())};
      break;
    }
    case Experiment::QubitDiffusive: {
      const BuiltModel bm = build_qubit(qubit_params(cfg, x));
      const auto r = kur_report(bm.model, bm.scheme("homodyne"));
      row.base = base_cells(x, r);
      row.extra = {r.A + r.chi != 0.0 ? Cell(1.0 / (r.A + r.chi)) : Cell()};
      break;
    }
    case Experiment::Fig2: {
      const NetworkSample s = sample_network(cfg.seed, static_cast<std::uint64_t>(i));
      const auto r = kur_report(s.model, s.scheme);
      const double xval = r.psi ? (1.0 + *r.psi) * (1.0 + *r.psi) : std::nan("");
      row.base = base_cells(xval, r);
      if (!r.psi) row.base[0] = Cell();
      const std::int64_t sign = !r.psi ? 0 : (*r.psi > 0.0 ? 1 : (*r.psi < 0.0 ? -1 : 0));
      row.extra = {static_cast<std::int64_t>(i), sign,
                   static_cast<std::int64_t>(s.spec.retries), std::string(kNetworkRngName)};
      break;
    }
    case Experiment::Verify:
      throw KurError(ErrorKind::InvalidInput, "verify produces no table");
  }
  return row;
}

std::vector<std::string> extra_columns(Experiment e) {
  switch (e) {
    case Experiment::Fig1a: return {"A_cl", "A_ad"};
    case Experiment::Fig1b: return {"D_classical", "C"};
    case Experiment::Fig1c: return {"bound_chi_unit"};
    case Experiment::QubitJump: return {"D_classical", "C"};
    case Experiment::QubitDiffusive: return {"bound_chi_unit"};
    case Experiment::Fig2: return {"seed_index", "psi_sign", "retries", "rng"};
    case Experiment::Verify: return {};
  }
  return {};
}

}  // namespace

Experiment parse_experiment(std::string_view name) {
  for (auto e : {Experiment::Fig1a, Experiment::Fig1b, Experiment::Fig1c, Experiment::Fig2,
                 Experiment::QubitJump, Experiment::QubitDiffusive, Experiment::Verify}) {
    if (to_string(e) == name) return e;
  }
  throw KurError(ErrorKind::InvalidInput, "unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::Fig1a: return "fig1a";
    case Experiment::Fig1b: return "fig1b";
    case Experiment::Fig1c: return "fig1c";
    case Experiment::Fig2: return "fig2";
    case Experiment::QubitJump: return "qubit_jump";
    case Experiment::QubitDiffusive: return "qubit_diffusive";
    case Experiment::Verify: return "verify";
  }
  return "?";
}

void SweepConfig::validate() const {
  auto bad = [](const std::string& what) { throw KurError(ErrorKind::InvalidInput, what); };
  if (experiment == Experiment::Verify) return;
  if (experiment == Experiment::Fig2) {
    if (samples < 1) bad("fig2 needs at least one sample");
  } else {
    if (points < 2) bad("sweeps need at least two grid points");
    const double lo = xmin.value_or(1e-2), hi = xmax.value_or(1e2);
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) bad("grid needs min < max");
    if (log_grid && !(lo > 0.0)) bad("a logarithmic grid needs a positive minimum");
  }
  if (dephasing && !(*dephasing >= 0.0)) bad("dephasing rate must be non-negative");
  if (!std::isfinite(bias)) bad("bias must be finite");
  if (!(nbar >= 0.0)) bad("nbar must be non-negative");
  if (!std::isfinite(detuning)) bad("detuning must be finite");
  if (threads < 1) bad("threads must be positive");
}

Table run_table(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.experiment == Experiment::Verify) {
    throw KurError(ErrorKind::InvalidInput, "verify produces no table");
  }
  const bool ensemble = cfg.experiment == Experiment::Fig2;
  const std::vector<double> xs = ensemble ? std::vector<double>(cfg.samples, 0.0) : grid(cfg);
  const int n = static_cast<int>(xs.size());
  const auto extras = extra_columns(cfg.experiment);

  std::vector<Row> rows(n);
  parallel_for(n, cfg.threads, [&](int i) {
    try {
      rows[i] = evaluate(cfg, i, xs[i]);
    } catch (const KurError& err) {
      rows[i] = Row{};
      rows[i].error = err.what();
    }
  });

  Table t;
  t.columns = kBaseColumns;
  t.columns.insert(t.columns.end(), extras.begin(), extras.end());
  t.columns.push_back("error");
  for (int i = 0; i < n; ++i) {
    std::vector<Cell> r = rows[i].base;
    if (r.empty()) {
      r.assign(kBaseColumns.size(), Cell());
      if (!ensemble) r[0] = xs[i];
    }
    std::vector<Cell> ex = rows[i].extra;
    ex.resize(extras.size());
    if (ensemble && rows[i].base.empty()) ex[0] = static_cast<std::int64_t>(i);
    r.insert(r.end(), ex.begin(), ex.end());
    r.push_back(rows[i].error.empty() ? Cell() : Cell(rows[i].error));
    t.rows.push_back(std::move(r));
  }
  return t;
}

int run_sweep(const SweepConfig& cfg) {
  try {
    cfg.validate();
  } catch (const KurError& err) {
    std::cerr << "invalid configuration: " << err.what() << "\n";
    return kExitInvalidConfig;
  }
  std::string text;
  int code = kExitOk;
  if (cfg.experiment == Experiment::Verify) {
    const AcceptanceSummary summary = run_acceptance();
    text = summary.render();
    if (!summary.all_passed()) code = kExitVerifyFailed;
  } else {
    text = render(run_table(cfg), cfg.format);
  }
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file " << cfg.out << "\n";
      return kExitInvalidConfig;
    }
    f << text;
    if (cfg.experiment == Experiment::Verify) std::cout << text;
  }
  return code;
}

}  // namespace kurlab
