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

#include "kurlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "kurlab/error.hpp"
#include "kurlab/kur.hpp"
#include "kurlab/models.hpp"

namespace kurlab {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kEnsembleSeed = 42;
constexpr int kEnsembleSize = 1000;
constexpr int kOracleNetworks = 100;
constexpr int kGridPoints = 50;
constexpr double kNearZeroChiBound = 0.05;  // A/(A+chi) below this counts as "near zero"

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

const std::vector<double>& dqd_dephasings() {
  static const std::vector<double> v{0.0, 0.3, 1.0};
  return v;
}

DqdParams dqd_point(double g, double dephasing) {
  DqdParams p;
  p.g = g;
  p.dephasing = dephasing;
  return p;
}

// Tracks the worst error of a family of comparisons.
struct Tally {
  double worst = 0.0;
  std::string where;
  int checks = 0;
  int failures = 0;
  std::string first_failure;

  void record(double err, double tol, const std::string& what) {
    ++checks;
    if (!(err <= worst)) {  // NaN counts as worse
      worst = err;
      where = what;
    }
    if (!(err <= tol)) {
      if (failures == 0) first_failure = what + " err " + sci(err);
      ++failures;
    }
  }
  void rel(double x, double ref, double tol, const std::string& what) {
    const double err = ref != 0.0 ? std::abs(x - ref) / std::abs(ref) : std::abs(x);
    record(err, tol, what);
  }
  void abs_scaled(double x, double ref, double tol, const std::string& what) {
    record(std::abs(x - ref) / std::max(1.0, std::abs(ref)), tol, what);
  }
  void flag(bool ok, const std::string& what) { record(ok ? 0.0 : 1.0, 0.5, what); }
  bool ok() const { return failures == 0 && checks > 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks << " checks, worst " << sci(worst) << " (" << where << ")";
    if (failures) os << "; " << failures << " failed, first: " << first_failure;
    return os.str();
  }
};

std::string at_g(const char* q, double g, double dephasing) {
  std::ostringstream os;
  os << q << " g=" << sci(g) << " Gamma=" << sci(dephasing);
  return os.str();
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Evaluated reports shared by the inequality and ensemble criteria.
struct LabeledReport {
  std::string label;
  UncertaintyReport report;
};

struct SuiteData {
  std::vector<LabeledReport> reports;
  std::vector<UncertaintyReport> ensemble;
  std::vector<std::string> errors;
  double seconds = 0.0;
};

QubitParams qubit_point(double omega, double nbar, double delta) {
  QubitParams p;
  p.omega = omega;
  p.nbar = nbar;
  p.delta = delta;
  return p;
}

template <class F>
void guarded(std::vector<std::string>& errors, const std::string& label, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    errors.push_back(label + ": " + e.what());
  }
}

SuiteData evaluate_suite() {
  SuiteData data;
  const auto t0 = Clock::now();
  for (double G : dqd_dephasings()) {
    for (double g : log_grid(1e-2, 1e2, kGridPoints)) {
      guarded(data.errors, at_g("dqd", g, G), [&] {
        const BuiltModel bm = build_dqd(dqd_point(g, G));
        const SteadyStateSolution sol = solve_steady_state(bm.model);
        data.reports.push_back({at_g("dqd jump", g, G), kur_report(bm.model, bm.scheme("through"), sol)});
        if (G > 0.0) {
          data.reports.push_back(
              {at_g("dqd diffusive", g, G), kur_report(bm.model, bm.scheme("charge-diff"), sol)});
        }
      });
    }
  }
  for (double nbar : {0.0, 1.0}) {
    for (double delta : {0.0, 1.0}) {
      for (double om : log_grid(1e-2, 1e2, kGridPoints)) {
        std::ostringstream label;
        label << "qubit Omega=" << sci(om) << " nbar=" << nbar << " Delta=" << delta;
        guarded(data.errors, label.str(), [&] {
          const BuiltModel bm = build_qubit(qubit_point(om, nbar, delta));
          const SteadyStateSolution sol = solve_steady_state(bm.model);
          data.reports.push_back({label.str() + " jump", kur_report(bm.model, bm.scheme("emission"), sol)});
          data.reports.push_back(
              {label.str() + " diffusive", kur_report(bm.model, bm.scheme("homodyne"), sol)});
        });
      }
    }
  }
  for (int i = 0; i < kEnsembleSize; ++i) {
    const std::string label = "network " + std::to_string(i);
    guarded(data.errors, label, [&] {
      const NetworkSample s = sample_network(kEnsembleSeed, static_cast<std::uint64_t>(i));
      UncertaintyReport r = kur_report(s.model, s.scheme);
      data.reports.push_back({label, r});
      data.ensemble.push_back(r);
    });
  }
  data.seconds = seconds_since(t0);
  return data;
}

// --------------------------------------------------------------------------------------------
// Individual criteria

CriterionResult dqd_analytic_agreement() {
  CriterionResult c{"dqd-analytic", "Analytic-numeric DQD agreement (rel 1e-8, < 5 s)"};
  const auto t0 = Clock::now();
  Tally t;
  std::vector<std::string> errors;
  for (double G : dqd_dephasings()) {
    for (double g : log_grid(1e-2, 1e2, kGridPoints)) {
      guarded(errors, at_g("dqd", g, G), [&] {
        const DqdParams p = dqd_point(g, G);
        const BuiltModel bm = build_dqd(p);
        const DqdAnalytic a = dqd_analytic(p);
        const SteadyStateSolution sol = solve_steady_state(bm.model);
        const CountingScheme& through = bm.scheme("through");
        const CurrentStatistics st = drazin_statistics(bm.model, through, sol);
        const double psi = psi_factor(bm.model, through, sol.rho, sol.drazin);
        const CMatrix& rho = sol.rho.matrix();
        t.rel(st.J, a.J, 1e-8, at_g("J", g, G));
        t.rel(st.D, a.D_jump, 1e-8, at_g("D", g, G));
        t.rel(st.A, a.A, 1e-8, at_g("A", g, G));
        t.rel(psi, a.psi_jump, 1e-8, at_g("psi", g, G));
        t.rel(rho(0, 0).real(), a.p0, 1e-8, at_g("p0", g, G));
        t.rel(rho(1, 1).real(), a.pL, 1e-8, at_g("pL", g, G));
        t.rel(rho(2, 2).real(), a.pR, 1e-8, at_g("pR", g, G));
        t.rel(rho(3, 3).real(), a.pD, 1e-8, at_g("pD", g, G));
        t.record(std::abs(rho(1, 2) - a.alpha) / std::abs(a.alpha), 1e-8, at_g("alpha", g, G));
        t.rel(l1_coherence(rho), a.C, 1e-8, at_g("C", g, G));
        if (G > 0.0) {
          const CountingScheme& diff = bm.scheme("charge-diff");
          t.rel(mean_current(current_superop(bm.model, diff), sol.rho), a.J_d, 1e-8,
                at_g("J_d", g, G));
          t.rel(psi_factor(bm.model, diff, sol.rho, sol.drazin), a.psi_diff, 1e-8,
                at_g("psi_d", g, G));
        } else {
          t.rel(psi_factor(bm.model, bm.scheme("in-only"), sol.rho, sol.drazin), *a.psi_inonly,
                1e-8, at_g("psi_in", g, G));
        }
      });
    }
  }
  c.seconds = seconds_since(t0);
  c.passed = t.ok() && errors.empty() && c.seconds < 5.0;
  c.detail = t.summary() + "; " + sci(c.seconds) + " s";
  if (!errors.empty()) c.detail += "; error: " + errors.front();
  return c;
}

CriterionResult point_check() {
  CriterionResult c{"psi-point", "Point check g=gamma=1, Gamma=0: psi=-0.4, (1+psi)^2=0.36 (1e-12)"};
  const auto t0 = Clock::now();
  const BuiltModel bm = build_dqd(dqd_point(1.0, 0.0));
  const auto r = kur_report(bm.model, bm.scheme("through"));
  const double psi = r.psi.value_or(std::nan(""));
  const double sq = (1.0 + psi) * (1.0 + psi);
  c.passed = std::abs(psi + 0.4) <= 1e-12 && std::abs(sq - 0.36) <= 1e-12;
  std::ostringstream os;
  os.precision(17);
  os << "psi=" << psi << " (1+psi)^2=" << sq;
  c.detail = os.str();
  c.seconds = seconds_since(t0);
  return c;
}

CriterionResult limit_checks() {
  CriterionResult c{"psi-limits",
                    "Limits: |psi+2|<1e-3 at g=1e-3, |psi|<1e-3 at g=1e3, |(1+psi)^2-1|<1e-2 at "
                    "Gamma=1e3, g=1"};
  const auto t0 = Clock::now();
  auto numeric_psi = [](double g, double G) {
    const BuiltModel bm = build_dqd(dqd_point(g, G));
    return *kur_report(bm.model, bm.scheme("through")).psi;
  };
  const double small = numeric_psi(1e-3, 0.0);
  const double large = numeric_psi(1e3, 0.0);
  const double deph = numeric_psi(1.0, 1e3);
  const double dev = std::abs((1.0 + deph) * (1.0 + deph) - 1.0);
  const bool ok_small = std::abs(small + 2.0) < 1e-3;
  const bool ok_large = std::abs(large) < 1e-3;
  const bool ok_deph = dev < 1e-2;
  c.passed = ok_small && ok_large && ok_deph;
  c.detail = "|psi+2|=" + sci(std::abs(small + 2.0)) + " |psi|=" + sci(std::abs(large)) +
             " |(1+psi)^2-1|=" + sci(dev) + " at Gamma=1e3";
  // The strong-dephasing deviation follows exactly from the closed form:
  // 1 - (1+psi)^2 = -psi (2 + psi) with psi = -2 gL gR (s+2G)/den, about 16/1010 at G=1e3.
  const DqdAnalytic a = dqd_analytic(dqd_point(1.0, 1e3));
  const double predicted = std::abs((1.0 + a.psi_jump) * (1.0 + a.psi_jump) - 1.0);
  if (ok_small && ok_large && !ok_deph && std::abs(dev - predicted) <= 1e-10) {
    c.known_unattainable = true;
    c.analysis = "closed form gives |(1+psi)^2-1| = " + sci(predicted) +
                 " at Gamma=1e3 (needs Gamma >= ~1.6e3 for 1e-2); numeric matches it to 1e-10";
  }
  c.seconds = seconds_since(t0);
  return c;
}

CriterionResult psi_kur_suite(const SuiteData& data) {
  CriterionResult c{"psi-kur", "psi-KUR on DQD grid, qubit grid, 1000 networks (< 60 s)"};
  Tally t;
  for (const auto& lr : data.reports) {
    t.flag(lr.report.ok_psi.value_or(false), lr.label);
  }
  c.seconds = data.seconds;
  c.passed = t.ok() && data.errors.empty() && data.ensemble.size() == kEnsembleSize &&
             data.seconds < 60.0;
  c.detail = std::to_string(t.checks) + " points, " + std::to_string(t.failures) +
             " violations; " + sci(data.seconds) + " s";
  if (t.failures) c.detail += "; first: " + t.first_failure;
  if (!data.errors.empty()) c.detail += "; error: " + data.errors.front();
  return c;
}

CriterionResult chi_kur_suite(const SuiteData& data) {
  CriterionResult c{"chi-kur", "chi-KUR on the same grids"};
  Tally t;
  for (const auto& lr : data.reports) t.flag(lr.report.ok_chi.value_or(false), lr.label);
  c.seconds = data.seconds;
  c.passed = t.ok() && data.errors.empty();
  c.detail = std::to_string(t.checks) + " points, " + std::to_string(t.failures) + " violations";
  if (t.failures) c.detail += "; first: " + t.first_failure;
  return c;
}

CriterionResult conductance_series() {
  CriterionResult c{"psi-range", "DQD through-current psi in [-2, 0] over 500 random draws"};
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240601);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, unit()); };
  double lo = 0.0, hi = -2.0;
  int bad = 0;
  std::vector<std::string> errors;
  for (int i = 0; i < 500; ++i) {
    DqdParams p;
    p.g = log_uniform(1e-2, 1e2);
    p.gamma_l = log_uniform(1e-1, 1e1);
    p.gamma_r = log_uniform(1e-1, 1e1);
    p.dephasing = 10.0 * unit();
    guarded(errors, "draw " + std::to_string(i), [&] {
      const BuiltModel bm = build_dqd(p);
      const double psi = *kur_report(bm.model, bm.scheme("through")).psi;
      lo = std::min(lo, psi);
      hi = std::max(hi, psi);
      if (psi < -2.0 - 1e-9 || psi > 1e-9) ++bad;
    });
  }
  c.passed = bad == 0 && errors.empty();
  c.detail = "psi range [" + sci(lo) + ", " + sci(hi) + "], " + std::to_string(bad) + " outside";
  if (!errors.empty()) c.detail += "; error: " + errors.front();
  c.seconds = seconds_since(t0);
  return c;
}

CriterionResult oracle_equivalence() {
  CriterionResult c{"fcs-oracle",
                    "FCS tilted-generator vs Drazin (J 1e-8, D 1e-6, scaled by max(1,|x|))"};
  const auto t0 = Clock::now();
  Tally tj, td;
  std::vector<std::string> errors;
  auto compare = [&](const std::string& label, const OpenSystemModel& m, const CountingScheme& s) {
    guarded(errors, label, [&] {
      const CurrentStatistics dz = drazin_statistics(m, s);
      const CurrentStatistics fc = fcs_oracle(m, s);
      tj.abs_scaled(fc.J, dz.J, 1e-8, label);
      td.abs_scaled(fc.D, dz.D, 1e-6, label);
    });
  };
  for (double G : dqd_dephasings()) {
    for (double g : log_grid(1e-2, 1e2, kGridPoints)) {
      const BuiltModel bm = build_dqd(dqd_point(g, G));
      compare(at_g("dqd jump", g, G), bm.model, bm.scheme("through"));
      if (G > 0.0) compare(at_g("dqd diffusive", g, G), bm.model, bm.scheme("charge-diff"));
    }
  }
  for (double nbar : {0.0, 1.0}) {
    for (double delta : {0.0, 1.0}) {
      for (double om : log_grid(1e-2, 1e2, kGridPoints)) {
        const BuiltModel bm = build_qubit(qubit_point(om, nbar, delta));
        const std::string label = "qubit Omega=" + sci(om) + " nbar=" + sci(nbar) + " Delta=" + sci(delta);
        compare(label + " jump", bm.model, bm.scheme("emission"));
        compare(label + " diffusive", bm.model, bm.scheme("homodyne"));
      }
    }
  }
  for (int i = 0; i < kOracleNetworks; ++i) {
    guarded(errors, "network " + std::to_string(i), [&] {
      const NetworkSample s = sample_network(kEnsembleSeed, static_cast<std::uint64_t>(i));
      compare("network " + std::to_string(i), s.model, s.scheme);
    });
  }
  c.passed = tj.ok() && td.ok() && errors.empty();
  c.detail = "J: " + tj.summary() + "; D: " + td.summary();
  if (!errors.empty()) c.detail += "; error: " + errors.front();
  c.seconds = seconds_since(t0);
  return c;
}

CriterionResult theta_check() {
  CriterionResult c{"theta-derivative",
                    "theta-derivative = J(1+psi) / J_d(1/2+psi) (rel 1e-3 at 1e-4, quadratic)"};
  const auto t0 = Clock::now();
  struct Case {
    std::string label;
    OpenSystemModel model;
    CountingScheme scheme;
    double target;
  };
  std::vector<Case> cases;
  {
    const DqdParams p = dqd_point(1.0, 0.0);
    const BuiltModel bm = build_dqd(p);
    const DqdAnalytic a = dqd_analytic(p);
    cases.push_back({"dqd jump", bm.model, bm.scheme("through"), a.J * (1.0 + a.psi_jump)});
  }
  {
    const DqdParams p = dqd_point(1.0, 1.0);
    const BuiltModel bm = build_dqd(p);
    const DqdAnalytic a = dqd_analytic(p);
    cases.push_back({"dqd diffusive", bm.model, bm.scheme("charge-diff"), a.J_d * (0.5 + a.psi_diff)});
  }
  {
    const QubitParams p = qubit_point(1.0, 0.0, 0.0);
    const BuiltModel bm = build_qubit(p);
    const QubitAnalytic a = qubit_analytic(p);
    cases.push_back({"qubit jump", bm.model, bm.scheme("emission"), a.J * (1.0 + a.psi)});
    cases.push_back({"qubit diffusive", bm.model, bm.scheme("homodyne"), a.J_d * (0.5 + a.psi_d)});
  }
  const double theta = 1e-4;
  Tally acc, conv;
  std::ostringstream ratios;
  for (const auto& k : cases) {
    const double d1 = theta_derivative_check(k.model, k.scheme, theta);
    const double d2 = theta_derivative_check(k.model, k.scheme, theta / 2.0);
    acc.rel(d1, k.target, 1e-3, k.label);
    const double e1 = std::abs(d1 - k.target), e2 = std::abs(d2 - k.target);
    const double ratio = e1 / e2;
    // Second-order central differences: halving theta divides the error by 4.
    conv.record(std::abs(ratio - 4.0), 0.5, k.label);
    ratios << " " << k.label << ":" << sci(ratio);
  }
  c.passed = acc.ok() && conv.ok();
  c.detail = "rel err " + acc.summary() + "; error ratios e(t)/e(t/2)" + ratios.str();
  c.seconds = seconds_since(t0);
  return c;
}

CriterionResult classical_comparison() {
  CriterionResult c{"classical", "Classical DQD: J equal, D closed form, noise dip at g=gamma, A_ad"};
  const auto t0 = Clock::now();
  Tally tj, td;
  std::vector<std::string> errors;
  for (double G : dqd_dephasings()) {
    for (double g : log_grid(1e-2, 1e2, kGridPoints)) {
      guarded(errors, at_g("dqd", g, G), [&] {
        const DqdParams p = dqd_point(g, G);
        const BuiltModel bm = build_dqd(p);
        const auto [rm, w] = dqd_classical(p);
        const CurrentStatistics cl = classical_current_stats(rm, w);
        const CurrentStatistics qu = drazin_statistics(bm.model, bm.scheme("through"));
        tj.record(std::abs(cl.J - qu.J), 1e-10, at_g("J", g, G));
        td.rel(cl.D, dqd_analytic(p).D_classical, 1e-8, at_g("D_cl", g, G));
      });
    }
  }
  auto discrepancy = [](double g) {
    const DqdParams p = dqd_point(g, 0.0);
    const BuiltModel bm = build_dqd(p);
    const auto [rm, w] = dqd_classical(p);
    const double dq = drazin_statistics(bm.model, bm.scheme("through")).D;
    return std::abs(classical_current_stats(rm, w).D - dq) / dq;
  };
  const double dip = discrepancy(1.0), lo = discrepancy(1e-2), hi = discrepancy(1e2);
  const DqdParams p100 = dqd_point(1e2, 0.0);
  const BuiltModel bm100 = build_dqd(p100);
  const double a_q = drazin_statistics(bm100.model, bm100.scheme("through")).A;
  const double a_ad = dqd_adiabatic(p100).activity;
  const double ad_err = std::abs(a_ad - a_q) / a_q;
  c.passed = tj.ok() && td.ok() && errors.empty() && dip > 0.05 && lo < 0.01 && hi < 0.01 &&
             ad_err < 1e-2;
  c.detail = "J max abs diff " + sci(tj.worst) + "; D_cl " + td.summary() + "; dD/D at g=1: " +
             sci(dip) + ", g=1e-2: " + sci(lo) + ", g=1e2: " + sci(hi) +
             "; |A_ad-A|/A at g=1e2: " + sci(ad_err);
  if (!errors.empty()) c.detail += "; error: " + errors.front();
  c.seconds = seconds_since(t0);
  return c;
}

CriterionResult coherence_identity() {
  CriterionResult c{"coherence", "Closed-form coherence C equals l1 norm of numeric state (1e-10)"};
  const auto t0 = Clock::now();
  Tally t;
  for (double G : dqd_dephasings()) {
    for (double g : log_grid(1e-2, 1e2, kGridPoints)) {
      const DqdParams p = dqd_point(g, G);
      const BuiltModel bm = build_dqd(p);
      const DensityMatrix rho = steady_state(build_liouvillian(bm.model));
      t.record(std::abs(dqd_analytic(p).C - l1_coherence(rho.matrix())), 1e-10, at_g("C", g, G));
    }
  }
  c.passed = t.ok();
  c.detail = t.summary();
  c.seconds = seconds_since(t0);
  return c;
}

CriterionResult ensemble_reproduction(const SuiteData& data) {
  CriterionResult c{"network-ensemble",
                    "1000 networks: psi of both signs, no psi-KUR violation, A/(A+chi) near 0"};
  int pos = 0, neg = 0, viol = 0, near_zero = 0;
  for (const auto& r : data.ensemble) {
    if (r.psi && *r.psi > 0.0) ++pos;
    if (r.psi && *r.psi < 0.0) ++neg;
    if (!r.ok_psi.value_or(false)) ++viol;
    if (r.A + r.chi > 0.0 && r.A / (r.A + r.chi) < kNearZeroChiBound) ++near_zero;
  }
  c.passed = data.ensemble.size() == kEnsembleSize && pos > 0 && neg > 0 && viol == 0 &&
             near_zero > 0;
  c.detail = std::to_string(data.ensemble.size()) + " samples: psi>0 " + std::to_string(pos) +
             ", psi<0 " + std::to_string(neg) + ", violations " + std::to_string(viol) +
             ", A/(A+chi)<" + sci(kNearZeroChiBound) + " " + std::to_string(near_zero);
  c.seconds = 0.0;
  return c;
}

// Uncorrected closed forms that disagree with the generator they describe; reported for reference.
std::vector<std::string> uncorrected_form_notes() {
  std::vector<std::string> notes;
  const DqdParams p = dqd_point(1.0, 0.3);
  const double gl = p.gamma_l, gr = p.gamma_r, G = p.dephasing, g = p.g;
  const double fl = p.f_l(), fr = p.f_r(), s = gl + gr;
  const double den = 4 * g * g * s + gl * gr * (s + 2 * G);
  const double fb = (fl * gl + fr * gr) / s;
  const DqdAnalytic a = dqd_analytic(p);
  const double d_raw =
      4 * g * g * (fl + fr - 2 * fl * fr) * gl * gr / den +
      a.J * 32 * g * g * (fl - fr) * gl * gr * (s + G) / (s * den) -
      2 * a.J * a.J *
          (4 * g * g * s * (5 * gl + 5 * gr + 6 * G) +
           2 * (s + 2 * G) * (2 * G * (gl * gl + 3 * gl * gr + gr * gr) + s * (gl * gl + 7 * gl * gr + gr * gr))) /
          (s * den);
  const double a_raw = (8 * g * g * s * s * fb * (1 - fb + G / s) +
                            gl * gr * (s + 2 * G) * (2 * gl * fl * (1 - fl) + 2 * gr * fr * (1 - fr) + G * (fl + fr))) /
                           den;
  const double c_raw = 2 * g * std::abs(fl - fr) / (s + G) * std::abs(a.psi_jump);
  notes.push_back("reference g=1, Gamma=0.3: uncorrected quantum D " + sci(d_raw) + " vs generator " +
                  sci(a.D_jump) + "; uncorrected A " + sci(a_raw) + " vs " + sci(a.A) +
                  "; uncorrected coherence " + sci(c_raw) + " vs |alpha| " + sci(std::abs(a.alpha)) +
                  " and l1 " + sci(a.C));
  return notes;
}

}  // namespace

bool AcceptanceSummary::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

bool AcceptanceSummary::only_known_failures() const {
  return std::all_of(results.begin(), results.end(),
                     [](const auto& r) { return r.passed || r.known_unattainable; });
}

std::string AcceptanceSummary::render() const {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " :: " << r.detail
       << "\n";
    if (!r.passed && r.known_unattainable) {
      os << "      known unattainable: " << r.analysis << "\n";
    }
  }
  for (const auto& n : notes) os << "note: " << n << "\n";
  os << passed << "/" << results.size() << " criteria passed\n";
  return os.str();
}

AcceptanceSummary run_acceptance() {
  AcceptanceSummary s;
  auto run = [&](const std::function<CriterionResult()>& f, const char* id) {
    try {
      s.results.push_back(f());
    } catch (const std::exception& e) {
      s.results.push_back(CriterionResult{id, id, false, std::string("exception: ") + e.what()});
    }
  };
  run(dqd_analytic_agreement, "dqd-analytic");
  run(point_check, "psi-point");
  run(limit_checks, "psi-limits");
  const SuiteData suite = evaluate_suite();
  run([&] { return psi_kur_suite(suite); }, "psi-kur");
  run([&] { return chi_kur_suite(suite); }, "chi-kur");
  run(conductance_series, "psi-range");
  run(oracle_equivalence, "fcs-oracle");
  run(theta_check, "theta-derivative");
  run(classical_comparison, "classical");
  run(coherence_identity, "coherence");
  run([&] { return ensemble_reproduction(suite); }, "network-ensemble");
  s.notes = uncorrected_form_notes();
  return s;
}

}  // namespace kurlab
