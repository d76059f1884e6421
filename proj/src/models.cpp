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

#include "kurlab/models.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "kurlab/error.hpp"
#include "kurlab/kur.hpp"

namespace kurlab {
namespace {

double fermi(double beta, double eps, double mu) { return 1.0 / (std::exp(beta * (eps - mu)) + 1.0); }

void require_param(bool ok, const char* what) {
  if (!ok) throw KurError(ErrorKind::InvalidInput, what);
}

CMatrix dense(int d) { return CMatrix::Zero(d, d); }

// Fermionic annihilators on the 4-dim space, index n_L + 2 n_R. c_R picks up (-1)^{n_L}.
std::pair<CMatrix, CMatrix> dqd_annihilators() {
  CMatrix cl = dense(4), cr = dense(4);
  for (int nl = 0; nl < 2; ++nl) {
    for (int nr = 0; nr < 2; ++nr) {
      const int s = nl + 2 * nr;
      if (nl) cl(2 * nr, s) = 1.0;
      if (nr) cr(nl, s) = nl ? -1.0 : 1.0;
    }
  }
  return {cl, cr};
}

// Uniform double in [0, 1) from the top 53 bits; independent of the standard library's
// distribution implementations.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(rng);
}

}  // namespace

const CountingScheme& BuiltModel::scheme(std::string_view name) const {
  for (const auto& [n, s] : schemes) {
    if (n == name) return s;
  }
  throw KurError(ErrorKind::InvalidInput, "unknown counting scheme '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------------------------
// DQD

double DqdParams::f_l() const { return fermi(beta_l, eps, mu_l); }
double DqdParams::f_r() const { return fermi(beta_r, eps, mu_r); }

void DqdParams::validate() const {
  require_param(std::isfinite(gamma_l) && gamma_l > 0.0, "gamma_L must be positive");
  require_param(std::isfinite(gamma_r) && gamma_r > 0.0, "gamma_R must be positive");
  require_param(std::isfinite(dephasing) && dephasing >= 0.0, "Gamma must be non-negative");
  require_param(std::isfinite(g) && std::isfinite(eps), "g and eps must be finite");
  const double fl = f_l(), fr = f_r();
  require_param(fl > 0.0 && fl < 1.0 && fr > 0.0 && fr < 1.0,
                "Fermi occupations must lie strictly inside (0, 1)");
}

DqdParams DqdParams::with_occupations(double f_l, double f_r, double gamma_l, double gamma_r,
                                      double dephasing, double g) {
  require_param(f_l > 0.0 && f_l < 1.0 && f_r > 0.0 && f_r < 1.0,
                "occupations must lie strictly inside (0, 1)");
  DqdParams p;
  p.gamma_l = gamma_l;
  p.gamma_r = gamma_r;
  p.dephasing = dephasing;
  p.g = g;
  p.eps = 0.0;
  p.beta_l = p.beta_r = 1.0;
  // f = 1 / (exp(-mu) + 1)  =>  mu = log(f / (1 - f))
  p.mu_l = std::log(f_l / (1.0 - f_l));
  p.mu_r = std::log(f_r / (1.0 - f_r));
  return p;
}

BuiltModel build_dqd(const DqdParams& p) {
  p.validate();
  const auto [cl, cr] = dqd_annihilators();
  const CMatrix nl = cl.adjoint() * cl;
  const CMatrix nr = cr.adjoint() * cr;
  const double fl = p.f_l(), fr = p.f_r();
  const CMatrix h = p.eps * (nl + nr) + p.g * (cl.adjoint() * cr + cr.adjoint() * cl);
  std::vector<JumpChannel> ch{
      {"L_in", std::sqrt(p.gamma_l * fl) * cl.adjoint()},
      {"L_out", std::sqrt(p.gamma_l * (1.0 - fl)) * cl},
      {"R_in", std::sqrt(p.gamma_r * fr) * cr.adjoint()},
      {"R_out", std::sqrt(p.gamma_r * (1.0 - fr)) * cr},
      {"dephasing", std::sqrt(p.dephasing / 2.0) * (nl - nr)},
  };
  BuiltModel out{OpenSystemModel(h, std::move(ch)), {}};
  out.schemes.emplace_back("through", CountingScheme::jump({1.0, -1.0, 0.0, 0.0, 0.0}));
  out.schemes.emplace_back("in-only", CountingScheme::jump({1.0, 0.0, 0.0, 0.0, 0.0}));
  out.schemes.emplace_back("charge-diff", CountingScheme::diffusive({0.0, 0.0, 0.0, 0.0, 1.0},
                                                                    {0.0, 0.0, 0.0, 0.0, 0.0}));
  return out;
}

DqdAnalytic dqd_analytic(const DqdParams& p) {
  p.validate();
  const double gl = p.gamma_l, gr = p.gamma_r, G = p.dephasing, g = p.g;
  const double fl = p.f_l(), fr = p.f_r();
  const double s = gl + gr;
  const double g2 = g * g;
  const double den = 4.0 * g2 * s + gl * gr * (s + 2.0 * G);
  const double fb = (fl * gl + fr * gr) / s;

  DqdAnalytic a;
  a.p0 = (4.0 * g2 * (1 - fb) * (1 - fb) * s + (1 - fl) * (1 - fr) * gl * gr * (s + 2 * G)) / den;
  a.pD = (4.0 * g2 * fb * fb * s + fl * fr * gl * gr * (s + 2 * G)) / den;
  a.pL = (4.0 * g2 * fb * (1 - fb) * s + fl * (1 - fr) * gl * gr * (s + 2 * G)) / den;
  a.pR = (4.0 * g2 * fb * (1 - fb) * s + (1 - fl) * fr * gl * gr * (s + 2 * G)) / den;
  a.alpha = Complex(0.0, 2.0 * g * (fl - fr) * gl * gr / den);

  a.J = 4.0 * g2 * (fl - fr) * gl * gr / den;

  // Activity evaluated on the closed-form populations: reservoir jumps plus dephasing jumps.
  const double occ_l = a.pL + a.pD, occ_r = a.pR + a.pD;
  a.A = gl * (fl * (1 - occ_l) + (1 - fl) * occ_l) + gr * (fr * (1 - occ_r) + (1 - fr) * occ_r) +
        0.5 * G * (a.pL + a.pR);

  const double t1 = 4.0 * g2 * (fl + fr - 2 * fl * fr) * gl * gr / den;
  const double quad = gl * gl + gl * gr + gr * gr;
  a.D_jump = t1 - 2.0 * a.J * a.J *
                      (4.0 * g2 * s + s * (gl * gl + 3 * gl * gr + gr * gr) + 2.0 * G * quad) /
                      (s * den);
  a.D_classical = t1 - 2.0 * a.J * a.J * (4.0 * g2 * s + (s + 2.0 * G) * quad) / (s * den);

  a.psi_jump = -2.0 * gl * gr * (s + 2.0 * G) / den;
  a.psi_diff = 8.0 * g2 * s / den;
  if (G == 0.0) {
    a.psi_inonly = 8.0 * g2 * (fl - fr) * gl * gr * gr /
                   ((4.0 * g2 + gl * gr) *
                    ((fl - 1) * gl * gr * s + 4.0 * g2 * ((fl - 1) * gl + (fr - 1) * gr)));
  }
  a.J_d = std::sqrt(2.0 * G) * (fl - fr) * gl * gr * (s + 2.0 * G) / den;
  a.C = 2.0 * g * std::abs(fl - fr) / (s + 2.0 * G) * std::abs(a.psi_jump);
  a.W_LR = perturbative_interdot_rate(g, gl, gr, G);
  a.A_classical = a.A + (a.W_LR - 0.5 * G) * (a.pL + a.pR);
  return a;
}

std::pair<RateModel, TransitionWeights> dqd_classical(const DqdParams& p) {
  p.validate();
  const double gl = p.gamma_l, gr = p.gamma_r;
  const double fl = p.f_l(), fr = p.f_r();
  const double w = perturbative_interdot_rate(p.g, gl, gr, p.dephasing);
  RMatrix W(4, 4);
  W << -fl * gl - fr * gr, (1 - fl) * gl, (1 - fr) * gr, 0.0,
       fl * gl, -(1 - fl) * gl - fr * gr - w, w, (1 - fr) * gr,
       fr * gr, w, -fl * gl - (1 - fr) * gr - w, (1 - fl) * gl,
       0.0, fr * gr, fl * gl, -(1 - fl) * gl - (1 - fr) * gr;
  RMatrix nu = RMatrix::Zero(4, 4);
  nu(1, 0) = 1.0;   // 0 -> L
  nu(3, 2) = 1.0;   // R -> D
  nu(0, 1) = -1.0;  // L -> 0
  nu(2, 3) = -1.0;  // D -> R
  return {RateModel(std::move(W), {"0", "L", "R", "D"}), TransitionWeights{std::move(nu), {}}};
}

RMatrix dqd_symmetric_basis() {
  RMatrix t(4, 4);
  t << 1, 0, 0, 0,
       0, 1, 1, 0,
       0, 1, -1, 0,
       0, 0, 0, 1;
  return t;
}

AdiabaticResult dqd_adiabatic(const DqdParams& p) {
  const auto [rm, weights] = dqd_classical(p);
  (void)weights;
  return adiabatic_eliminate(change_basis(rm.w(), dqd_symmetric_basis()), 2);
}

// ---------------------------------------------------------------------------------------------
// Qubit

double QubitParams::q() const {
  const double b = kappa * (1.0 + 2.0 * nbar);
  return b * b + 4.0 * (delta * delta + 2.0 * omega * omega);
}

void QubitParams::validate() const {
  require_param(std::isfinite(kappa) && kappa > 0.0, "kappa must be positive");
  require_param(std::isfinite(nbar) && nbar >= 0.0, "nbar must be non-negative");
  require_param(std::isfinite(delta) && std::isfinite(omega), "Delta and Omega must be finite");
}

BuiltModel build_qubit(const QubitParams& p) {
  p.validate();
  CMatrix sm = dense(2);  // |0><1|
  sm(0, 1) = 1.0;
  const CMatrix sp = sm.adjoint();
  CMatrix sz = dense(2);
  sz(0, 0) = -1.0;
  sz(1, 1) = 1.0;
  CMatrix sx = dense(2);
  sx(0, 1) = sx(1, 0) = 1.0;
  const CMatrix h = 0.5 * p.delta * sz + p.omega * sx;
  std::vector<JumpChannel> ch{
      {"absorb", std::sqrt(p.kappa * p.nbar) * sp},
      {"emit", std::sqrt(p.kappa * (p.nbar + 1.0)) * sm},
  };
  BuiltModel out{OpenSystemModel(h, std::move(ch)), {}};
  const double half_pi = std::numbers::pi / 2.0;
  out.schemes.emplace_back("emission", CountingScheme::jump({-1.0, 1.0}));
  out.schemes.emplace_back("homodyne",
                           CountingScheme::diffusive({-1.0, 1.0}, {half_pi, half_pi}));
  return out;
}

QubitAnalytic qubit_analytic(const QubitParams& p) {
  p.validate();
  const double k = p.kappa, n = p.nbar, dl = p.delta, om = p.omega;
  const double Q = p.q();
  const double m = 1.0 + 2.0 * n;
  const double om2 = om * om;
  QubitAnalytic a;
  a.rho00 = ((1 + n) * (Q - 8 * om2) + 4 * m * om2) / (m * Q);
  a.rho11 = (n * (Q - 8 * om2) + 4 * m * om2) / (m * Q);
  a.rho10 = Complex(-4.0 * dl * om, -2.0 * k * m * om) / (m * Q);
  a.J = 4.0 * k * om2 / Q;
  a.A = (2 * k * n * (1 + n) * (Q - 8 * om2) + 4 * k * m * m * om2) / (m * Q);
  const double qm = Q - 8 * om2;
  a.D = a.A - 2 * k *
                  (n * (1 + n) * qm * qm * qm + 16 * n * (1 + n) * qm * qm * om2 +
                   16 * (k * k * m * m * (3 + 4 * n * (1 + n)) + 4 * (-1 + 4 * n * (1 + n)) * dl * dl) *
                       om2 * om2) /
                  (m * Q * Q * Q);
  a.psi = -2.0 * k * k * m * m / Q;
  a.J_d = -4.0 * k * om * (std::sqrt(k * n) + std::sqrt(k * (1 + n))) / Q;
  a.psi_d = (Q - 2.0 * k * k * m * m) / Q;
  const double b = k * k * m * m + 4 * dl * dl;
  a.D_classical = 4 * k * om2 *
                  ((k * k * m * m * m + 4 * m * dl * dl) * (k * k * m * m * m + 4 * m * dl * dl) +
                   8 * (1 + 8 * n * (1 + n)) * b * om2 + 64 * m * m * om2 * om2) /
                  (m * Q * Q * Q);
  a.gamma_c = 4.0 * k * m * om2 / b;
  return a;
}

std::pair<RateModel, TransitionWeights> qubit_classical(const QubitParams& p) {
  p.validate();
  const double k = p.kappa, n = p.nbar;
  const double gc = qubit_analytic(p).gamma_c;
  RMatrix W(2, 2);
  W << -k * n - gc, k * (n + 1) + gc,
       k * n + gc, -k * (n + 1) - gc;
  // Only the reservoir part of each transition is a monitored emission/absorption.
  RMatrix counted = RMatrix::Zero(2, 2);
  counted(0, 1) = k * (n + 1);
  counted(1, 0) = k * n;
  RMatrix nu = RMatrix::Zero(2, 2);
  nu(0, 1) = 1.0;   // emission 1 -> 0
  nu(1, 0) = -1.0;  // absorption 0 -> 1
  return {RateModel(std::move(W), {"0", "1"}), TransitionWeights{std::move(nu), counted}};
}

// ---------------------------------------------------------------------------------------------
// Random networks

OpenSystemModel network_model(const NetworkSpec& spec) {
  const int n = spec.n;
  require_param(n >= 2, "network needs at least two levels");
  CMatrix h = dense(n);
  std::vector<JumpChannel> ch;
  for (const auto& e : spec.edges) {
    require_param(e.a >= 0 && e.a < e.b && e.b < n, "bad network edge");
    if (e.coherent) {
      h(e.a, e.b) += e.g;
      h(e.b, e.a) += e.g;
      continue;
    }
    CMatrix fwd = dense(n), bwd = dense(n);
    fwd(e.a, e.b) = std::sqrt(e.gamma_fwd);
    bwd(e.b, e.a) = std::sqrt(e.gamma_bwd);
    ch.push_back({std::to_string(e.b) + "->" + std::to_string(e.a), std::move(fwd)});
    ch.push_back({std::to_string(e.a) + "->" + std::to_string(e.b), std::move(bwd)});
  }
  return OpenSystemModel(std::move(h), std::move(ch), /*allow_pure_hamiltonian=*/true);
}

NetworkSample sample_network(std::uint64_t seed, std::uint64_t index, int n) {
  require_param(n >= 2, "network needs at least two levels");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::string last_reason;
  for (int attempt = 0; attempt <= kNetworkRetryBudget; ++attempt) {
    NetworkSpec spec;
    spec.n = n;
    spec.seed = seed;
    spec.index = index;
    spec.retries = attempt;
    bool have_counted = false;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        NetworkEdge e;
        e.a = a;
        e.b = b;
        e.coherent = unit_uniform(rng) < 0.5;
        if (e.coherent) {
          e.g = uniform(rng, 0.0, 3.0);
        } else {
          e.gamma_fwd = uniform(rng, 0.0, 3.0);
          e.sigma = uniform(rng, 3.0, 5.0);
          e.gamma_bwd = e.gamma_fwd * std::exp(-e.sigma);
          if (!have_counted) {
            spec.counted_edge = {a, b};
            have_counted = true;
          }
        }
        spec.edges.push_back(e);
      }
    }
    if (!have_counted) {
      last_reason = "no dissipative edge";
      continue;
    }
    OpenSystemModel model = network_model(spec);
    // Channels come in (forward, backward) pairs in edge order; the counted edge is the first.
    std::vector<double> nu(model.channel_count(), 0.0);
    nu[0] = 1.0;
    nu[1] = -1.0;
    CountingScheme scheme = CountingScheme::jump(std::move(nu));
    try {
      const DensityMatrix rho = steady_state(build_liouvillian(model));
      const double j = mean_current(current_superop(model, scheme), rho);
      if (!(std::abs(j) > kZeroCurrent)) {
        last_reason = "vanishing current";
        continue;
      }
    } catch (const KurError& err) {
      if (err.kind() != ErrorKind::DegenerateSteadyState &&
          err.kind() != ErrorKind::NoStationaryState) {
        throw;
      }
      last_reason = err.what();
      continue;
    }
    return NetworkSample{std::move(model), std::move(scheme), std::move(spec)};
  }
  std::ostringstream os;
  os << "network sample (seed " << seed << ", index " << index << ") rejected "
     << kNetworkRetryBudget + 1 << " times; last reason: " << last_reason;
  throw KurError(ErrorKind::RetryBudgetExhausted, os.str());
}

}  // namespace kurlab
