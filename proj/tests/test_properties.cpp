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

#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <random>

#include "kurlab/kur.hpp"
#include "kurlab/models.hpp"

using namespace kurlab;

namespace {

CMatrix random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = {nd(rng), nd(rng)};
  return (m + m.adjoint()) / 2.0;
}

constexpr int kSamples = 20;

}  // namespace

TEST_CASE("Liouvillians preserve trace and Hermiticity") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < kSamples; ++i) {
    const NetworkSample s = sample_network(101, static_cast<std::uint64_t>(i));
    const Superoperator l = build_liouvillian(s.model);
    const int d = s.model.dim();
    CHECK((trace_row(d) * l.matrix()).norm() < 1e-12);
    const CMatrix rho0 = random_hermitian(d, rng);
    for (double t : {0.1, 1.0, 10.0}) {
      const CMatrix rt = devectorize((l.matrix() * t).exp() * vectorize(rho0), d);
      CHECK((rt - rt.adjoint()).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("statistics are invariant under channel reordering") {
  for (int i = 0; i < kSamples; ++i) {
    const NetworkSample s = sample_network(202, static_cast<std::uint64_t>(i));
    std::vector<std::size_t> order(s.model.channel_count());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = order.size() - 1 - k;
    const OpenSystemModel m2 = s.model.with_channel_order(order);
    const CountingScheme s2 = s.scheme.reordered(order);
    const DensityMatrix r1 = steady_state(build_liouvillian(s.model));
    const DensityMatrix r2 = steady_state(build_liouvillian(m2));
    CHECK((r1.matrix() - r2.matrix()).norm() < 1e-10);
    const UncertaintyReport a = kur_report(s.model, s.scheme), b = kur_report(m2, s2);
    CHECK(b.J == doctest::Approx(a.J).epsilon(1e-10));
    CHECK(b.D == doctest::Approx(a.D).epsilon(1e-9));
    CHECK(b.A == doctest::Approx(a.A).epsilon(1e-10));
    CHECK(*b.psi == doctest::Approx(*a.psi).epsilon(1e-9));
    CHECK(b.chi == doctest::Approx(a.chi).epsilon(1e-9));
  }
}

TEST_CASE("psi is invariant under phase rotation of jump operators") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> ph(0.0, 6.283185307179586);
  for (int i = 0; i < kSamples; ++i) {
    const NetworkSample s = sample_network(303, static_cast<std::uint64_t>(i));
    std::vector<JumpChannel> ch = s.model.channels();
    for (auto& c : ch) c.op *= std::polar(1.0, ph(rng));
    const OpenSystemModel rotated(s.model.hamiltonian(), ch);
    const UncertaintyReport a = kur_report(s.model, s.scheme), b = kur_report(rotated, s.scheme);
    CHECK(b.J == doctest::Approx(a.J).epsilon(1e-10));
    CHECK(b.D == doctest::Approx(a.D).epsilon(1e-9));
    CHECK(*b.psi == doctest::Approx(*a.psi).epsilon(1e-9));
  }
}

TEST_CASE("current is linear in the weights") {
  for (int i = 0; i < kSamples; ++i) {
    const NetworkSample s = sample_network(404, static_cast<std::uint64_t>(i));
    const SteadyStateSolution sol = solve_steady_state(s.model);
    const CurrentStatistics a = drazin_statistics(s.model, s.scheme, sol);
    const CurrentStatistics b = drazin_statistics(s.model, s.scheme.scaled(2.0), sol);
    CHECK(b.J == doctest::Approx(2.0 * a.J).epsilon(1e-12));
    CHECK(b.D == doctest::Approx(4.0 * a.D).epsilon(1e-10));
    CHECK(b.A == doctest::Approx(a.A).epsilon(1e-12));
    CHECK(psi_factor(s.model, s.scheme.scaled(2.0), sol.rho, sol.drazin) ==
          doctest::Approx(psi_factor(s.model, s.scheme, sol.rho, sol.drazin)).epsilon(1e-10));
  }
}

TEST_CASE("statistics invariants hold on random networks") {
  for (int i = 0; i < kSamples; ++i) {
    const NetworkSample s = sample_network(505, static_cast<std::uint64_t>(i));
    const SteadyStateSolution sol = solve_steady_state(s.model);
    const CurrentStatistics st = drazin_statistics(s.model, s.scheme, sol);
    CHECK(st.A > 0.0);
    CHECK(st.D >= -1e-10);
    const UncertaintyReport r = kur_report(s.model, s.scheme, sol);
    CHECK(r.ok_psi.value());
    CHECK(r.ok_chi.value());
  }
}

TEST_CASE("chi is non-negative for classical networks") {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const int d = 4;
    CMatrix h = CMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) h(k, k) = u(rng);
    std::vector<JumpChannel> ch;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if (a != b) {
          CMatrix op = CMatrix::Zero(d, d);
          op(a, b) = std::sqrt(0.05 + 3.0 * u(rng));
          ch.push_back({std::to_string(b) + "->" + std::to_string(a), op});
        }
    const OpenSystemModel m(h, ch);
    const SteadyStateSolution sol = solve_steady_state(m);
    CHECK(chi_factor(m, sol.rho, sol.drazin) >= -1e-10);
    // diagonal Hamiltonian commuting with a diagonal state: psi vanishes
    std::vector<double> nu(ch.size(), 0.0);
    nu[0] = 1.0;
    CHECK(std::abs(psi_factor(m, CountingScheme::jump(nu), sol.rho, sol.drazin)) < 1e-10);
  }
}

TEST_CASE("activity is positive whenever some channel fires") {
  QubitParams q;
  const BuiltModel bm = build_qubit(q);
  const SteadyStateSolution sol = solve_steady_state(bm.model);
  CHECK(dynamical_activity(bm.model, sol.rho) > 0.0);
}
