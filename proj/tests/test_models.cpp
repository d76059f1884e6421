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

#include <cmath>

#include "kurlab/error.hpp"
#include "kurlab/kur.hpp"
#include "kurlab/models.hpp"

using namespace kurlab;

TEST_CASE("DQD closed forms match the oracle values") {
  DqdParams p;
  p.dephasing = 0.3;
  const DqdAnalytic a = dqd_analytic(p);
  CHECK(a.J == doctest::Approx(0.37667090475894294).epsilon(1e-12));
  CHECK(a.D_jump == doctest::Approx(0.11164858630367908).epsilon(1e-10));
  CHECK(a.A == doctest::Approx(0.8489392762030918).epsilon(1e-10));
  CHECK(a.psi_jump == doctest::Approx(-0.4905660377358491).epsilon(1e-12));
  CHECK(a.psi_diff == doctest::Approx(1.509433962264151).epsilon(1e-12));
  CHECK(a.J_d == doctest::Approx(0.18964921834719461).epsilon(1e-12));
  CHECK(std::abs(a.alpha - Complex(0.0, 0.18833545237947147)) < 1e-12);
  CHECK(a.C == doctest::Approx(2.0 * 0.18833545237947147).epsilon(1e-12));
  CHECK_FALSE(a.psi_inonly);

  p.dephasing = 0.0;
  const DqdAnalytic b = dqd_analytic(p);
  REQUIRE(b.psi_inonly);
  CHECK(*b.psi_inonly == doctest::Approx(-0.3990893636237784).epsilon(1e-10));
  CHECK(b.W_LR == doctest::Approx(2.0));
}

TEST_CASE("DQD parameter validation") {
  DqdParams p;
  p.gamma_l = 0.0;
  CHECK_THROWS_AS(build_dqd(p), KurError);
  p = DqdParams{};
  p.dephasing = -1.0;
  CHECK_THROWS_AS(build_dqd(p), KurError);
  const DqdParams q = DqdParams::with_occupations(0.8, 0.1);
  CHECK(q.f_l() == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(q.f_r() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK_THROWS_AS(build_dqd(DqdParams{}).scheme("missing"), KurError);
}

TEST_CASE("qubit closed forms against the generic pipeline") {
  for (double nbar : {0.0, 1.0, 0.5}) {
    for (double delta : {0.0, 0.7}) {
      for (double om : {0.01, 0.3, 2.0, 100.0}) {
        QubitParams p;
        p.nbar = nbar;
        p.delta = delta;
        p.omega = om;
        CAPTURE(nbar);
        CAPTURE(delta);
        CAPTURE(om);
        const QubitAnalytic a = qubit_analytic(p);
        const BuiltModel bm = build_qubit(p);
        const SteadyStateSolution sol = solve_steady_state(bm.model);
        const CMatrix& r = sol.rho.matrix();
        CHECK(r(0, 0).real() == doctest::Approx(a.rho00).epsilon(1e-8));
        CHECK(r(1, 1).real() == doctest::Approx(a.rho11).epsilon(1e-8));
        CHECK(std::abs(r(1, 0) - a.rho10) <= 1e-8 * std::abs(a.rho10));
        const CurrentStatistics j = drazin_statistics(bm.model, bm.scheme("emission"), sol);
        CHECK(j.J == doctest::Approx(a.J).epsilon(1e-8));
        CHECK(j.A == doctest::Approx(a.A).epsilon(1e-8));
        CHECK(j.D == doctest::Approx(a.D).epsilon(1e-8));
        CHECK(psi_factor(bm.model, bm.scheme("emission"), sol.rho, sol.drazin) ==
              doctest::Approx(a.psi).epsilon(1e-8));
        const CountingScheme& hd = bm.scheme("homodyne");
        CHECK(mean_current(current_superop(bm.model, hd), sol.rho) == doctest::Approx(a.J_d).epsilon(1e-8));
        CHECK(psi_factor(bm.model, hd, sol.rho, sol.drazin) == doctest::Approx(a.psi_d).epsilon(1e-8));
        const auto [rm, w] = qubit_classical(p);
        const CurrentStatistics c = classical_current_stats(rm, w);
        CHECK(c.J == doctest::Approx(a.J).epsilon(1e-8));
        CHECK(c.D == doctest::Approx(a.D_classical).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("qubit oracle point with thermal occupation") {
  QubitParams p;
  p.nbar = 1.0;
  p.delta = 1.0;
  p.omega = 0.3;
  const BuiltModel bm = build_qubit(p);
  const UncertaintyReport r = kur_report(bm.model, bm.scheme("emission"));
  CHECK(r.J == doctest::Approx(0.026239067055393625).epsilon(1e-10));
  CHECK(r.D == doctest::Approx(0.07794775322067249).epsilon(1e-9));
  CHECK(*r.psi == doctest::Approx(-1.3119533527696794).epsilon(1e-10));
  CHECK(r.chi == doctest::Approx(0.9898019761304755).epsilon(1e-9));
  QubitParams bad;
  bad.kappa = 0.0;
  CHECK_THROWS_AS(build_qubit(bad), KurError);
}

TEST_CASE("random networks are deterministic in (seed, index)") {
  const NetworkSample a = sample_network(42, 3), b = sample_network(42, 3);
  CHECK(a.spec == b.spec);
  CHECK((a.model.hamiltonian() - b.model.hamiltonian()).norm() == 0.0);
  CHECK_FALSE(sample_network(42, 4).spec == a.spec);
  CHECK_FALSE(sample_network(43, 3).spec == a.spec);
  CHECK(a.model.dim() == 5);
}

TEST_CASE("network samples respect their parameter ranges") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const NetworkSample s = sample_network(7, i);
    const auto [ca, cb] = s.spec.counted_edge;
    bool counted_dissipative = false;
    for (const NetworkEdge& e : s.spec.edges) {
      CHECK(e.a < e.b);
      if (e.coherent) {
        CHECK(e.g >= 0.0);
        CHECK(e.g <= 3.0);
      } else {
        CHECK(e.gamma_fwd >= 0.0);
        CHECK(e.gamma_fwd <= 3.0);
        CHECK(e.sigma >= 3.0);
        CHECK(e.sigma <= 5.0);
        CHECK(e.gamma_bwd == doctest::Approx(e.gamma_fwd * std::exp(-e.sigma)));
        if (e.a == ca && e.b == cb) counted_dissipative = true;
      }
    }
    CHECK(counted_dissipative);
    CHECK(s.spec.retries <= kNetworkRetryBudget);
    const UncertaintyReport r = kur_report(s.model, s.scheme);
    CHECK(std::abs(r.J) > kZeroCurrent);
  }
}
