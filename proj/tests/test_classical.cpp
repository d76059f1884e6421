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

#include "kurlab/classical.hpp"
#include "kurlab/error.hpp"
#include "kurlab/models.hpp"

using namespace kurlab;

TEST_CASE("two-state chain") {
  RMatrix w(2, 2);
  w << -0.3, 0.7, 0.3, -0.7;
  const RateModel rm(w);
  const RVector p = classical_steady_state(rm);
  CHECK(p(0) == doctest::Approx(0.7));
  CHECK(p(1) == doctest::Approx(0.3));
  TransitionWeights tw{RMatrix::Zero(2, 2), std::nullopt};
  tw.nu(1, 0) = 1.0;
  const CurrentStatistics s = classical_current_stats(rm, tw);
  CHECK(s.J == doctest::Approx(0.21));
  CHECK(s.A == doctest::Approx(0.42));
  // Unidirectional counting on a renewal process: Fano factor (a^2 + b^2)/(a + b)^2
  CHECK(s.D == doctest::Approx(0.21 * (0.09 + 0.49) / 1.0));
}

TEST_CASE("rate model validation") {
  RMatrix w(2, 2);
  w << -1.0, -0.5, 1.0, 0.5;
  CHECK_THROWS_AS(RateModel{w}, KurError);
  RMatrix leak(2, 2);
  leak << -1.0, 0.5, 0.9, -0.5;
  CHECK_THROWS_AS(RateModel{leak}, KurError);
}

TEST_CASE("classical DQD against the independent oracle") {
  DqdParams p;
  const auto [rm, w] = dqd_classical(p);
  const CurrentStatistics s = classical_current_stats(rm, w);
  CHECK(s.J == doctest::Approx(0.3992711590444795).epsilon(1e-12));
  CHECK(s.D == doctest::Approx(0.1760873812332917).epsilon(1e-10));
  CHECK(s.A == doctest::Approx(2.0000000000000004).epsilon(1e-12));
  CHECK(dqd_analytic(p).D_classical == doctest::Approx(s.D).epsilon(1e-12));
  CHECK(perturbative_interdot_rate(1.0, 1.0, 1.0, 0.0) == doctest::Approx(2.0));

  p.dephasing = 0.3;
  const auto [rm3, w3] = dqd_classical(p);
  CHECK(classical_current_stats(rm3, w3).D == doctest::Approx(0.16518857516855465).epsilon(1e-10));
}

TEST_CASE("symmetric basis and adiabatic elimination") {
  DqdParams p;
  const auto [rm, w] = dqd_classical(p);
  const RMatrix wt = change_basis(rm.w(), dqd_symmetric_basis());
  // Probability conservation survives the basis change: rows p0, pL+pR, pD sum to zero columns.
  const RMatrix keep = wt({0, 1, 3}, Eigen::all);
  CHECK(keep.colwise().sum().cwiseAbs().maxCoeff() < 1e-12);
  const double wlr = 2.0;
  CHECK(wt(2, 2) < -2 * wlr + 1e-12);

  for (double g : {0.01, 1.0, 100.0}) {
    p.g = g;
    const AdiabaticResult ad = dqd_adiabatic(p);
    REQUIRE(ad.reduced.rows() == 3);
    CHECK(ad.reduced.colwise().sum().cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, ad.reduced.cwiseAbs().maxCoeff()));
    CHECK(ad.p.sum() == doctest::Approx(1.0));
  }
  p.g = 100.0;
  CHECK(dqd_adiabatic(p).fast_dominates);
  p.g = 1.0;
  CHECK_FALSE(dqd_adiabatic(p).fast_dominates);

  RMatrix bad(2, 2);
  bad << -1.0, 0.0, 1.0, 0.0;
  CHECK_THROWS_AS(adiabatic_eliminate(bad, 1), KurError);
}
