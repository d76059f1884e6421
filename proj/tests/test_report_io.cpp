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

#include "kurlab/error.hpp"
#include "kurlab/models.hpp"
#include "kurlab/report_io.hpp"
#include "kurlab/sweep.hpp"

using namespace kurlab;

namespace {

void same_report(const UncertaintyReport& a, const UncertaintyReport& b) {
  CHECK(a.kind == b.kind);
  CHECK(a.J == b.J);
  CHECK(a.D == b.D);
  CHECK(a.A == b.A);
  CHECK(a.psi == b.psi);
  CHECK(a.chi == b.chi);
  CHECK(a.ratio == b.ratio);
  CHECK(a.bound_classical == b.bound_classical);
  CHECK(a.bound_psi == b.bound_psi);
  CHECK(a.bound_chi == b.bound_chi);
  CHECK(a.ok_classical == b.ok_classical);
  CHECK(a.ok_psi == b.ok_psi);
  CHECK(a.ok_chi == b.ok_chi);
}

}  // namespace

TEST_CASE("reports round-trip through CSV and JSON bit-exactly") {
  DqdParams p;
  p.dephasing = 0.3;
  const BuiltModel bm = build_dqd(p);
  for (const char* name : {"through", "charge-diff"}) {
    const UncertaintyReport r = kur_report(bm.model, bm.scheme(name));
    for (OutputFormat f : {OutputFormat::Csv, OutputFormat::Json}) {
      same_report(parse_report(emit_report(r, f), f), r);
    }
  }
}

TEST_CASE("undefined fields survive the round trip") {
  const UncertaintyReport r = make_report(Unraveling::Jump, 0.0, 0.1, 0.5, std::nullopt, 0.2);
  CHECK_FALSE(r.ratio);
  for (OutputFormat f : {OutputFormat::Csv, OutputFormat::Json}) {
    const std::string text = emit_report(r, f);
    same_report(parse_report(text, f), r);
  }
  CHECK(emit_report(r, OutputFormat::Json).find("\"ratio\": null") != std::string::npos);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_report("nope", OutputFormat::Csv), KurError);
  CHECK_THROWS_AS(parse_report("{", OutputFormat::Json), KurError);
  CHECK_THROWS_AS(parse_format("xml"), KurError);
  CHECK_THROWS_AS(parse_experiment("fig9"), KurError);
}

TEST_CASE("table rendering") {
  Table t{{"a", "b", "c"}, {{1.5, std::string("x,\"y\""), Cell()}, {std::int64_t{3}, true, 0.1}}};
  CHECK(render_csv(t) == "a,b,c\n1.5,\"x,\"\"y\"\"\",\n3,true,0.10000000000000001\n");
  const std::string js = render_json(t);
  CHECK(js.find("\"b\": \"x,\\\"y\\\"\"") != std::string::npos);
  CHECK(js.find("\"c\": null") != std::string::npos);
  CHECK(format_double(std::nan("")).empty());
}

TEST_CASE("sweep tables have stable columns and deterministic rows") {
  SweepConfig cfg;
  cfg.experiment = Experiment::Fig1a;
  cfg.points = 4;
  const Table t = run_table(cfg);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.columns.front() == "x");
  CHECK(t.columns.back() == "error");
  CHECK(t.columns[11] == "A_cl");

  cfg.experiment = Experiment::Fig2;
  cfg.samples = 12;
  cfg.seed = 9;
  const std::string serial = render_csv(run_table(cfg));
  cfg.threads = 4;
  CHECK(render_csv(run_table(cfg)) == serial);

  cfg.experiment = Experiment::Fig1c;
  cfg.points = 1;
  CHECK_THROWS_AS(run_table(cfg), KurError);
}
