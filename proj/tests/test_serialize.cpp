// Copyright 2026 The tricount Authors.
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

#include "oracles.hpp"
#include "tricount/error.hpp"
#include "tricount/exact.hpp"
#include "tricount/serialize.hpp"

using namespace tricount;
using nlohmann::json;

TEST_CASE("query stats round-trip") {
  const QueryStats s{3, 5, 7, 11};
  const json j = ToJson(s);
  CHECK(j["total"] == 26);
  CHECK(j["graph_queries"] == 15);
  CHECK(QueryStatsFromJson(json::parse(j.dump())) == s);
}

TEST_CASE("triangle stats round-trip") {
  const auto s = CountOrdered(oracles::Wheel(5));
  const json j = ToJson(s);
  CHECK(j["t"] == 5);
  CHECK(j["t_e"][0].size() == 3);
  CHECK(TriangleStatsFromJson(json::parse(j.dump())) == s);
}

TEST_CASE("estimate report schema") {
  EstimateReport r;
  r.estimate = 12.5;
  r.epsilon = 0.5;
  r.advice = {40, 16};
  r.seed = 77;
  r.runs = 3;
  r.wall_ms = 1.25;
  r.termination = "accepted";
  const json j = ToJson(r, false);
  for (const char* key : {"estimate", "epsilon", "advice", "queries", "runs",
                          "seed", "fallback_used", "wall_ms"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["advice"]["m_bar"] == 40);
  CHECK(j["wall_ms"].is_null());
  CHECK(ToJson(r, true)["wall_ms"] == 1.25);
}

TEST_CASE("sidecar carries the spec and parses back") {
  GenSpec spec;
  spec.family = GenFamily::kG2SpecialFour;
  spec.side = 8;
  spec.t = 2;
  spec.seed = 4;
  const auto result = Generate(spec);
  const json side = SidecarJson(result);
  CHECK(side["family"] == "special-four");
  CHECK(side["exact_t"] == 8);
  CHECK(side["edges_actual"] == 128);
  CHECK(side["m_nominal"] == 64);
  const GenSpec back = GenSpecFromJson(side);
  CHECK(back.family == spec.family);
  CHECK(back.side == 8);
  CHECK(back.t == 2);
  CHECK(back.seed == 4);
  CHECK(back.n == 32);
  CHECK(Generate(back).graph.edges() == result.graph.edges());

  const GenSpec flat =
      GenSpecFromJson(json::parse(R"({"family": "g2-matching", "side": 6})"));
  CHECK(flat.family == GenFamily::kG2Matching);
  CHECK(flat.side == 6);
  CHECK_THROWS_AS(GenSpecFromJson(json::parse(R"({"side": 6})")), Error);
}
