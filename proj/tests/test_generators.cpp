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

#include <set>

#include "tricount/error.hpp"
#include "tricount/exact.hpp"
#include "tricount/generators.hpp"

using namespace tricount;

namespace {

std::uint64_t Count(const GenResult& r) { return CountOrdered(r.graph).t; }

void CheckDegrees(const Graph& g, VertexId first, std::uint64_t count,
                  std::uint32_t d) {
  for (VertexId v = first; v < first + count; ++v) REQUIRE(g.degree(v) == d);
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (auto f : {GenFamily::kClique, GenFamily::kG1Bipartite,
                 GenFamily::kG2Matching, GenFamily::kG2MultiMatching,
                 GenFamily::kG2PartialMatching, GenFamily::kG1DoubleBipartite,
                 GenFamily::kG2SpecialFour, GenFamily::kErdosRenyi}) {
    CHECK(ParseFamily(FamilyName(f)) == f);
  }
  CHECK_THROWS_AS(ParseFamily("petersen"), Error);
}

TEST_CASE("clique family") {
  Rng rng(1);
  const auto r = GenCliqueFamily(4096, 1000, rng);
  CHECK(r.exact_t == 120);
  CHECK(Count(r) == 120);
  CHECK(r.graph.num_edges() == 45);
  Rng rng2(2);
  CHECK(GenCliqueFamily(100, 27, rng2).exact_t == 1);
  CHECK_THROWS_AS(GenCliqueFamily(100, 26, rng2), Error);
  CHECK_THROWS_AS(GenCliqueFamily(5, 1000, rng2), Error);
}

TEST_CASE("complete bipartite family") {
  const auto r = GenG1Bipartite(10, 4);
  CHECK(r.graph.num_edges() == 16);
  CHECK(Count(r) == 0);
  CheckDegrees(r.graph, 0, 8, 4);
  const auto c4 = GenG1Bipartite(4, 2);
  CHECK(c4.graph.num_edges() == 4);
  CHECK(Count(c4) == 0);
  CHECK_THROWS_AS(GenG1Bipartite(7, 4), Error);
}

TEST_CASE("one-matching family: s blue edges each in s - 2 triangles") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto r = GenG2Matching(64, 10, rng);
    CHECK(r.exact_t == 80);
    CHECK(Count(r) == 80);
    CHECK(r.graph.num_edges() == 100);
    CheckDegrees(r.graph, 0, 20, 10);
  }
  Rng rng(3);
  CHECK(Count(GenG2Matching(8, 4, rng)) == 8);
  CHECK(Count(GenG2Matching(4, 2, rng)) == 0);
  CHECK_THROWS_AS(GenG2Matching(20, 5, rng), Error);
}

TEST_CASE("multi-matching family stays in its band with disjoint matchings") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto r = GenG2MultiMatching(32, 16, 2, rng);
    CHECK(r.exact_t == Count(r));
    CHECK(r.exact_t >= 384);
    CHECK(r.exact_t <= 512);
    CheckDegrees(r.graph, 0, 32, 16);
    // Degree s with r blue edges per vertex means r red edges were removed,
    // so the red matchings are disjoint; same for the blue side.
    for (VertexId v = 0; v < 16; ++v) {
      std::uint32_t blue = 0;
      for (VertexId w : r.graph.neighbors(v)) blue += w < 16 ? 1 : 0;
      CHECK(blue == 2);
    }
  }
  Rng rng(1);
  CHECK(GenG2MultiMatching(64, 32, 4, rng).exact_t > 0);  // r = s/8
  CHECK_THROWS_AS(GenG2MultiMatching(64, 32, 5, rng), Error);
  CHECK(GenG2MultiMatching(20, 10, 1, rng).exact_t == 80);
}

TEST_CASE("partial-matching family") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto r4 = GenG2PartialMatching(32, 16, 4, rng);
    CHECK(r4.exact_t == 56);
    CHECK(Count(r4) == 56);
    CheckDegrees(r4.graph, 0, 32, 16);
    const auto r2 = GenG2PartialMatching(32, 16, 2, rng);
    CHECK(Count(r2) == 28);
  }
  Rng rng(1);
  CHECK_THROWS_AS(GenG2PartialMatching(32, 16, 3, rng), Error);
  CHECK_THROWS_AS(GenG2PartialMatching(32, 16, 6, rng), Error);
}

TEST_CASE("special-four family and its triangle-free twin") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto g2 = GenSpecialFour(32, 8, 2, true, rng);
    CHECK(g2.exact_t == 8);
    CHECK(Count(g2) == 8);
    CHECK(g2.graph.num_edges() == 128);
    CHECK(g2.edges_actual == 2 * g2.m_nominal);
    CheckDegrees(g2.graph, 0, 32, 8);
    const auto g1 = GenSpecialFour(32, 8, 2, false, rng);
    CHECK(Count(g1) == 0);
    CheckDegrees(g1.graph, 0, 32, 8);
  }
  Rng rng(1);
  CHECK_THROWS_AS(GenSpecialFour(64, 8, 3, true, rng), Error);
  CHECK_THROWS_AS(GenSpecialFour(64, 8, 4, true, rng), Error);
  CHECK_THROWS_AS(GenSpecialFour(31, 8, 2, true, rng), Error);
}

TEST_CASE("G(n, p) edge count concentrates") {
  Rng rng(5);
  const auto r = GenErdosRenyi(2000, 0.01, rng);
  const double mean = 0.01 * 2000 * 1999 / 2;
  CHECK(std::abs(static_cast<double>(r.graph.num_edges()) - mean) <
        5 * std::sqrt(mean));
  Rng rng2(6);
  CHECK(GenErdosRenyi(10, 1.0, rng2).graph.num_edges() == 45);
  CHECK(GenErdosRenyi(10, 0.0, rng2).graph.num_edges() == 0);
}

TEST_CASE("Generate is deterministic and shuffling preserves the count") {
  GenSpec spec;
  spec.family = GenFamily::kG2PartialMatching;
  spec.side = 16;
  spec.k = 4;
  spec.seed = 9;
  const auto a = Generate(spec);
  const auto b = Generate(spec);
  CHECK(a.graph.edges() == b.graph.edges());
  CHECK(a.graph.num_vertices() == 32);
  spec.shuffle = true;
  spec.n = 100;
  const auto c = Generate(spec);
  CHECK(c.graph.num_vertices() == 100);
  CHECK(Count(c) == 56);
  std::set<VertexId> touched;
  for (const auto& [u, v] : c.graph.edges()) {
    touched.insert(u);
    touched.insert(v);
  }
  CHECK(*touched.rbegin() >= 32);
}
