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

#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "tricount/error.hpp"
#include "tricount/estimator.hpp"
#include "tricount/exact.hpp"
#include "tricount/generators.hpp"

using namespace tricount;

namespace {

HeavyClassifier Pinned(const std::vector<bool>& light) {
  return [light](QueryOracle&, VertexId v) {
    return light[v] ? Verdict::kLight : Verdict::kHeavy;
  };
}

std::vector<double> AdviceRuns(const Graph& g, const Advice& advice,
                               const EstimatorParams& params, int runs,
                               std::uint64_t seed,
                               const HeavyClassifier& classifier = {}) {
  std::vector<double> xs;
  for (int i = 0; i < runs; ++i) {
    QueryOracle o(g);
    Rng rng = MakeRng(seed, "advice-run", i);
    xs.push_back(EstimateWithAdvice(o, advice, 0.5, params, rng, classifier));
  }
  return xs;
}

}  // namespace

TEST_CASE("profiles") {
  CHECK(ProfileName(Profile::kPractical) == "practical");
  CHECK(ParseProfile("theoretical") == Profile::kTheoretical);
  CHECK_THROWS_AS(ParseProfile("fast"), Error);
  CHECK(EstimatorParams::Theoretical().shrink_epsilon);
  CHECK_FALSE(EstimatorParams::Practical().shrink_epsilon);
}

TEST_CASE("degree-weighted sampler frequencies match d_v / d_S") {
  const std::vector<std::pair<VertexId, std::uint64_t>> w = {
      {3, 1}, {5, 0}, {8, 4}, {9, 10}, {12, 5}};
  const DegreeWeightedSampler sampler(w);
  CHECK(sampler.total_weight() == 20);
  Rng rng(42);
  const int draws = 100000;
  std::map<VertexId, int> hits;
  for (int i = 0; i < draws; ++i) ++hits[sampler.Sample(rng)];
  CHECK(hits.count(5) == 0);
  for (const auto& [v, weight] : w) {
    const double p = static_cast<double>(weight) / 20.0;
    const double sd = std::sqrt(draws * p * (1 - p));
    CHECK(std::abs(hits[v] - draws * p) <= 5 * sd);
  }
  CHECK(DegreeWeightedSampler({}).empty());
  Rng r2(1);
  CHECK_THROWS_AS(DegreeWeightedSampler({{1, 0}}).Sample(r2), Error);
}

TEST_CASE("triangle-free graphs give exactly zero") {
  const auto gen = GenG1Bipartite(20, 6);
  const auto params = EstimatorParams::Theoretical();
  for (double x : AdviceRuns(gen.graph, {36, 1}, params, 20, 1)) CHECK(x == 0.0);
}

TEST_CASE("all sampled vertices isolated gives zero") {
  const Graph g = Graph::FromEdges(6, std::vector<Edge>{});
  QueryOracle o(g);
  Rng rng(1);
  AdviceRunStats st;
  CHECK(EstimateWithAdvice(o, {1, 1}, 0.5, EstimatorParams::Theoretical(), rng,
                           {}, &st) == 0.0);
  CHECK(st.degree_sum == 0);
}

TEST_CASE("expectation oracle values") {
  const std::vector<bool> all(4, true);
  CHECK(oracles::ExpectedAdviceEstimate(oracles::Complete(4), all, 1) ==
        doctest::Approx(4.0));
  CHECK(oracles::ExpectedAdviceEstimate(oracles::Complete(4), all, 100) ==
        doctest::Approx(4.0));
  // Hub heavy: every rim triangle keeps weight through its two rim vertices.
  std::vector<bool> rim(7, true);
  rim[0] = false;
  CHECK(oracles::ExpectedAdviceEstimate(oracles::Wheel(6), rim, 12) ==
        doctest::Approx(6.0));
  // Two adjacent rim vertices heavy along with the hub: triangle (0,1,2)
  // loses all weight.
  rim[1] = rim[2] = false;
  CHECK(oracles::ExpectedAdviceEstimate(oracles::Wheel(6), rim, 12) ==
        doctest::Approx(5.0));
}

TEST_CASE("run mean matches the exact expectation for pinned partitions") {
  const auto params = EstimatorParams::Theoretical();
  struct Case {
    Graph g;
    std::vector<bool> light;
    Advice advice;
  };
  std::vector<bool> wheel_light(9, true);
  wheel_light[0] = false;
  wheel_light[3] = false;
  std::vector<Case> cases;
  cases.push_back({oracles::Complete(4), std::vector<bool>(4, true), {1, 1}});
  cases.push_back({oracles::Complete(4), std::vector<bool>(4, true), {30, 2}});
  cases.push_back({oracles::Wheel(8), wheel_light, {16, 4}});
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& k = cases[c];
    const double expected =
        oracles::ExpectedAdviceEstimate(k.g, k.light, k.advice.m_bar);
    const auto ms = oracles::MeanAndSe(
        AdviceRuns(k.g, k.advice, params, 1000, 7 + c, Pinned(k.light)));
    INFO("case " << c << " expected=" << expected << " mean=" << ms.mean
                 << " se=" << ms.se);
    CHECK(std::abs(ms.mean - expected) <= 3.0 * ms.se);
  }
}

TEST_CASE("run mean never exceeds t by more than 3 standard errors") {
  auto params = EstimatorParams::Theoretical();
  params.heavy.s_scale = 0.01;
  params.heavy.outer_reps = 3;
  const Graph wheel = oracles::Wheel(10);
  Rng rng(3);
  const Graph er = GenErdosRenyi(12, 0.5, rng).graph;
  for (const Graph* g : {&wheel, &er}) {
    const auto t = CountOrdered(*g).t;
    const auto ms = oracles::MeanAndSe(
        AdviceRuns(*g, {g->num_edges(), std::max(1.0, t / 2.0)}, params, 1000,
                   11));
    INFO("t=" << t << " mean=" << ms.mean << " se=" << ms.se);
    CHECK(ms.mean <= static_cast<double>(t) + 3.0 * ms.se);
  }
}

TEST_CASE("order-preserving relabeling leaves the distribution unchanged") {
  Rng rng(21);
  const Graph g = GenErdosRenyi(12, 0.45, rng).graph;
  // Permute so that the degree order is preserved: sort by (degree, id),
  // then hand out new ids in a shuffled layout that keeps ties in id order.
  std::vector<VertexId> by_rank(g.num_vertices());
  std::iota(by_rank.begin(), by_rank.end(), VertexId{0});
  std::sort(by_rank.begin(), by_rank.end(),
            [&](VertexId a, VertexId b) { return oracles::Before(g, a, b); });
  std::vector<VertexId> new_ids(g.num_vertices());
  std::iota(new_ids.begin(), new_ids.end(), VertexId{0});
  std::shuffle(new_ids.begin(), new_ids.end(), rng);
  // Within each degree class, assign the chosen ids in increasing order.
  std::vector<VertexId> perm(g.num_vertices());
  for (std::size_t i = 0; i < by_rank.size();) {
    std::size_t j = i;
    while (j < by_rank.size() &&
           g.degree(by_rank[j]) == g.degree(by_rank[i])) {
      ++j;
    }
    std::vector<VertexId> ids(new_ids.begin() + i, new_ids.begin() + j);
    std::sort(ids.begin(), ids.end());
    for (std::size_t k = i; k < j; ++k) perm[by_rank[k]] = ids[k - i];
    i = j;
  }
  const Graph h = Relabel(g, perm, true, rng);
  for (VertexId a = 0; a < g.num_vertices(); ++a) {
    for (VertexId b = 0; b < g.num_vertices(); ++b) {
      if (a != b) REQUIRE(g.precedes(a, b) == h.precedes(perm[a], perm[b]));
    }
  }
  auto params = EstimatorParams::Theoretical();
  params.heavy.s_scale = 0.01;
  params.heavy.outer_reps = 3;
  const Advice advice{g.num_edges(), 8};
  const auto xa = AdviceRuns(g, advice, params, 500, 100);
  const auto xb = AdviceRuns(h, advice, params, 500, 200);
  const double d = oracles::KsStatistic(xa, xb);
  INFO("D=" << d);
  CHECK(d < oracles::KsCritical01(500, 500));
}

TEST_CASE("per-run cache classifies each vertex once") {
  const Graph g = oracles::Complete(7);
  auto params = EstimatorParams::Theoretical();
  params.heavy.s_scale = 0.01;
  params.heavy.outer_reps = 2;
  QueryOracle o(g);
  Rng rng(5);
  AdviceRunStats st;
  EstimateWithAdvice(o, {21, 10}, 0.5, params, rng, {}, &st);
  CHECK(st.triangles_found > 0);
  CHECK(st.heavy_calls <= 7);

  params.heavy_cache = HeavyCachePolicy::kOff;
  QueryOracle o2(g);
  Rng rng2(5);
  EstimateWithAdvice(o2, {21, 10}, 0.5, params, rng2, {}, &st);
  CHECK(st.heavy_calls == 3 * st.triangles_found);
}

TEST_CASE("average degree") {
  SUBCASE("regular graph is exact") {
    const Graph g = oracles::Complete(9);
    QueryOracle o(g);
    Rng rng(1);
    CHECK(FeigeAverageDegree(o, 0.25, 5, rng) == 8.0);
  }
  SUBCASE("single edge") {
    const Graph g = oracles::Complete(2);
    QueryOracle o(g);
    Rng rng(1);
    CHECK(FeigeAverageDegree(o, 0.25, 3, rng) == 1.0);
  }
  SUBCASE("star lands in [d/3, 1.25 d] in at least 90% of trials") {
    const Graph g = oracles::Star(9999);
    const double d_avg = 2.0 * 9999 / 10000;
    int good = 0;
    for (int trial = 0; trial < 50; ++trial) {
      QueryOracle o(g);
      Rng rng = MakeRng(trial, "feige-star");
      const double d = FeigeAverageDegree(o, 0.25, 10, rng);
      good += (d >= d_avg / 3 && d <= 1.25 * d_avg) ? 1 : 0;
    }
    CHECK(good >= 45);
  }
  SUBCASE("empty graph is rejected") {
    const Graph g;
    QueryOracle o(g);
    Rng rng(1);
    CHECK_THROWS_AS(FeigeAverageDegree(o, 0.25, 3, rng), Error);
  }
}

TEST_CASE("Estimate on triangle-free input falls back to exactly zero") {
  const auto gen = GenG1Bipartite(40, 8);
  QueryOracle o(gen.graph);
  const auto r = Estimate(o, 0.5, EstimatorParams::Practical(), 3);
  CHECK(r.estimate == 0.0);
  CHECK(r.fallback_used);
  CHECK(r.search_queries.graph_queries() <= r.budget);
}

TEST_CASE("Estimate is deterministic under a seed") {
  GenSpec spec;
  spec.family = GenFamily::kG2Matching;
  spec.side = 32;
  spec.shuffle = true;
  const auto gen = Generate(spec);
  QueryOracle a(gen.graph), b(gen.graph);
  const auto ra = Estimate(a, 0.5, EstimatorParams::Practical(), 17);
  const auto rb = Estimate(b, 0.5, EstimatorParams::Practical(), 17);
  CHECK(ra.estimate == rb.estimate);
  CHECK(ra.queries == rb.queries);
  CHECK(ra.runs == rb.runs);
}

TEST_CASE("small budget forces the exact fallback with a correct answer") {
  GenSpec spec;
  spec.family = GenFamily::kG2Matching;
  spec.side = 32;
  const auto gen = Generate(spec);
  auto params = EstimatorParams::Practical();
  params.budget = 10;
  QueryOracle o(gen.graph);
  const auto r = Estimate(o, 0.5, params, 1);
  CHECK(r.fallback_used);
  CHECK(r.termination == "budget_exhausted");
  CHECK(r.estimate == static_cast<double>(gen.exact_t));
  CHECK(r.search_queries.graph_queries() <= 10);
}

TEST_CASE("invocations stay within 4 (3 log2 n)^2") {
  for (std::uint64_t side : {16u, 32u, 64u}) {
    GenSpec spec;
    spec.family = GenFamily::kG2Matching;
    spec.side = side;
    spec.shuffle = true;
    const auto gen = Generate(spec);
    QueryOracle o(gen.graph);
    const auto r = Estimate(o, 0.5, EstimatorParams::Practical(), side);
    const double l = 3.0 * std::log2(static_cast<double>(gen.graph.num_vertices()));
    CHECK(static_cast<double>(r.runs) <= 4.0 * l * l);
  }
}

TEST_CASE("practical profile accuracy on small instances") {
  struct Inst {
    GenSpec spec;
  };
  GenSpec clique;
  clique.family = GenFamily::kClique;
  clique.n = 4096;
  clique.t = 1000;
  clique.shuffle = true;
  GenSpec matching;
  matching.family = GenFamily::kG2Matching;
  matching.side = 64;
  matching.shuffle = true;
  for (GenSpec spec : {clique, matching}) {
    int good = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      spec.seed = seed;
      const auto gen = Generate(spec);
      QueryOracle o(gen.graph);
      const auto r = Estimate(o, 0.5, EstimatorParams::Practical(), 500 + seed);
      const double t = static_cast<double>(gen.exact_t);
      good += std::abs(r.estimate - t) <= 0.5 * t ? 1 : 0;
    }
    INFO(FamilyName(spec.family) << " good=" << good);
    CHECK(good >= 16);
  }
}
