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

#include "tricount/serialize.hpp"

#include "tricount/error.hpp"

namespace tricount {

using nlohmann::json;

json ToJson(const QueryStats& stats) {
  return {{"degree", stats.degree},
          {"neighbor", stats.neighbor},
          {"pair", stats.pair},
          {"vertex_samples", stats.vertex_samples},
          {"graph_queries", stats.graph_queries()},
          {"total", stats.total()}};
}

QueryStats QueryStatsFromJson(const json& j) {
  QueryStats s;
  s.degree = j.at("degree").get<std::uint64_t>();
  s.neighbor = j.at("neighbor").get<std::uint64_t>();
  s.pair = j.at("pair").get<std::uint64_t>();
  s.vertex_samples = j.at("vertex_samples").get<std::uint64_t>();
  return s;
}

json ToJson(const TriangleStats& stats) {
  json t_e = json::array();
  for (const auto& e : stats.per_edge) t_e.push_back({e.from, e.to, e.count});
  return {{"t", stats.t}, {"t_v", stats.per_vertex}, {"t_e", t_e}};
}

TriangleStats TriangleStatsFromJson(const json& j) {
  TriangleStats s;
  s.t = j.at("t").get<std::uint64_t>();
  s.per_vertex = j.at("t_v").get<std::vector<std::uint64_t>>();
  for (const auto& e : j.at("t_e")) {
    s.per_edge.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>(),
                          e.at(2).get<std::uint64_t>()});
  }
  return s;
}

json ToJson(const EstimateReport& report, bool include_timing) {
  json j = {
      {"estimate", report.estimate},
      {"epsilon", report.epsilon},
      {"search_epsilon", report.search_epsilon},
      {"profile", ProfileName(report.profile)},
      {"advice", {{"m_bar", report.advice.m_bar},
                  {"t_bar", report.advice.t_bar}}},
      {"avg_degree", report.avg_degree},
      {"budget", report.budget},
      {"queries", ToJson(report.queries)},
      {"stages", {{"advice", ToJson(report.advice_queries)},
                  {"search", ToJson(report.search_queries)},
                  {"fallback", ToJson(report.fallback_queries)}}},
      {"runs", report.runs},
      {"advice_values", report.advice_values},
      {"seed", report.seed},
      {"fallback_used", report.fallback_used},
      {"termination", report.termination},
  };
  j["wall_ms"] = include_timing ? json(report.wall_ms) : json(nullptr);
  return j;
}

json SidecarJson(const GenResult& result) {
  const GenSpec& s = result.spec;
  return {{"family", FamilyName(s.family)},
          {"params", {{"n", s.n},
                      {"side", s.side},
                      {"t", s.t},
                      {"r", s.r},
                      {"k", s.k},
                      {"p", s.p},
                      {"seed", s.seed},
                      {"shuffle", s.shuffle}}},
          {"exact_t", result.exact_t},
          {"formula", result.formula_name},
          {"n", result.graph.num_vertices()},
          {"m", result.graph.num_edges()},
          {"m_nominal", result.m_nominal},
          {"edges_actual", result.edges_actual}};
}

GenSpec GenSpecFromJson(const json& j) {
  try {
    const json& params = j.contains("params") ? j.at("params") : j;
    GenSpec s;
    s.family = ParseFamily(j.at("family").get<std::string>());
    s.n = params.value("n", std::uint64_t{0});
    s.side = params.value("side", std::uint64_t{0});
    s.t = params.value("t", std::uint64_t{0});
    s.r = params.value("r", std::uint64_t{0});
    s.k = params.value("k", std::uint64_t{0});
    s.p = params.value("p", 0.0);
    s.seed = params.value("seed", std::uint64_t{0});
    s.shuffle = params.value("shuffle", false);
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad generator spec: ") + e.what());
  }
}

}  // namespace tricount
