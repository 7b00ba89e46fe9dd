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

#include "tricount/tricount.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "tricount/error.hpp"
#include "tricount/estimator.hpp"
#include "tricount/exact.hpp"
#include "tricount/generators.hpp"
#include "tricount/graph_io.hpp"
#include "tricount/query_oracle.hpp"
#include "tricount/serialize.hpp"

struct tc_graph {
  tricount::Graph graph;
  std::vector<std::uint64_t> original_ids;
};

struct tc_oracle {
  explicit tc_oracle(const tricount::Graph& g,
                     std::optional<std::uint64_t> cap)
      : oracle(g, cap) {}
  tricount::QueryOracle oracle;
};

namespace {

thread_local std::string g_last_error;

tc_status ToStatus(tricount::ErrorCode code) {
  using tricount::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return TC_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return TC_ERR_PARSE;
    case ErrorCode::kIo: return TC_ERR_IO;
    case ErrorCode::kOutOfRange: return TC_ERR_OUT_OF_RANGE;
    case ErrorCode::kBudgetExhausted: return TC_ERR_BUDGET_EXHAUSTED;
    case ErrorCode::kInvariant: return TC_ERR_INVARIANT;
    case ErrorCode::kInternal: return TC_ERR_INTERNAL;
  }
  return TC_ERR_INTERNAL;
}

tc_status Fail(tc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
tc_status Guard(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return TC_OK;
  } catch (const tricount::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return Fail(TC_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(TC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(TC_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(TC_ERR_INTERNAL, "unknown error");
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(bool ok, const char* what) {
  if (!ok) {
    throw tricount::Error(tricount::ErrorCode::kInvalidArgument, what);
  }
}

}  // namespace

extern "C" {

const char* tc_version(void) { return "1.0.0"; }

const char* tc_last_error(void) { return g_last_error.c_str(); }

void tc_string_free(char* s) { std::free(s); }

tc_status tc_graph_parse(const char* text, size_t len, int remap_ids,
                         tc_graph** out) {
  return Guard([&] {
    Require(out != nullptr && (text != nullptr || len == 0), "null argument");
    auto loaded = tricount::ParseEdgeList(std::string_view(text, len),
                                          {remap_ids != 0});
    *out = new tc_graph{std::move(loaded.graph),
                        std::move(loaded.original_ids)};
  });
}

tc_status tc_graph_load_file(const char* path, int remap_ids, tc_graph** out) {
  return Guard([&] {
    Require(out != nullptr && path != nullptr, "null argument");
    auto loaded = tricount::LoadEdgeListFile(path, {remap_ids != 0});
    *out = new tc_graph{std::move(loaded.graph),
                        std::move(loaded.original_ids)};
  });
}

tc_status tc_graph_write_file(const tc_graph* g, const char* path) {
  return Guard([&] {
    Require(g != nullptr && path != nullptr, "null argument");
    tricount::WriteEdgeListFile(g->graph, path);
  });
}

void tc_graph_free(tc_graph* g) { delete g; }

uint64_t tc_graph_num_vertices(const tc_graph* g) {
  return g ? g->graph.num_vertices() : 0;
}

uint64_t tc_graph_num_edges(const tc_graph* g) {
  return g ? g->graph.num_edges() : 0;
}

tc_status tc_graph_degree(const tc_graph* g, uint32_t v, uint32_t* out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = g->graph.degree(v);
  });
}

tc_status tc_graph_neighbor(const tc_graph* g, uint32_t v, uint64_t i,
                            uint32_t* out, int* absent) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr && absent != nullptr,
            "null argument");
    const auto w = g->graph.neighbor(v, i);
    *absent = w ? 0 : 1;
    *out = w.value_or(0);
  });
}

tc_status tc_graph_has_edge(const tc_graph* g, uint32_t u, uint32_t v,
                            int* out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = g->graph.has_edge(u, v) ? 1 : 0;
  });
}

tc_status tc_graph_remap_json(const tc_graph* g, char** out_json) {
  return Guard([&] {
    Require(g != nullptr && out_json != nullptr, "null argument");
    *out_json = CopyString(nlohmann::json(g->original_ids).dump());
  });
}

tc_status tc_exact_count(const tc_graph* g, uint64_t* out_t) {
  return Guard([&] {
    Require(g != nullptr && out_t != nullptr, "null argument");
    *out_t = tricount::CountOrdered(g->graph).t;
  });
}

tc_status tc_exact_stats_json(const tc_graph* g, char** out_json) {
  return Guard([&] {
    Require(g != nullptr && out_json != nullptr, "null argument");
    const auto stats = tricount::CountOrdered(g->graph);
    const auto violations = tricount::CheckIdentities(stats, g->graph);
    if (!violations.empty()) {
      throw tricount::Error(tricount::ErrorCode::kInvariant,
                            "counting identity violated: " + violations[0]);
    }
    *out_json = CopyString(tricount::ToJson(stats).dump());
  });
}

tc_status tc_oracle_new(const tc_graph* g, int64_t budget, tc_oracle** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    std::optional<std::uint64_t> cap;
    if (budget >= 0) cap = static_cast<std::uint64_t>(budget);
    *out = new tc_oracle(g->graph, cap);
  });
}

void tc_oracle_free(tc_oracle* o) { delete o; }

tc_status tc_oracle_degree(tc_oracle* o, uint32_t v, uint32_t* out) {
  return Guard([&] {
    Require(o != nullptr && out != nullptr, "null argument");
    *out = o->oracle.degree(v);
  });
}

tc_status tc_oracle_neighbor(tc_oracle* o, uint32_t v, uint64_t i,
                             uint32_t* out, int* absent) {
  return Guard([&] {
    Require(o != nullptr && out != nullptr && absent != nullptr,
            "null argument");
    const auto w = o->oracle.neighbor(v, i);
    *absent = w ? 0 : 1;
    *out = w.value_or(0);
  });
}

tc_status tc_oracle_pair(tc_oracle* o, uint32_t u, uint32_t v, int* out) {
  return Guard([&] {
    Require(o != nullptr && out != nullptr, "null argument");
    *out = o->oracle.pair(u, v) ? 1 : 0;
  });
}

tc_status tc_oracle_stats_json(const tc_oracle* o, char** out_json) {
  return Guard([&] {
    Require(o != nullptr && out_json != nullptr, "null argument");
    *out_json = CopyString(tricount::ToJson(o->oracle.stats()).dump());
  });
}

void tc_gen_spec_init(tc_gen_spec* spec) {
  if (spec == nullptr) return;
  *spec = tc_gen_spec{};
  spec->family = "g1-bipartite";
}

namespace {

void EmitGenerated(const tricount::GenResult& result, tc_graph** out_graph,
                   char** out_sidecar_json) {
  std::unique_ptr<tc_graph> g(new tc_graph{result.graph, {}});
  if (out_sidecar_json != nullptr) {
    *out_sidecar_json = CopyString(tricount::SidecarJson(result).dump());
  }
  *out_graph = g.release();
}

}  // namespace

tc_status tc_generate(const tc_gen_spec* spec, tc_graph** out_graph,
                      char** out_sidecar_json) {
  return Guard([&] {
    Require(spec != nullptr && spec->family != nullptr && out_graph != nullptr,
            "null argument");
    tricount::GenSpec s;
    s.family = tricount::ParseFamily(spec->family);
    s.n = spec->n;
    s.side = spec->side;
    s.t = spec->t;
    s.r = spec->r;
    s.k = spec->k;
    s.p = spec->p;
    s.seed = spec->seed;
    s.shuffle = spec->shuffle != 0;
    EmitGenerated(tricount::Generate(s), out_graph, out_sidecar_json);
  });
}

tc_status tc_generate_json(const char* spec_json, tc_graph** out_graph,
                           char** out_sidecar_json) {
  return Guard([&] {
    Require(spec_json != nullptr && out_graph != nullptr, "null argument");
    const auto spec =
        tricount::GenSpecFromJson(nlohmann::json::parse(spec_json));
    EmitGenerated(tricount::Generate(spec), out_graph, out_sidecar_json);
  });
}

void tc_estimate_options_init(tc_estimate_options* options) {
  if (options == nullptr) return;
  options->epsilon = 0.5;
  options->seed = 0;
  options->profile = TC_PROFILE_PRACTICAL;
  options->budget = -1;
  options->include_timing = 0;
}

tc_status tc_estimate(const tc_graph* g, const tc_estimate_options* options,
                      double* out_estimate, char** out_report_json) {
  return Guard([&] {
    Require(g != nullptr && options != nullptr && out_estimate != nullptr,
            "null argument");
    Require(options->profile == TC_PROFILE_THEORETICAL ||
                options->profile == TC_PROFILE_PRACTICAL,
            "unknown profile");
    auto params = tricount::EstimatorParams::ForProfile(
        options->profile == TC_PROFILE_PRACTICAL
            ? tricount::Profile::kPractical
            : tricount::Profile::kTheoretical);
    if (options->budget >= 0) {
      params.budget = static_cast<std::uint64_t>(options->budget);
    }
    tricount::QueryOracle oracle(g->graph);
    const auto report =
        tricount::Estimate(oracle, options->epsilon, params, options->seed);
    *out_estimate = report.estimate;
    if (out_report_json != nullptr) {
      *out_report_json = CopyString(
          tricount::ToJson(report, options->include_timing != 0).dump());
    }
  });
}

}  // extern "C"
