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

#ifndef TRICOUNT_SERIALIZE_HPP_
#define TRICOUNT_SERIALIZE_HPP_

#include <json.hpp>

#include "tricount/estimator.hpp"
#include "tricount/exact.hpp"
#include "tricount/generators.hpp"
#include "tricount/query_oracle.hpp"

namespace tricount {

// {degree, neighbor, pair, vertex_samples, total}
nlohmann::json ToJson(const QueryStats& stats);
QueryStats QueryStatsFromJson(const nlohmann::json& j);

// {t, t_v: [...], t_e: [[v, x, count], ...]}
nlohmann::json ToJson(const TriangleStats& stats);
TriangleStats TriangleStatsFromJson(const nlohmann::json& j);

// {estimate, epsilon, advice: {m_bar, t_bar}, queries: {...}, runs, seed,
//  fallback_used, wall_ms, ...}. wall_ms is null unless include_timing.
nlohmann::json ToJson(const EstimateReport& report, bool include_timing);

// Generator sidecar: {family, params: {...}, exact_t, formula, ...}.
nlohmann::json SidecarJson(const GenResult& result);
GenSpec GenSpecFromJson(const nlohmann::json& j);

}  // namespace tricount

#endif  // TRICOUNT_SERIALIZE_HPP_
