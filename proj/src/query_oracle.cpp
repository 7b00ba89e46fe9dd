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

#include "tricount/query_oracle.hpp"

#include <algorithm>
#include <string>

#include "tricount/error.hpp"

namespace tricount {
namespace {

std::uint64_t PairKey(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

QueryStats QueryStats::operator-(const QueryStats& other) const {
  return {degree - other.degree, neighbor - other.neighbor, pair - other.pair,
          vertex_samples - other.vertex_samples};
}

QueryStats& QueryStats::operator+=(const QueryStats& other) {
  degree += other.degree;
  neighbor += other.neighbor;
  pair += other.pair;
  vertex_samples += other.vertex_samples;
  return *this;
}

QueryOracle::QueryOracle(const Graph& g, std::optional<std::uint64_t> cap)
    : graph_(&g),
      cap_(cap),
      degree_known_(g.num_vertices(), 0),
      slot_known_(2 * g.num_edges(), 0),
      slots_known_per_vertex_(g.num_vertices(), 0) {}

void QueryOracle::check_vertex(VertexId v) const {
  if (v >= graph_->num_vertices()) {
    throw Error(ErrorCode::kOutOfRange,
                "vertex " + std::to_string(v) + " out of range [0, " +
                    std::to_string(graph_->num_vertices()) + ")");
  }
}

void QueryOracle::ensure_live() const {
  if (exhausted_) {
    throw BudgetExhausted("query budget of " + std::to_string(*cap_) +
                          " distinct graph queries is exhausted");
  }
}

void QueryOracle::charge(std::uint64_t& counter) {
  if (cap_ && stats_.graph_queries() >= *cap_) {
    exhausted_ = true;
    ensure_live();
  }
  ++counter;
}

void QueryOracle::set_cap(std::optional<std::uint64_t> cap) {
  cap_ = cap;
  exhausted_ = false;
}

bool QueryOracle::vertex_fully_known(VertexId v) const {
  return degree_known_[v] && slots_known_per_vertex_[v] == graph_->degree(v);
}

bool QueryOracle::knows_graph() const {
  return degrees_known_count_ == graph_->num_vertices() &&
         slots_known_count_ == slot_known_.size();
}

void QueryOracle::reveal_slot(VertexId v, std::uint32_t slot) {
  auto& known = slot_known_[graph_->offset(v) + slot];
  if (!known) {
    known = 1;
    ++slots_known_per_vertex_[v];
    ++slots_known_count_;
  }
}

std::uint32_t QueryOracle::degree(VertexId v) {
  ensure_live();
  check_vertex(v);
  if (!degree_known_[v]) {
    charge(stats_.degree);
    degree_known_[v] = 1;
    ++degrees_known_count_;
  }
  return graph_->degree(v);
}

std::optional<VertexId> QueryOracle::neighbor(VertexId v, std::uint64_t i) {
  ensure_live();
  check_vertex(v);
  if (i == 0) {
    throw Error(ErrorCode::kInvalidArgument, "neighbor index is 1-based");
  }
  const std::uint32_t d = graph_->degree(v);
  if (i > d) {
    // Deducible once d_v is known.
    if (!degree_known_[v] && !absent_known_.contains({v, i})) {
      charge(stats_.neighbor);
      absent_known_.insert({v, i});
    }
    return std::nullopt;
  }
  const auto slot = static_cast<std::uint32_t>(i - 1);
  if (!slot_known_[graph_->offset(v) + slot]) {
    charge(stats_.neighbor);
    reveal_slot(v, slot);
  }
  return graph_->neighbors(v)[slot];
}

bool QueryOracle::pair(VertexId u, VertexId v) {
  ensure_live();
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error(ErrorCode::kInvalidArgument,
                "pair query needs two distinct vertices");
  }
  const auto slot_uv = graph_->slot_of(u, v);
  const bool edge = slot_uv.has_value();
  if (vertex_fully_known(u) || vertex_fully_known(v)) return edge;
  if (edge) {
    if (slot_known_[graph_->offset(u) + *slot_uv]) return true;
    const auto slot_vu = graph_->slot_of(v, u);
    if (slot_known_[graph_->offset(v) + *slot_vu]) return true;
  }
  const std::uint64_t key = PairKey(u, v);
  if (!pair_known_.contains(key)) {
    charge(stats_.pair);
    pair_known_.insert(key);
  }
  return edge;
}

VertexId QueryOracle::sample_vertex(Rng& rng) {
  const std::size_t n = graph_->num_vertices();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot sample a vertex of an empty graph");
  }
  ++stats_.vertex_samples;
  std::uniform_int_distribution<VertexId> pick(
      0, static_cast<VertexId>(n - 1));
  return pick(rng);
}

std::vector<std::pair<VertexId, std::uint64_t>> QueryOracle::sample_vertices(
    std::uint64_t count, Rng& rng) {
  const std::size_t n = graph_->num_vertices();
  std::vector<std::pair<VertexId, std::uint64_t>> out;
  if (count == 0) return out;
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot sample a vertex of an empty graph");
  }
  if (count <= n) {
    std::vector<VertexId> draws(count);
    for (auto& v : draws) v = sample_vertex(rng);
    std::sort(draws.begin(), draws.end());
    for (VertexId v : draws) {
      if (!out.empty() && out.back().first == v) {
        ++out.back().second;
      } else {
        out.emplace_back(v, 1);
      }
    }
    return out;
  }
  stats_.vertex_samples += count;
  std::uint64_t remaining = count;
  for (VertexId v = 0; v < n && remaining > 0; ++v) {
    std::uint64_t k = remaining;
    if (v + 1 < n) {
      std::binomial_distribution<std::uint64_t> draw(
          remaining, 1.0 / static_cast<double>(n - v));
      k = draw(rng);
    }
    if (k > 0) out.emplace_back(v, k);
    remaining -= k;
  }
  return out;
}

Edge QueryOracle::random_edge_at(VertexId v, Rng& rng) {
  const std::uint32_t d = degree(v);
  if (d == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(v) + " has no incident edges");
  }
  std::uniform_int_distribution<std::uint32_t> pick(1, d);
  return {v, *neighbor(v, pick(rng))};
}

bool QueryOracle::precedes(VertexId u, VertexId v) {
  if (u == v) {
    throw Error(ErrorCode::kInvalidArgument,
                "precedes() needs two distinct vertices");
  }
  const std::uint32_t du = degree(u);
  const std::uint32_t dv = degree(v);
  return du < dv || (du == dv && u < v);
}

Graph QueryOracle::ReadWholeGraph() {
  const std::size_t n = graph_->num_vertices();
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) {
    const std::uint32_t d = degree(v);
    for (std::uint32_t i = 1; i <= d; ++i) {
      const VertexId x = *neighbor(v, i);
      if (v < x) edges.emplace_back(v, x);
    }
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace tricount
