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

#include "tricount/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tricount/error.hpp"

namespace tricount {

Graph Graph::FromEdges(std::size_t n, std::span<const Edge> edges) {
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex count " + std::to_string(n) + " exceeds the id range");
  }
  Graph g;
  g.degree_.assign(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") has an endpoint outside [0, " + std::to_string(n) +
                      ")");
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(u));
    }
    ++g.degree_[u];
    ++g.degree_[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + g.degree_[v];
  }
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }

  g.sorted_.resize(g.adjacency_.size());
  g.sorted_slot_.resize(g.adjacency_.size());
  std::vector<std::uint32_t> order;
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t begin = g.offsets_[v];
    const std::uint32_t d = g.degree_[v];
    order.resize(d);
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return g.adjacency_[begin + a] < g.adjacency_[begin + b];
    });
    for (std::uint32_t k = 0; k < d; ++k) {
      g.sorted_[begin + k] = g.adjacency_[begin + order[k]];
      g.sorted_slot_[begin + k] = order[k];
      if (k > 0 && g.sorted_[begin + k] == g.sorted_[begin + k - 1]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "duplicate edge (" + std::to_string(v) + ", " +
                        std::to_string(g.sorted_[begin + k]) + ")");
      }
    }
  }
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= degree_.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "vertex " + std::to_string(v) + " out of range [0, " +
                    std::to_string(degree_.size()) + ")");
  }
}

std::uint32_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return degree_[v];
}

std::optional<VertexId> Graph::neighbor(VertexId v, std::uint64_t i) const {
  check_vertex(v);
  if (i == 0) {
    throw Error(ErrorCode::kInvalidArgument, "neighbor index is 1-based");
  }
  if (i > degree_[v]) return std::nullopt;
  return adjacency_[offsets_[v] + i - 1];
}

std::optional<std::uint64_t> Graph::find_sorted(VertexId v, VertexId w) const {
  const auto first = sorted_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
  const auto last = first + degree_[v];
  const auto it = std::lower_bound(first, last, w);
  if (it == last || *it != w) return std::nullopt;
  return static_cast<std::uint64_t>(it - sorted_.begin());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  // Search the shorter list.
  if (degree_[v] < degree_[u]) std::swap(u, v);
  return find_sorted(u, v).has_value();
}

bool Graph::precedes(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error(ErrorCode::kInvalidArgument,
                "precedes() needs two distinct vertices");
  }
  return degree_[u] < degree_[v] || (degree_[u] == degree_[v] && u < v);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], degree_[v]};
}

std::span<const VertexId> Graph::sorted_neighbors(VertexId v) const {
  check_vertex(v);
  return {sorted_.data() + offsets_[v], degree_[v]};
}

std::uint64_t Graph::offset(VertexId v) const {
  check_vertex(v);
  return offsets_[v];
}

std::optional<std::uint32_t> Graph::slot_of(VertexId v, VertexId w) const {
  check_vertex(v);
  check_vertex(w);
  const auto pos = find_sorted(v, w);
  if (!pos) return std::nullopt;
  return sorted_slot_[*pos];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < degree_.size(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace tricount
