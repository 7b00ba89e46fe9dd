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

#ifndef TRICOUNT_GRAPH_HPP_
#define TRICOUNT_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tricount {

// Dense vertex index in [0, n).
using VertexId = std::uint32_t;

inline constexpr VertexId kMaxVertices = std::numeric_limits<VertexId>::max();

using Edge = std::pair<VertexId, VertexId>;

// Immutable simple undirected graph in CSR form.
//
// Each vertex keeps its neighbors twice: once in insertion ("load") order,
// which is what neighbor() exposes, and once sorted for O(log d) pair lookup.
// The sorted copy remembers the load-order slot of every entry so that a
// pair can be mapped back to the neighbor query that would reveal it.
class Graph {
 public:
  Graph() = default;

  // Builds a graph over vertices [0, n) from an edge sequence. Neighbor
  // order follows the sequence. Throws Error on self-loops, duplicate
  // edges, or endpoints >= n.
  static Graph FromEdges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return degree_.size(); }
  std::uint64_t num_edges() const { return adjacency_.size() / 2; }

  std::uint32_t degree(VertexId v) const;

  // The i-th neighbor of v (1-based, load order); nullopt when i > d_v.
  std::optional<VertexId> neighbor(VertexId v, std::uint64_t i) const;

  bool has_edge(VertexId u, VertexId v) const;

  // u precedes v iff d_u < d_v, or d_u == d_v and u < v. Throws for u == v.
  bool precedes(VertexId u, VertexId v) const;

  // Load-order adjacency of v.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::span<const VertexId> sorted_neighbors(VertexId v) const;

  // Offset of v's adjacency slice; slot k of v is global slot offset(v) + k.
  std::uint64_t offset(VertexId v) const;

  // Load-order position (0-based) of w inside v's adjacency, if adjacent.
  std::optional<std::uint32_t> slot_of(VertexId v, VertexId w) const;

  // Every edge once, as (u, v) with u < v, in u's load order.
  std::vector<Edge> edges() const;

 private:
  void check_vertex(VertexId v) const;
  // Position in sorted_ of w within v's slice, or npos.
  std::optional<std::uint64_t> find_sorted(VertexId v, VertexId w) const;

  std::vector<std::uint32_t> degree_;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<VertexId> sorted_;
  std::vector<std::uint32_t> sorted_slot_;
};

}  // namespace tricount

#endif  // TRICOUNT_GRAPH_HPP_
