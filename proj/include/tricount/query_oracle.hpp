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

#ifndef TRICOUNT_QUERY_ORACLE_HPP_
#define TRICOUNT_QUERY_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tricount/graph.hpp"
#include "tricount/random.hpp"

namespace tricount {

// Counts of distinct queries. Repeating a query whose answer is already
// known never increments a counter.
struct QueryStats {
  std::uint64_t degree = 0;
  std::uint64_t neighbor = 0;
  std::uint64_t pair = 0;
  std::uint64_t vertex_samples = 0;

  // Degree + neighbor + pair: the quantity the budget cap applies to.
  std::uint64_t graph_queries() const { return degree + neighbor + pair; }
  std::uint64_t total() const { return graph_queries() + vertex_samples; }

  QueryStats operator-(const QueryStats& other) const;
  QueryStats& operator+=(const QueryStats& other);
  bool operator==(const QueryStats&) const = default;
};

// Metered, memoizing view of a Graph. This is the only path through which
// the estimator touches the graph.
//
// Knowledge is cumulative: a neighbor answer also settles the pair query for
// the revealed edge, and once every adjacency slot of a vertex (and its
// degree) is known, every pair query involving that vertex is answered
// without charge.
//
// The referenced Graph must outlive the oracle. One oracle is single-writer;
// use separate oracles for concurrent work over a shared Graph.
class QueryOracle {
 public:
  explicit QueryOracle(const Graph& g,
                       std::optional<std::uint64_t> cap = std::nullopt);
  QueryOracle(Graph&&, std::optional<std::uint64_t> = std::nullopt) = delete;

  std::size_t num_vertices() const { return graph_->num_vertices(); }

  std::uint32_t degree(VertexId v);
  // 1-based; nullopt is the "no such neighbor" symbol for i > d_v.
  std::optional<VertexId> neighbor(VertexId v, std::uint64_t i);
  bool pair(VertexId u, VertexId v);

  // Uniform vertex; never memoized and never charged against the cap.
  VertexId sample_vertex(Rng& rng);

  // count uniform vertex samples as (vertex, multiplicity) pairs sorted by
  // vertex. Large counts are drawn as one multinomial vector.
  std::vector<std::pair<VertexId, std::uint64_t>> sample_vertices(
      std::uint64_t count, Rng& rng);

  // (v, x) with x uniform over v's neighbors: a degree query followed by a
  // neighbor query at a uniform index. Throws for isolated v.
  Edge random_edge_at(VertexId v, Rng& rng);

  // Vertex order by (degree, id), decided with two degree queries.
  bool precedes(VertexId u, VertexId v);

  const QueryStats& stats() const { return stats_; }

  // Absolute cap on stats().graph_queries(). Setting a cap clears the
  // exhausted state.
  void set_cap(std::optional<std::uint64_t> cap);
  std::optional<std::uint64_t> cap() const { return cap_; }
  bool exhausted() const { return exhausted_; }

  // True once every degree and every adjacency slot has been revealed, at
  // which point the whole graph is known and further queries are pointless.
  bool knows_graph() const;

  // Reads every degree and adjacency slot through the query interface and
  // returns the reconstructed graph.
  Graph ReadWholeGraph();

 private:
  void check_vertex(VertexId v) const;
  void ensure_live() const;
  void charge(std::uint64_t& counter);
  bool vertex_fully_known(VertexId v) const;
  void reveal_slot(VertexId v, std::uint32_t slot);

  const Graph* graph_;
  std::optional<std::uint64_t> cap_;
  bool exhausted_ = false;
  QueryStats stats_;

  std::vector<std::uint8_t> degree_known_;
  std::uint64_t degrees_known_count_ = 0;
  std::vector<std::uint8_t> slot_known_;
  std::vector<std::uint32_t> slots_known_per_vertex_;
  std::uint64_t slots_known_count_ = 0;
  // (v, i) neighbor queries with i > d_v.
  std::set<std::pair<VertexId, std::uint64_t>> absent_known_;
  std::unordered_set<std::uint64_t> pair_known_;
};

}  // namespace tricount

#endif  // TRICOUNT_QUERY_ORACLE_HPP_
