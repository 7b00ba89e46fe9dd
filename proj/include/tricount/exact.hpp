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

#ifndef TRICOUNT_EXACT_HPP_
#define TRICOUNT_EXACT_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tricount/advice.hpp"
#include "tricount/graph.hpp"

namespace tricount {

// Triangles assigned to the directed edge (from, to): those (from, to, w)
// with to preceding w.
struct DirectedEdgeCount {
  VertexId from;
  VertexId to;
  std::uint64_t count;

  auto operator<=>(const DirectedEdgeCount&) const = default;
};

struct TriangleStats {
  std::uint64_t t = 0;
  std::vector<std::uint64_t> per_vertex;
  // Nonzero entries only, sorted by (from, to).
  std::vector<DirectedEdgeCount> per_edge;

  bool operator==(const TriangleStats&) const = default;
};

// O(n m) reference counter built only from pair lookups. Test oracle.
TriangleStats CountBrute(const Graph& g);

// Edge iterator over the degree order: every edge is intersected from its
// lower-ranked endpoint, so each triangle is found exactly once.
TriangleStats CountOrdered(const Graph& g);

// Checks the counting identities: sum t_v = 3t, per-vertex sum of t_e = t_v,
// t_e <= sqrt(2m), t <= (4/3) m^(3/2), and forward-degree <= sqrt(2m).
// Returns one message per violation.
std::vector<std::string> CheckIdentities(const TriangleStats& stats,
                                         const Graph& g);

enum class Label { kHeavy, kLight, kBorderline };

std::vector<Label> LabelGroundTruth(const TriangleStats& stats, const Graph& g,
                                    const Advice& advice, double epsilon);

}  // namespace tricount

#endif  // TRICOUNT_EXACT_HPP_
