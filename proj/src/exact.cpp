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

#include "tricount/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace tricount {
namespace {

std::uint64_t EdgeKey(VertexId from, VertexId to) {
  return (static_cast<std::uint64_t>(from) << 32) | to;
}

class StatsBuilder {
 public:
  explicit StatsBuilder(const Graph& g) : g_(g) {
    stats_.per_vertex.assign(g.num_vertices(), 0);
  }

  // Records the triangle a < b < c in the degree order.
  void AddOrdered(VertexId a, VertexId b, VertexId c) {
    ++stats_.t;
    ++stats_.per_vertex[a];
    ++stats_.per_vertex[b];
    ++stats_.per_vertex[c];
    ++per_edge_[EdgeKey(a, b)];
    ++per_edge_[EdgeKey(b, a)];
    ++per_edge_[EdgeKey(c, a)];
  }

  void Add(VertexId x, VertexId y, VertexId z) {
    if (g_.precedes(y, x)) std::swap(x, y);
    if (g_.precedes(z, y)) std::swap(y, z);
    if (g_.precedes(y, x)) std::swap(x, y);
    AddOrdered(x, y, z);
  }

  TriangleStats Finish() {
    stats_.per_edge.reserve(per_edge_.size());
    for (const auto& [key, count] : per_edge_) {
      stats_.per_edge.push_back({static_cast<VertexId>(key >> 32),
                                 static_cast<VertexId>(key & 0xffffffffu),
                                 count});
    }
    std::sort(stats_.per_edge.begin(), stats_.per_edge.end());
    return std::move(stats_);
  }

 private:
  const Graph& g_;
  TriangleStats stats_;
  std::unordered_map<std::uint64_t, std::uint64_t> per_edge_;
};

}  // namespace

TriangleStats CountBrute(const Graph& g) {
  StatsBuilder builder(g);
  const std::size_t n = g.num_vertices();
  for (const auto& [u, v] : g.edges()) {
    for (VertexId w = v + 1; w < n; ++w) {
      if (g.has_edge(u, w) && g.has_edge(v, w)) builder.Add(u, v, w);
    }
  }
  return builder.Finish();
}

TriangleStats CountOrdered(const Graph& g) {
  StatsBuilder builder(g);
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<VertexId>> forward(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId x : g.neighbors(v)) {
      if (g.precedes(v, x)) forward[v].push_back(x);
    }
  }
  std::vector<std::uint8_t> mark(n, 0);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b : forward[a]) mark[b] = 1;
    for (VertexId b : forward[a]) {
      for (VertexId c : forward[b]) {
        if (mark[c]) builder.AddOrdered(a, b, c);
      }
    }
    for (VertexId b : forward[a]) mark[b] = 0;
  }
  return builder.Finish();
}

std::vector<std::string> CheckIdentities(const TriangleStats& stats,
                                         const Graph& g) {
  std::vector<std::string> errors;
  const std::size_t n = g.num_vertices();
  const double m = static_cast<double>(g.num_edges());
  const double sqrt2m = std::sqrt(2.0 * m);

  if (stats.per_vertex.size() != n) {
    errors.push_back("per_vertex has wrong size");
    return errors;
  }
  std::uint64_t sum_tv = 0;
  for (auto tv : stats.per_vertex) sum_tv += tv;
  if (sum_tv != 3 * stats.t) {
    errors.push_back("sum of t_v is " + std::to_string(sum_tv) +
                     ", expected 3t = " + std::to_string(3 * stats.t));
  }

  std::vector<std::uint64_t> edge_sum(n, 0);
  for (const auto& e : stats.per_edge) {
    if (e.from >= n || !g.has_edge(e.from, e.to)) {
      errors.push_back("t_e recorded for a non-edge");
      continue;
    }
    edge_sum[e.from] += e.count;
    if (static_cast<double>(e.count) > sqrt2m) {
      errors.push_back("t_e exceeds sqrt(2m) at (" + std::to_string(e.from) +
                       ", " + std::to_string(e.to) + ")");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (edge_sum[v] != stats.per_vertex[v]) {
      errors.push_back("sum of t_e at vertex " + std::to_string(v) + " is " +
                       std::to_string(edge_sum[v]) + ", t_v is " +
                       std::to_string(stats.per_vertex[v]));
    }
    std::uint64_t forward = 0;
    for (VertexId x : g.neighbors(v)) forward += g.precedes(v, x) ? 1 : 0;
    if (static_cast<double>(forward) > sqrt2m) {
      errors.push_back("forward degree exceeds sqrt(2m) at vertex " +
                       std::to_string(v));
    }
  }
  if (static_cast<double>(stats.t) > 4.0 / 3.0 * std::pow(m, 1.5)) {
    errors.push_back("t exceeds (4/3) m^(3/2)");
  }
  return errors;
}

std::vector<Label> LabelGroundTruth(const TriangleStats& stats, const Graph& g,
                                    const Advice& advice, double epsilon) {
  const auto h = HeavyThresholds::From(advice, epsilon);
  std::vector<Label> labels(g.num_vertices(), Label::kBorderline);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const double d = g.degree(v);
    const double tv = static_cast<double>(stats.per_vertex[v]);
    if (d > h.degree_cutoff || tv > h.heavy_triangles) {
      labels[v] = Label::kHeavy;
    } else if (tv <= h.light_triangles) {
      labels[v] = Label::kLight;
    }
  }
  return labels;
}

}  // namespace tricount
