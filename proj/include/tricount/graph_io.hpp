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

#ifndef TRICOUNT_GRAPH_IO_HPP_
#define TRICOUNT_GRAPH_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "tricount/graph.hpp"

namespace tricount {

// Edge-list text: one "u v" pair per line, whitespace separated. '#' starts
// a comment. An optional "n <count>" line fixes the vertex count above the
// largest id.
struct EdgeListOptions {
  // Compact arbitrary ids into [0, n) in order of first appearance.
  bool remap_ids = false;
};

struct LoadedGraph {
  Graph graph;
  // original_ids[v] is the id that vertex v had in the file. Only filled
  // when remap_ids is set.
  std::vector<std::uint64_t> original_ids;
};

LoadedGraph ParseEdgeList(std::string_view text,
                          const EdgeListOptions& options = {});
LoadedGraph LoadEdgeListFile(const std::filesystem::path& path,
                             const EdgeListOptions& options = {});

// Writes an "n <count>" header followed by every edge once.
void WriteEdgeList(const Graph& g, std::ostream& out);
void WriteEdgeListFile(const Graph& g, const std::filesystem::path& path);

}  // namespace tricount

#endif  // TRICOUNT_GRAPH_IO_HPP_
