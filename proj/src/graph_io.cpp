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

#include "tricount/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>

#include "tricount/error.hpp"

namespace tricount {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\v\f");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void ParseError(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t ParseId(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    ParseError(line, "expected a non-negative integer, got '" +
                         std::string(token) + "'");
  }
  return value;
}

}  // namespace

LoadedGraph ParseEdgeList(std::string_view text,
                          const EdgeListOptions& options) {
  struct RawEdge {
    std::uint64_t u;
    std::uint64_t v;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  std::optional<std::uint64_t> header_n;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto tokens = Tokens(line);
    if (tokens.size() != 2) {
      ParseError(line_no, "expected two tokens, got " +
                              std::to_string(tokens.size()));
    }
    if (tokens[0] == "n") {
      if (header_n) ParseError(line_no, "repeated 'n' header");
      header_n = ParseId(tokens[1], line_no);
      continue;
    }
    const std::uint64_t u = ParseId(tokens[0], line_no);
    const std::uint64_t v = ParseId(tokens[1], line_no);
    if (u == v) ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    raw.push_back({u, v, line_no});
  }

  // Duplicates, reported at the later occurrence.
  {
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::size_t>> keys;
    keys.reserve(raw.size());
    for (const auto& e : raw) {
      keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), e.line);
    }
    std::sort(keys.begin(), keys.end());
    std::optional<std::size_t> worst;
    std::string message;
    for (std::size_t i = 1; i < keys.size(); ++i) {
      const auto& [a, b, line] = keys[i];
      const auto& [pa, pb, pline] = keys[i - 1];
      if (a == pa && b == pb && (!worst || line < *worst)) {
        worst = line;
        message = "duplicate edge (" + std::to_string(a) + ", " +
                  std::to_string(b) + "), first seen at line " +
                  std::to_string(pline);
      }
    }
    if (worst) ParseError(*worst, message);
  }

  LoadedGraph out;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::uint64_t n = 0;
  if (options.remap_ids) {
    std::unordered_map<std::uint64_t, VertexId> ids;
    auto id_of = [&](std::uint64_t external) {
      auto [it, inserted] =
          ids.try_emplace(external, static_cast<VertexId>(ids.size()));
      if (inserted) out.original_ids.push_back(external);
      return it->second;
    };
    for (const auto& e : raw) {
      const VertexId a = id_of(e.u);
      edges.emplace_back(a, id_of(e.v));
    }
    n = ids.size();
  } else {
    for (const auto& e : raw) {
      if (std::max(e.u, e.v) >= kMaxVertices) {
        ParseError(e.line, "vertex id exceeds the supported range");
      }
      edges.emplace_back(static_cast<VertexId>(e.u),
                         static_cast<VertexId>(e.v));
      n = std::max(n, std::max(e.u, e.v) + 1);
    }
  }
  if (header_n) {
    if (*header_n < n) {
      throw Error(ErrorCode::kParse,
                  "header n=" + std::to_string(*header_n) +
                      " is smaller than the " + std::to_string(n) +
                      " vertices referenced");
    }
    n = *header_n;
  }
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kParse, "vertex count exceeds the supported range");
  }
  out.graph = Graph::FromEdges(n, edges);
  return out;
}

LoadedGraph LoadEdgeListFile(const std::filesystem::path& path,
                             const EdgeListOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  try {
    return ParseEdgeList(buffer.str(), options);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) {
      throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
    }
    throw;
  }
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  out << "n " << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void WriteEdgeListFile(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  WriteEdgeList(g, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace tricount
