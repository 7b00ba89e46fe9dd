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

#include "tricount/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "tricount/error.hpp"
#include "tricount/exact.hpp"

namespace tricount {
namespace {

constexpr int kMaxRestarts = 1000;

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

void RequireVertices(std::uint64_t n, std::uint64_t needed,
                     const std::string& family) {
  if (n < needed) {
    Invalid(family + " needs n >= " + std::to_string(needed) + ", got " +
            std::to_string(n));
  }
  if (n > kMaxVertices) Invalid("n exceeds the 32-bit vertex id range");
}

void RequireEvenSide(std::uint64_t s, const std::string& family) {
  if (s < 2 || s % 2 != 0) {
    Invalid(family + " needs an even side >= 2, got " + std::to_string(s));
  }
}

GenResult Finish(std::uint64_t n, const std::vector<Edge>& edges,
                 std::uint64_t exact_t, std::string formula,
                 std::uint64_t m_nominal) {
  GenResult out;
  out.graph = Graph::FromEdges(n, edges);
  out.exact_t = exact_t;
  out.formula_name = std::move(formula);
  out.m_nominal = m_nominal;
  out.edges_actual = out.graph.num_edges();
  out.spec.n = n;
  return out;
}

std::uint64_t CubeRootFloor(std::uint64_t t) {
  auto q = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(t)));
  while (q > 0 && q * q * q > t) --q;
  while ((q + 1) * (q + 1) * (q + 1) <= t) ++q;
  return q;
}

// Complete bipartite graph between [left, left+s) and [right, right+s) minus
// the pairs for which skip(i, j) holds.
template <typename Skip>
void AddBipartite(std::vector<Edge>& edges, VertexId left, VertexId right,
                  std::uint64_t s, Skip skip) {
  for (std::uint64_t i = 0; i < s; ++i) {
    for (std::uint64_t j = 0; j < s; ++j) {
      if (!skip(i, j)) {
        edges.emplace_back(static_cast<VertexId>(left + i),
                           static_cast<VertexId>(right + j));
      }
    }
  }
}

// Uniform-ish permutation of [0, s) avoiding forbidden[i] values at index i,
// built greedily with restarts.
std::vector<std::uint32_t> AvoidingPermutation(
    std::uint64_t s, const std::vector<std::set<std::uint32_t>>& forbidden,
    Rng& rng) {
  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    std::vector<std::uint32_t> free(s);
    std::iota(free.begin(), free.end(), 0u);
    std::vector<std::uint32_t> order(s);
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::uint32_t> perm(s);
    bool ok = true;
    for (std::uint32_t i : order) {
      std::vector<std::size_t> options;
      for (std::size_t k = 0; k < free.size(); ++k) {
        if (!forbidden[i].contains(free[k])) options.push_back(k);
      }
      if (options.empty()) {
        ok = false;
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      const std::size_t k = options[pick(rng)];
      perm[i] = free[k];
      free[k] = free.back();
      free.pop_back();
    }
    if (ok) return perm;
  }
  throw Error(ErrorCode::kInternal,
              "could not draw a disjoint matching after " +
                  std::to_string(kMaxRestarts) + " restarts");
}

// Perfect matching on [0, s) avoiding pairs in used (both orientations
// recorded), built greedily with restarts.
std::vector<std::pair<std::uint32_t, std::uint32_t>> AvoidingMatching(
    std::uint64_t s, const std::vector<std::set<std::uint32_t>>& used,
    Rng& rng) {
  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    std::vector<std::uint32_t> open(s);
    std::iota(open.begin(), open.end(), 0u);
    std::shuffle(open.begin(), open.end(), rng);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    bool ok = true;
    while (!open.empty()) {
      const std::uint32_t a = open.back();
      open.pop_back();
      std::vector<std::size_t> options;
      for (std::size_t k = 0; k < open.size(); ++k) {
        if (!used[a].contains(open[k])) options.push_back(k);
      }
      if (options.empty()) {
        ok = false;
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      const std::size_t k = options[pick(rng)];
      pairs.emplace_back(a, open[k]);
      open[k] = open.back();
      open.pop_back();
    }
    if (ok) return pairs;
  }
  throw Error(ErrorCode::kInternal,
              "could not draw a disjoint matching after " +
                  std::to_string(kMaxRestarts) + " restarts");
}

}  // namespace

std::string FamilyName(GenFamily family) {
  switch (family) {
    case GenFamily::kClique: return "clique";
    case GenFamily::kG1Bipartite: return "g1-bipartite";
    case GenFamily::kG2Matching: return "g2-matching";
    case GenFamily::kG2MultiMatching: return "g2-multi-matching";
    case GenFamily::kG2PartialMatching: return "g2-partial-matching";
    case GenFamily::kG1DoubleBipartite: return "g1-double-bipartite";
    case GenFamily::kG2SpecialFour: return "special-four";
    case GenFamily::kErdosRenyi: return "erdos-renyi";
  }
  return "unknown";
}

GenFamily ParseFamily(const std::string& name) {
  for (auto f : {GenFamily::kClique, GenFamily::kG1Bipartite,
                 GenFamily::kG2Matching, GenFamily::kG2MultiMatching,
                 GenFamily::kG2PartialMatching, GenFamily::kG1DoubleBipartite,
                 GenFamily::kG2SpecialFour, GenFamily::kErdosRenyi}) {
    if (FamilyName(f) == name) return f;
  }
  Invalid("unknown family '" + name + "'");
}

GenResult GenCliqueFamily(std::uint64_t n, std::uint64_t t, Rng& rng) {
  const std::uint64_t q = CubeRootFloor(t);
  if (q < 3) {
    Invalid("clique family needs floor(t^(1/3)) >= 3, got t = " +
            std::to_string(t));
  }
  RequireVertices(n, q, "clique");
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(q);
  std::sort(ids.begin(), ids.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) edges.emplace_back(ids[i], ids[j]);
  }
  return Finish(n, edges, q * (q - 1) * (q - 2) / 6, "C(q,3)",
                q * (q - 1) / 2);
}

GenResult GenG1Bipartite(std::uint64_t n, std::uint64_t side) {
  if (side < 1) Invalid("g1-bipartite needs side >= 1");
  RequireVertices(n, 2 * side, "g1-bipartite");
  std::vector<Edge> edges;
  AddBipartite(edges, 0, static_cast<VertexId>(side), side,
               [](auto, auto) { return false; });
  return Finish(n, edges, 0, "0", side * side);
}

GenResult GenG2Matching(std::uint64_t n, std::uint64_t side, Rng& rng) {
  RequireEvenSide(side, "g2-matching");
  RequireVertices(n, 2 * side, "g2-matching");
  const auto s = side;
  const auto right = static_cast<VertexId>(s);
  std::vector<std::set<std::uint32_t>> none(s);
  const auto red = AvoidingPermutation(s, none, rng);
  std::vector<Edge> edges;
  AddBipartite(edges, 0, right, s,
               [&](std::uint64_t i, std::uint64_t j) { return red[i] == j; });
  for (const auto& [a, b] : AvoidingMatching(s, none, rng)) {
    edges.emplace_back(a, b);
  }
  for (const auto& [a, b] : AvoidingMatching(s, none, rng)) {
    edges.emplace_back(right + a, right + b);
  }
  return Finish(n, edges, s * (s - 2), "s(s-2)", s * s);
}

GenResult GenG2MultiMatching(std::uint64_t n, std::uint64_t side,
                             std::uint64_t r, Rng& rng) {
  if (r == 1) {
    GenResult out = GenG2Matching(n, side, rng);
    out.spec.r = 1;
    return out;
  }
  RequireEvenSide(side, "g2-multi-matching");
  if (r < 1 || r > side / 8) {
    Invalid("g2-multi-matching needs 1 < r <= side/8, got r = " +
            std::to_string(r) + ", side = " + std::to_string(side));
  }
  RequireVertices(n, 2 * side, "g2-multi-matching");
  const auto s = side;
  const auto right = static_cast<VertexId>(s);

  std::vector<std::set<std::uint32_t>> red(s);
  for (std::uint64_t j = 0; j < r; ++j) {
    const auto perm = AvoidingPermutation(s, red, rng);
    for (std::uint64_t i = 0; i < s; ++i) red[i].insert(perm[i]);
  }
  std::vector<Edge> edges;
  AddBipartite(edges, 0, right, s, [&](std::uint64_t i, std::uint64_t j) {
    return red[i].contains(static_cast<std::uint32_t>(j));
  });
  for (VertexId base : {VertexId{0}, right}) {
    std::vector<std::set<std::uint32_t>> used(s);
    for (std::uint64_t j = 0; j < r; ++j) {
      for (const auto& [a, b] : AvoidingMatching(s, used, rng)) {
        used[a].insert(b);
        used[b].insert(a);
        edges.emplace_back(base + a, base + b);
      }
    }
  }
  GenResult out = Finish(n, edges, 0, "count_ordered", s * s);
  out.exact_t = CountOrdered(out.graph).t;
  const std::uint64_t lo = r * s * (s - 2 * r);
  const std::uint64_t hi = r * s * (s - 2) + r * r * s;
  if (out.exact_t < lo || out.exact_t > hi) {
    throw Error(ErrorCode::kInvariant,
                "multi-matching triangle count " +
                    std::to_string(out.exact_t) + " outside [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return out;
}

GenResult GenG2PartialMatching(std::uint64_t n, std::uint64_t side,
                               std::uint64_t k, Rng& rng) {
  RequireEvenSide(side, "g2-partial-matching");
  if (k < 2 || k % 2 != 0 || k > side / 4) {
    Invalid("g2-partial-matching needs even k with 2 <= k <= side/4, got k = " +
            std::to_string(k));
  }
  RequireVertices(n, 2 * side, "g2-partial-matching");
  const auto s = side;
  const auto right = static_cast<VertexId>(s);
  std::vector<std::uint32_t> idx(s);
  std::iota(idx.begin(), idx.end(), 0u);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(k);
  std::vector<std::uint8_t> red(s, 0);
  for (auto i : idx) red[i] = 1;
  std::vector<Edge> edges;
  AddBipartite(edges, 0, right, s, [&](std::uint64_t i, std::uint64_t j) {
    return i == j && red[i];
  });
  for (std::uint64_t j = 0; j + 1 < k; j += 2) {
    edges.emplace_back(idx[j], idx[j + 1]);
    edges.emplace_back(right + idx[j], right + idx[j + 1]);
  }
  return Finish(n, edges, k * (s - 2), "k(s-2)", s * s);
}

GenResult GenSpecialFour(std::uint64_t n, std::uint64_t side, std::uint64_t t,
                         bool special, Rng& rng) {
  const auto s = side;
  if (t < 1 || s == 0 || s % t != 0 || s / t < 4) {
    Invalid("special-four needs t >= 1, t dividing side and side/t >= 4; "
            "got side = " + std::to_string(s) + ", t = " + std::to_string(t));
  }
  RequireVertices(n, 4 * s, "special-four");
  const std::uint64_t blocks = s / t;
  const auto a0 = VertexId{0};
  const auto b0 = static_cast<VertexId>(s);
  const auto c0 = static_cast<VertexId>(2 * s);
  const auto d0 = static_cast<VertexId>(3 * s);

  VertexId a_star = 0, b_star = 0, c_star = 0, d_star = 0;
  if (special) {
    std::vector<std::uint64_t> blk(blocks);
    std::iota(blk.begin(), blk.end(), 0u);
    std::shuffle(blk.begin(), blk.end(), rng);
    std::uniform_int_distribution<std::uint64_t> within(0, t - 1);
    a_star = static_cast<VertexId>(a0 + blk[0] * t + within(rng));
    b_star = static_cast<VertexId>(b0 + blk[1] * t + within(rng));
    c_star = static_cast<VertexId>(c0 + blk[2] * t + within(rng));
    d_star = static_cast<VertexId>(d0 + blk[3] * t + within(rng));
  }
  auto removed = [&](VertexId u, VertexId v) {
    return special && ((u == a_star && v == b_star) ||
                       (u == c_star && v == d_star));
  };
  std::vector<Edge> edges;
  auto add_block_pattern = [&](VertexId left, VertexId right, bool same) {
    for (std::uint64_t i = 0; i < s; ++i) {
      for (std::uint64_t j = 0; j < s; ++j) {
        if ((i / t == j / t) != same) continue;
        const auto u = static_cast<VertexId>(left + i);
        const auto v = static_cast<VertexId>(right + j);
        if (!removed(u, v)) edges.emplace_back(u, v);
      }
    }
  };
  add_block_pattern(a0, b0, false);  // black A-B minus red blocks
  add_block_pattern(c0, d0, false);  // black C-D minus red blocks
  add_block_pattern(b0, c0, true);   // blue B_i-C_i
  add_block_pattern(d0, a0, true);   // blue D_i-A_i
  if (special) {
    edges.emplace_back(a_star, c_star);
    edges.emplace_back(b_star, d_star);
  }
  return Finish(n, edges, special ? 4 * t : 0, special ? "4t" : "0", s * s);
}

GenResult GenErdosRenyi(std::uint64_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) Invalid("erdos-renyi needs p in [0, 1]");
  if (n < 1) Invalid("erdos-renyi needs n >= 1");
  RequireVertices(n, 1, "erdos-renyi");
  std::vector<Edge> edges;
  if (p > 0.0 && n > 1) {
    // Walk the row-major upper triangle with geometric skips.
    const double log_q = std::log1p(-std::min(p, 1.0 - 1e-16));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uint64_t u = 0;
    std::int64_t col = -1;  // pair (u, u + 1 + col)
    while (true) {
      std::int64_t skip = 0;
      if (p < 1.0) {
        const double g = std::floor(std::log1p(-unit(rng)) / log_q);
        skip = g > 1e15 ? static_cast<std::int64_t>(1e15)
                        : static_cast<std::int64_t>(g);
      }
      col += skip + 1;
      while (u < n - 1 && col >= static_cast<std::int64_t>(n - 1 - u)) {
        col -= static_cast<std::int64_t>(n - 1 - u);
        ++u;
      }
      if (u >= n - 1) break;
      edges.emplace_back(static_cast<VertexId>(u),
                         static_cast<VertexId>(u + 1 + col));
    }
  }
  GenResult out = Finish(n, edges, 0, "count_ordered", edges.size());
  out.exact_t = CountOrdered(out.graph).t;
  return out;
}

Graph Relabel(const Graph& g, const std::vector<VertexId>& perm,
              bool shuffle_adjacency, Rng& rng) {
  if (perm.size() != g.num_vertices()) {
    Invalid("permutation size does not match the vertex count");
  }
  std::vector<Edge> edges = g.edges();
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  if (shuffle_adjacency) std::shuffle(edges.begin(), edges.end(), rng);
  return Graph::FromEdges(g.num_vertices(), edges);
}

GenResult Generate(const GenSpec& spec) {
  Rng rng = MakeRng(spec.seed, "gen");
  auto pick_n = [&](std::uint64_t minimal) {
    return spec.n == 0 ? minimal : spec.n;
  };
  GenResult out;
  switch (spec.family) {
    case GenFamily::kClique:
      out = GenCliqueFamily(pick_n(CubeRootFloor(spec.t)), spec.t, rng);
      break;
    case GenFamily::kG1Bipartite:
      out = GenG1Bipartite(pick_n(2 * spec.side), spec.side);
      break;
    case GenFamily::kG2Matching:
      out = GenG2Matching(pick_n(2 * spec.side), spec.side, rng);
      break;
    case GenFamily::kG2MultiMatching:
      out = GenG2MultiMatching(pick_n(2 * spec.side), spec.side, spec.r, rng);
      break;
    case GenFamily::kG2PartialMatching:
      out = GenG2PartialMatching(pick_n(2 * spec.side), spec.side, spec.k,
                                 rng);
      break;
    case GenFamily::kG1DoubleBipartite:
      out = GenSpecialFour(pick_n(4 * spec.side), spec.side, spec.t, false,
                           rng);
      break;
    case GenFamily::kG2SpecialFour:
      out = GenSpecialFour(pick_n(4 * spec.side), spec.side, spec.t, true,
                           rng);
      break;
    case GenFamily::kErdosRenyi:
      out = GenErdosRenyi(spec.n, spec.p, rng);
      break;
  }
  const std::uint64_t n = out.graph.num_vertices();
  out.spec = spec;
  out.spec.n = n;
  if (spec.shuffle) {
    Rng shuffle_rng = MakeRng(spec.seed, "shuffle");
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), shuffle_rng);
    out.graph = Relabel(out.graph, perm, true, shuffle_rng);
  }
  return out;
}

}  // namespace tricount
