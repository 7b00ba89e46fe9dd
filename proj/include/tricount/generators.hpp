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

#ifndef TRICOUNT_GENERATORS_HPP_
#define TRICOUNT_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "tricount/graph.hpp"
#include "tricount/random.hpp"

namespace tricount {

enum class GenFamily {
  kClique,                 // clique on floor(t^(1/3)) random ids
  kG1Bipartite,            // K_{s,s} plus isolated vertices
  kG2Matching,             // one red and two blue perfect matchings
  kG2MultiMatching,        // r red / r blue perfect matchings per side
  kG2PartialMatching,      // k red pairs closed into matched squares
  kG1DoubleBipartite,      // two block-swapped K_{s,s}; triangle-free
  kG2SpecialFour,          // the above plus two green special edges
  kErdosRenyi,             // G(n, p)
};

std::string FamilyName(GenFamily family);
GenFamily ParseFamily(const std::string& name);

struct GenSpec {
  GenFamily family = GenFamily::kG1Bipartite;
  // 0 selects the smallest vertex count that fits the construction.
  std::uint64_t n = 0;
  std::uint64_t side = 0;
  std::uint64_t t = 0;
  std::uint64_t r = 0;
  std::uint64_t k = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  // Randomize vertex ids instead of placing isolated vertices at the tail.
  bool shuffle = false;
};

struct GenResult {
  Graph graph;
  std::uint64_t exact_t = 0;
  std::string formula_name;
  GenSpec spec;
  // m as the family defines it (side^2) versus the edges actually present.
  std::uint64_t m_nominal = 0;
  std::uint64_t edges_actual = 0;
};

GenResult GenCliqueFamily(std::uint64_t n, std::uint64_t t, Rng& rng);
GenResult GenG1Bipartite(std::uint64_t n, std::uint64_t side);
GenResult GenG2Matching(std::uint64_t n, std::uint64_t side, Rng& rng);
GenResult GenG2MultiMatching(std::uint64_t n, std::uint64_t side,
                             std::uint64_t r, Rng& rng);
GenResult GenG2PartialMatching(std::uint64_t n, std::uint64_t side,
                               std::uint64_t k, Rng& rng);
// special == false yields the triangle-free twin.
GenResult GenSpecialFour(std::uint64_t n, std::uint64_t side, std::uint64_t t,
                         bool special, Rng& rng);
GenResult GenErdosRenyi(std::uint64_t n, double p, Rng& rng);

// Dispatches on spec.family, seeding from spec.seed and applying shuffle.
GenResult Generate(const GenSpec& spec);

// Relabels vertex ids by a permutation (new_id = perm[old_id]) and, when
// shuffle_adjacency is set, also randomizes neighbor order.
Graph Relabel(const Graph& g, const std::vector<VertexId>& perm,
              bool shuffle_adjacency, Rng& rng);

}  // namespace tricount

#endif  // TRICOUNT_GENERATORS_HPP_
