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

#ifndef TRICOUNT_HEAVY_HPP_
#define TRICOUNT_HEAVY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "tricount/advice.hpp"
#include "tricount/graph.hpp"
#include "tricount/query_oracle.hpp"
#include "tricount/random.hpp"

namespace tricount {

enum class Verdict { kHeavy, kLight };

struct HeavyConfig {
  // Multiplier on the per-repetition edge sample count.
  double s_scale = 1.0;
  // Overrides ceil(10 ln n) repetitions.
  std::optional<std::uint32_t> outer_reps;
};

struct HeavyParams {
  Advice advice;
  double epsilon = 0.5;
  std::uint32_t outer_reps = 1;
  // Edges sampled per repetition: ceil(s_scale * 20 m_bar^(3/2) / (eps^2 t_bar)).
  std::uint64_t samples_per_rep = 1;
  HeavyThresholds thresholds{};

  static HeavyParams Make(std::size_t n, const Advice& advice, double epsilon,
                          const HeavyConfig& config = {});
};

struct HeavyVerdict {
  Verdict verdict = Verdict::kLight;
  bool degree_cutoff_hit = false;
  // One estimate of t_v per repetition (empty on a short-circuit).
  std::vector<double> estimates;
  std::uint64_t queries_used = 0;
};

// ceil(d / sqrt(m_bar)) in exact integer arithmetic.
std::uint64_t CeilDivSqrt(std::uint64_t d, std::uint64_t m_bar);

// Lower median (the smaller middle element for even sizes).
double LowerMedian(std::vector<double> values);

// Decides whether v is heavy using only oracle queries. Propagates
// BudgetExhausted.
HeavyVerdict ClassifyHeavy(QueryOracle& oracle, VertexId v,
                           const HeavyParams& params, Rng& rng);

}  // namespace tricount

#endif  // TRICOUNT_HEAVY_HPP_
