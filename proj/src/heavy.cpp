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

#include "tricount/heavy.hpp"

#include <algorithm>
#include <cmath>

#include "tricount/error.hpp"

namespace tricount {

std::uint64_t CeilDivSqrt(std::uint64_t d, std::uint64_t m_bar) {
  if (m_bar == 0) throw Error(ErrorCode::kInvalidArgument, "m_bar must be >= 1");
  using U = unsigned __int128;
  const U d2 = static_cast<U>(d) * d;
  auto r = static_cast<std::uint64_t>(
      std::ceil(static_cast<double>(d) / std::sqrt(static_cast<double>(m_bar))));
  while (r > 0 && static_cast<U>(r - 1) * (r - 1) * m_bar >= d2) --r;
  while (static_cast<U>(r) * r * m_bar < d2) ++r;
  return r;
}

double LowerMedian(std::vector<double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "median of an empty list");
  }
  const std::size_t k = (values.size() - 1) / 2;
  std::nth_element(values.begin(), values.begin() + k, values.end());
  return values[k];
}

HeavyParams HeavyParams::Make(std::size_t n, const Advice& advice,
                              double epsilon, const HeavyConfig& config) {
  if (!(config.s_scale > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "s_scale must be positive");
  }
  HeavyParams p;
  p.advice = advice;
  p.epsilon = epsilon;
  p.thresholds = HeavyThresholds::From(advice, epsilon);
  if (config.outer_reps) {
    p.outer_reps = std::max<std::uint32_t>(1, *config.outer_reps);
  } else {
    const double ln_n = n > 1 ? std::log(static_cast<double>(n)) : 0.0;
    p.outer_reps =
        std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::ceil(10.0 * ln_n)));
  }
  const double m = static_cast<double>(advice.m_bar);
  const double s = config.s_scale * 20.0 * m * std::sqrt(m) /
                   (epsilon * epsilon * advice.t_bar);
  p.samples_per_rep = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(s)));
  return p;
}

HeavyVerdict ClassifyHeavy(QueryOracle& oracle, VertexId v,
                           const HeavyParams& params, Rng& rng) {
  HeavyVerdict out;
  const std::uint64_t start = oracle.stats().graph_queries();
  const std::uint32_t dv = oracle.degree(v);

  if (dv > params.thresholds.degree_cutoff) {
    out.verdict = Verdict::kHeavy;
    out.degree_cutoff_hit = true;
  } else if (dv == 0) {
    out.verdict = Verdict::kLight;
  } else {
    const std::uint64_t s = params.samples_per_rep;
    out.estimates.reserve(params.outer_reps);
    for (std::uint32_t i = 0; i < params.outer_reps; ++i) {
      double sum_y = 0.0;
      for (std::uint64_t j = 0; j < s; ++j) {
        const VertexId x = oracle.random_edge_at(v, rng).second;
        const VertexId u = oracle.precedes(v, x) ? v : x;
        const VertexId other = u == v ? x : v;
        const std::uint32_t du = oracle.degree(u);
        const std::uint64_t r = CeilDivSqrt(du, params.advice.m_bar);
        std::uniform_int_distribution<std::uint32_t> pick(1, du);
        std::uint64_t hits = 0;
        for (std::uint64_t k = 0; k < r; ++k) {
          const VertexId w = *oracle.neighbor(u, pick(rng));
          if (w == other) continue;
          if (oracle.pair(other, w) && oracle.precedes(x, w)) ++hits;
        }
        sum_y += static_cast<double>(hits) * du / static_cast<double>(r);
      }
      out.estimates.push_back(static_cast<double>(dv) / s * sum_y);
    }
    out.verdict = LowerMedian(out.estimates) > params.thresholds.decision
                      ? Verdict::kHeavy
                      : Verdict::kLight;
  }
  out.queries_used = oracle.stats().graph_queries() - start;
  return out;
}

}  // namespace tricount
