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

#include "tricount/estimator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_map>

#include "tricount/error.hpp"
#include "tricount/exact.hpp"

namespace tricount {
namespace {

double Ln(double x) { return x > 1.0 ? std::log(x) : 0.0; }

std::uint64_t CeilAtLeastOne(double x) {
  if (!(x >= 1.0)) return 1;
  if (x >= 1.8e19) {
    throw Error(ErrorCode::kInvalidArgument,
                "sample count overflows 64 bits; use smaller constants");
  }
  return static_cast<std::uint64_t>(std::ceil(x));
}

std::uint32_t DefaultReps(std::size_t n) {
  return static_cast<std::uint32_t>(
      CeilAtLeastOne(10.0 * Ln(static_cast<double>(n))));
}

}  // namespace

EstimatorParams EstimatorParams::Theoretical() { return EstimatorParams{}; }

EstimatorParams EstimatorParams::Practical() {
  EstimatorParams p;
  p.profile = Profile::kPractical;
  p.shrink_epsilon = false;
  p.c_runs = 0.25;
  p.s1_scale = 0.01;
  p.s2_scale = 0.03;
  p.heavy.s_scale = 0.0002;
  p.heavy.outer_reps = 3;
  return p;
}

EstimatorParams EstimatorParams::ForProfile(Profile profile) {
  return profile == Profile::kPractical ? Practical() : Theoretical();
}

std::string ProfileName(Profile profile) {
  return profile == Profile::kPractical ? "practical" : "theoretical";
}

Profile ParseProfile(const std::string& name) {
  if (name == "theoretical") return Profile::kTheoretical;
  if (name == "practical") return Profile::kPractical;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown profile '" + name + "' (theoretical|practical)");
}

DegreeWeightedSampler::DegreeWeightedSampler(
    std::vector<std::pair<VertexId, std::uint64_t>> weighted) {
  std::uint64_t acc = 0;
  for (const auto& [v, w] : weighted) {
    if (w == 0) continue;
    acc += w;
    vertices_.push_back(v);
    prefix_.push_back(acc);
  }
}

VertexId DegreeWeightedSampler::Sample(Rng& rng) const {
  if (empty()) {
    throw Error(ErrorCode::kInvalidArgument, "sampling from zero weight");
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, total_weight() - 1);
  const std::uint64_t r = pick(rng);
  const auto it = std::upper_bound(prefix_.begin(), prefix_.end(), r);
  return vertices_[static_cast<std::size_t>(it - prefix_.begin())];
}

double EstimateWithAdvice(QueryOracle& oracle, const Advice& advice,
                          double epsilon, const EstimatorParams& params,
                          Rng& rng, const HeavyClassifier& classifier,
                          AdviceRunStats* run_stats) {
  if (!(epsilon > 0.0) || epsilon > 0.5) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1/2]");
  }
  const std::size_t n = oracle.num_vertices();
  AdviceRunStats local;
  AdviceRunStats& st = run_stats ? *run_stats : local;
  st = {};
  if (n == 0) return 0.0;

  const double nd = static_cast<double>(n);
  const double m = static_cast<double>(advice.m_bar);
  const double sqrt_m = std::sqrt(m);
  const double eps3 = epsilon * epsilon * epsilon;
  const std::uint64_t run_seed = rng();

  st.s1 = CeilAtLeastOne(params.s1_scale * params.c1 / eps3 *
                         Ln(nd / epsilon) * nd / std::cbrt(advice.t_bar));
  auto sample = oracle.sample_vertices(st.s1, rng);
  for (auto& [v, mult] : sample) mult *= oracle.degree(v);
  const DegreeWeightedSampler sampler(std::move(sample));
  st.degree_sum = sampler.total_weight();
  if (sampler.empty()) return 0.0;

  const double ln_n = Ln(nd);
  st.s2 = CeilAtLeastOne(params.s2_scale * params.c2 / (eps3 * epsilon) *
                         ln_n * ln_n * m * sqrt_m / advice.t_bar);

  HeavyClassifier classify = classifier;
  std::unordered_map<VertexId, Verdict> cache;
  std::uint64_t uncached_calls = 0;
  if (!classify) {
    const auto heavy = HeavyParams::Make(n, advice, epsilon, params.heavy);
    classify = [&, heavy](QueryOracle& o, VertexId v) {
      if (params.heavy_cache == HeavyCachePolicy::kPerRun) {
        if (auto it = cache.find(v); it != cache.end()) return it->second;
      }
      ++st.heavy_calls;
      Rng coins = params.heavy_cache == HeavyCachePolicy::kPerRun
                      ? MakeRng(run_seed, "heavy", v)
                      : MakeRng(run_seed, "heavy-uncached", uncached_calls++);
      const Verdict verdict = ClassifyHeavy(o, v, heavy, coins).verdict;
      if (params.heavy_cache == HeavyCachePolicy::kPerRun) cache[v] = verdict;
      return verdict;
    };
  }

  double sum_y = 0.0;
  for (std::uint64_t i = 0; i < st.s2; ++i) {
    const VertexId v = sampler.Sample(rng);
    const VertexId x = oracle.random_edge_at(v, rng).second;
    const VertexId u = oracle.precedes(v, x) ? v : x;
    const VertexId other = u == v ? x : v;
    const std::uint64_t du = oracle.degree(u);

    std::uint64_t r;
    if (du * du <= advice.m_bar) {
      std::bernoulli_distribution coin(static_cast<double>(du) / sqrt_m);
      r = coin(rng) ? 1 : 0;
    } else {
      r = CeilDivSqrt(du, advice.m_bar);
    }
    if (r == 0) continue;

    std::uniform_int_distribution<std::uint64_t> pick(1, du);
    double sum_z = 0.0;
    for (std::uint64_t k = 0; k < r; ++k) {
      const VertexId w = *oracle.neighbor(u, pick(rng));
      if (w == other) continue;
      if (!oracle.pair(other, w) || !oracle.precedes(x, w)) continue;
      ++st.triangles_found;
      const bool v_light = classify(oracle, v) == Verdict::kLight;
      const bool x_light = classify(oracle, x) == Verdict::kLight;
      const bool w_light = classify(oracle, w) == Verdict::kLight;
      if (!v_light) continue;
      const int light = 1 + (x_light ? 1 : 0) + (w_light ? 1 : 0);
      sum_z += std::max(static_cast<double>(du), sqrt_m) / light;
    }
    sum_y += sum_z / static_cast<double>(r);
  }
  return nd / (static_cast<double>(st.s1) * static_cast<double>(st.s2)) *
         static_cast<double>(st.degree_sum) * sum_y;
}

double FeigeAverageDegree(QueryOracle& oracle, double epsilon_f,
                          std::uint32_t reps, Rng& rng) {
  const std::size_t n = oracle.num_vertices();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "average degree of an empty graph");
  }
  if (!(epsilon_f > 0.0) || epsilon_f > 1.0 || reps == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 0 < epsilon_f <= 1 and reps >= 1");
  }
  const std::uint64_t group_size =
      CeilAtLeastOne(std::sqrt(static_cast<double>(n)) / epsilon_f);
  const std::uint64_t groups = CeilAtLeastOne(2.0 / epsilon_f);
  std::vector<double> results;
  results.reserve(reps);
  for (std::uint32_t rep = 0; rep < reps; ++rep) {
    double best = 0.0;
    for (std::uint64_t g = 0; g < groups; ++g) {
      std::uint64_t sum = 0;
      for (std::uint64_t i = 0; i < group_size; ++i) {
        sum += oracle.degree(oracle.sample_vertex(rng));
      }
      const double avg = static_cast<double>(sum) / group_size;
      best = g == 0 ? avg : std::min(best, avg);
    }
    results.push_back(best);
  }
  return LowerMedian(std::move(results));
}

EstimateReport Estimate(QueryOracle& oracle, double epsilon,
                        const EstimatorParams& params, std::uint64_t seed) {
  const auto started = std::chrono::steady_clock::now();
  EstimateReport report;
  report.seed = seed;
  report.profile = params.profile;
  report.epsilon = ClampEpsilon(epsilon);
  report.search_epsilon = params.shrink_epsilon
                              ? report.epsilon / (3.0 * params.c_heavy)
                              : report.epsilon;
  const std::size_t n = oracle.num_vertices();
  const auto original_cap = oracle.cap();
  const QueryStats at_start = oracle.stats();
  QueryStats after_advice = at_start;

  auto finish = [&](const QueryStats& search_end) {
    const QueryStats at_end = oracle.stats();
    report.search_queries = search_end - after_advice;
    report.fallback_queries = at_end - search_end;
    report.queries = at_end - at_start;
    oracle.set_cap(original_cap);
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return report;
  };
  if (n == 0) {
    report.termination = "knowledge_complete";
    return finish(oracle.stats());
  }

  const double nd = static_cast<double>(n);
  Rng feige_rng = MakeRng(seed, "feige");
  report.avg_degree = FeigeAverageDegree(
      oracle, params.feige_epsilon, params.feige_reps.value_or(DefaultReps(n)),
      feige_rng);
  after_advice = oracle.stats();
  report.advice_queries = after_advice - at_start;
  report.advice.m_bar = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(nd * report.avg_degree / 2.0)));
  report.budget = params.budget.value_or(2 * report.advice.m_bar);
  oracle.set_cap(oracle.stats().graph_queries() + report.budget);

  const std::uint64_t runs_per_advice =
      params.min_runs_per_advice.value_or(static_cast<std::uint32_t>(
          CeilAtLeastOne(params.c_runs / report.search_epsilon *
                         Ln(Ln(nd)))));

  bool accepted = false;
  try {
    const double n3 = nd * nd * nd;
    for (double t_tilde = n3; t_tilde >= 1.0 && !accepted; t_tilde /= 2.0) {
      for (double t_bar = n3; t_bar >= t_tilde; t_bar /= 2.0) {
        const Advice advice{report.advice.m_bar, t_bar};
        ++report.advice_values;
        double x = 0.0;
        for (std::uint64_t i = 0; i < runs_per_advice; ++i) {
          if (oracle.knows_graph()) {
            report.termination = "knowledge_complete";
            throw BudgetExhausted("graph fully known");
          }
          Rng run_rng = MakeRng(seed, "run", report.runs);
          ++report.runs;
          const double xi = EstimateWithAdvice(
              oracle, advice, report.search_epsilon, params, run_rng);
          x = i == 0 ? xi : std::min(x, xi);
        }
        if (x >= t_bar) {
          report.estimate = x;
          report.advice.t_bar = t_bar;
          report.termination = "accepted";
          accepted = true;
          break;
        }
      }
    }
    if (!accepted) report.termination = "search_exhausted";
  } catch (const BudgetExhausted&) {
    if (report.termination.empty()) report.termination = "budget_exhausted";
  }
  const QueryStats search_end = oracle.stats();
  if (!accepted) {
    report.fallback_used = true;
    oracle.set_cap(std::nullopt);
    report.estimate =
        static_cast<double>(CountOrdered(oracle.ReadWholeGraph()).t);
  }
  return finish(search_end);
}

}  // namespace tricount
