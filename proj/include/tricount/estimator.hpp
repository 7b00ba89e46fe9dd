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

#ifndef TRICOUNT_ESTIMATOR_HPP_
#define TRICOUNT_ESTIMATOR_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tricount/advice.hpp"
#include "tricount/heavy.hpp"
#include "tricount/query_oracle.hpp"
#include "tricount/random.hpp"

namespace tricount {

enum class Profile { kTheoretical, kPractical };

enum class HeavyCachePolicy {
  // One verdict per vertex per estimate_with_advice run, drawn from a
  // per-vertex seed (fixed coins).
  kPerRun,
  // Fresh classification on every encounter. Diagnostic only.
  kOff,
};

struct EstimatorParams {
  Profile profile = Profile::kTheoretical;

  double c1 = 1.0;
  double c2 = 1.0;
  double c_heavy = 2000.0;
  // Repetitions per advice value: ceil(c_runs * eps^-1 * ln ln n).
  double c_runs = 1.0;
  double s1_scale = 1.0;
  double s2_scale = 1.0;
  // When set, the search runs with eps' = eps / (3 c_heavy).
  bool shrink_epsilon = true;
  HeavyConfig heavy;
  HeavyCachePolicy heavy_cache = HeavyCachePolicy::kPerRun;

  double feige_epsilon = 0.25;
  std::optional<std::uint32_t> feige_reps;
  std::optional<std::uint32_t> min_runs_per_advice;

  // Cap on the distinct graph queries of the advice search; 2 m_bar if unset.
  std::optional<std::uint64_t> budget;

  static EstimatorParams Theoretical();
  // Reduced constants so desk-scale graphs finish. Does not carry the
  // worst-case guarantees of Theoretical().
  static EstimatorParams Practical();
  static EstimatorParams ForProfile(Profile profile);
};

std::string ProfileName(Profile profile);
Profile ParseProfile(const std::string& name);

// Samples members of a vertex multiset with probability proportional to
// multiplicity times degree, using integer prefix sums.
class DegreeWeightedSampler {
 public:
  // (vertex, weight) pairs; zero weights are allowed and never drawn.
  explicit DegreeWeightedSampler(
      std::vector<std::pair<VertexId, std::uint64_t>> weighted);

  std::uint64_t total_weight() const {
    return prefix_.empty() ? 0 : prefix_.back();
  }
  bool empty() const { return total_weight() == 0; }
  VertexId Sample(Rng& rng) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::uint64_t> prefix_;
};

// Classifier hook: returns the verdict for a vertex. Used by tests to pin a
// partition; the default is ClassifyHeavy behind the cache policy.
using HeavyClassifier = std::function<Verdict(QueryOracle&, VertexId)>;

struct AdviceRunStats {
  std::uint64_t s1 = 0;
  std::uint64_t s2 = 0;
  std::uint64_t degree_sum = 0;
  std::uint64_t triangles_found = 0;
  std::uint64_t heavy_calls = 0;
};

// One run of the estimator for fixed advice. Returns X >= 0.
double EstimateWithAdvice(QueryOracle& oracle, const Advice& advice,
                          double epsilon, const EstimatorParams& params,
                          Rng& rng, const HeavyClassifier& classifier = {},
                          AdviceRunStats* run_stats = nullptr);

// Median over reps invocations; each invocation is the minimum of several
// sample averages of ceil(sqrt(n) / eps_f) uniform degrees.
double FeigeAverageDegree(QueryOracle& oracle, double epsilon_f,
                          std::uint32_t reps, Rng& rng);

struct EstimateReport {
  double estimate = 0.0;
  double epsilon = 0.0;
  double search_epsilon = 0.0;
  Profile profile = Profile::kTheoretical;
  Advice advice;
  double avg_degree = 0.0;
  std::uint64_t budget = 0;
  QueryStats queries;
  QueryStats advice_queries;
  QueryStats search_queries;
  QueryStats fallback_queries;
  std::uint64_t runs = 0;
  std::uint64_t advice_values = 0;
  std::uint64_t seed = 0;
  bool fallback_used = false;
  // "accepted", "budget_exhausted", "knowledge_complete", "search_exhausted".
  std::string termination;
  double wall_ms = 0.0;
};

// Estimates the triangle count with no advice. All randomness derives from
// seed through fixed stage labels. Never throws BudgetExhausted: running out
// of budget (or of advice values) switches to exact counting.
EstimateReport Estimate(QueryOracle& oracle, double epsilon,
                        const EstimatorParams& params, std::uint64_t seed);

}  // namespace tricount

#endif  // TRICOUNT_ESTIMATOR_HPP_
