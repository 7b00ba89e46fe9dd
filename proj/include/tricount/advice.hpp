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

#ifndef TRICOUNT_ADVICE_HPP_
#define TRICOUNT_ADVICE_HPP_

#include <cstdint>

namespace tricount {

// Constant-factor guesses for the edge count (m_bar) and triangle count
// (t_bar). The estimator's guarantees need t/4 <= t_bar <= t and
// m/6 <= m_bar.
struct Advice {
  std::uint64_t m_bar = 1;
  double t_bar = 1.0;
};

bool ConformsTo(const Advice& advice, std::uint64_t m, std::uint64_t t);

// epsilon is clamped into (0, 1/2]; throws outside (0, 1].
double ClampEpsilon(double epsilon);

// Heavy/light thresholds derived from advice and epsilon.
struct HeavyThresholds {
  // d_v above this is heavy outright: 2 m_bar / (eps t_bar)^(1/3).
  double degree_cutoff;
  // Heavy if t_v exceeds 2 t_bar^(2/3) / eps^(1/3).
  double heavy_triangles;
  // Light if t_v is at most t_bar^(2/3) / (2 eps^(1/3)).
  double light_triangles;
  // The sampling classifier compares its median against t_bar^(2/3) / eps^(1/3).
  double decision;

  static HeavyThresholds From(const Advice& advice, double epsilon);
};

}  // namespace tricount

#endif  // TRICOUNT_ADVICE_HPP_
