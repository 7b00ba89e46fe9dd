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

#include "tricount/advice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tricount/error.hpp"

namespace tricount {

bool ConformsTo(const Advice& advice, std::uint64_t m, std::uint64_t t) {
  const auto td = static_cast<double>(t);
  return td / 4.0 <= advice.t_bar && advice.t_bar <= td &&
         m <= 6 * advice.m_bar;
}

double ClampEpsilon(double epsilon) {
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must lie in (0, 1], got " + std::to_string(epsilon));
  }
  return std::min(epsilon, 0.5);
}

HeavyThresholds HeavyThresholds::From(const Advice& advice, double epsilon) {
  if (advice.m_bar < 1 || !(advice.t_bar >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "advice must be at least 1");
  }
  const double m = static_cast<double>(advice.m_bar);
  const double t23 = std::cbrt(advice.t_bar * advice.t_bar);
  const double e13 = std::cbrt(epsilon);
  HeavyThresholds h;
  h.degree_cutoff = 2.0 * m / std::cbrt(epsilon * advice.t_bar);
  h.heavy_triangles = 2.0 * t23 / e13;
  h.light_triangles = t23 / (2.0 * e13);
  h.decision = t23 / e13;
  return h;
}

}  // namespace tricount
