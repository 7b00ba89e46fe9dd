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

#ifndef TRICOUNT_RANDOM_HPP_
#define TRICOUNT_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace tricount {

// Every randomized routine takes its generator explicitly.
using Rng = std::mt19937_64;

// splitmix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Derives an independent child seed from a parent seed and a fixed stage
// label (plus an optional index). Adding a new label never changes the
// seeds handed to existing labels.
std::uint64_t DeriveSeed(std::uint64_t parent, std::string_view label,
                         std::uint64_t index = 0);

inline Rng MakeRng(std::uint64_t parent, std::string_view label,
                   std::uint64_t index = 0) {
  return Rng(DeriveSeed(parent, label, index));
}

}  // namespace tricount

#endif  // TRICOUNT_RANDOM_HPP_
