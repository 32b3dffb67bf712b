// Copyright 2026 The pythag Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "pythag/integer.hpp"

namespace pythag::testing {

/// Seeded generator for the randomized property checks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  Integer integer(long lo, long hi) { return Integer(uniform(lo, hi)); }

  /// Occasionally returns 0 or a boundary value so degenerate inputs get hit.
  Integer skewed(long bound) {
    switch (uniform(0, 9)) {
      case 0: return 0;
      case 1: return Integer(bound);
      case 2: return Integer(-bound);
      default: return integer(-bound, bound);
    }
  }

  template <std::size_t N>
  std::array<Integer, N> array(long bound) {
    std::array<Integer, N> a;
    for (auto& v : a) v = skewed(bound);
    return a;
  }

 private:
  std::mt19937_64 gen_;
};

inline Integer sum_sq(const std::vector<Integer>& v) {
  Integer s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

}  // namespace pythag::testing
