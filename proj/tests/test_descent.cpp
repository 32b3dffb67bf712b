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

#include <doctest.h>

#include "pythag/descent.hpp"
#include "pythag/errors.hpp"
#include "pythag/families.hpp"
#include "support.hpp"

using namespace pythag;
using pythag::testing::Rng;

namespace {

Integer flat_sum(const Quaternion& a, const Quaternion& b) {
  return a[0] + a[1] + a[2] + a[3] + b[0] + b[1] + b[2] + b[3];
}

}  // namespace

TEST_CASE("UVSolution validates its equation") {
  CHECK_NOTHROW(UVSolution::make({3, 4}, 5, 5));
  CHECK_THROWS_AS(UVSolution::make({0, 0}, 2, 2), InvariantViolation);
  CHECK_THROWS_AS(decompose_gaussian(UVSolution{{1, 1}, 1, 1}), InvariantViolation);
  CHECK_THROWS_AS(decompose_gaussian(UVSolution{{0, 0, 0}, 0, 0}), InvariantViolation);
  CHECK_THROWS_AS(decompose_quaternion(UVSolution{{1, 0}, 1, 1}), InvariantViolation);
}

TEST_CASE("decompose_gaussian examples") {
  auto terminal = decompose_gaussian(UVSolution{{0, 0}, 1, 0});
  CHECK(terminal == RankOneGaussian{1, GaussianInt{1}, GaussianInt{0}});

  UVSolution unit{{1, 0}, 1, 1};
  auto r = decompose_gaussian(unit);
  CHECK(r.c * norm(r.a) == 1);
  CHECK(r.c * (conj(r.a) * r.b) == GaussianInt{1});
  CHECK(r.reconstruct() == unit);

  UVSolution w = eval_uv_quadruple({{1, 1, 2, 3, 4}});
  REQUIRE(w == UVSolution{{11, -2}, 5, 25});
  DescentTrace trace;
  auto d = decompose_gaussian(w, &trace);
  CHECK(d.reconstruct() == w);
  CHECK(trace.u_per_round == std::vector<Integer>{5, 1});

  CHECK(decompose_gaussian(UVSolution{{0, 0}, 0, 0}) == RankOneGaussian{0, GaussianInt{1}, GaussianInt{}});
}

TEST_CASE("decompose_gaussian degenerate shapes") {
  // u = 0 != v, negative sign, non-primitive content.
  for (const auto& w : {UVSolution{{0, 0}, 0, 7}, UVSolution{{0, 0}, -3, 0}, UVSolution{{6, -8}, -10, -10},
                        UVSolution{{12, 0}, 18, 8}, UVSolution{{0, 0}, 0, -1}}) {
    CAPTURE(w);
    CHECK(decompose_gaussian(w).reconstruct() == w);
  }
}

TEST_CASE("decompose_quaternion examples") {
  CHECK(decompose_quaternion(UVSolution{{0, 0, 0, 0}, 1, 0}) ==
        RankOneQuaternion{1, Quaternion::one(), Quaternion{}});
  CHECK(decompose_quaternion(UVSolution{{0, 0, 0, 0}, 0, 0}) ==
        RankOneQuaternion{0, Quaternion::one(), Quaternion{}});

  UVSolution special{{1, 1, 1, 1}, 2, 2};
  DescentTrace trace;
  auto r = decompose_quaternion(special, &trace);
  CHECK(trace.special_terminal);
  CHECK(r.reconstruct() == special);
  CHECK((r.c == 1 || r.c == -1));
  CHECK(norm(r.a) == 2);
  CHECK(norm(r.b) == 2);

  UVSolution w = eval_uv_sextuple({{1, 1, 1, 0, 0, 0, 0, 1, 1}});
  REQUIRE(w == UVSolution{{0, 0, -2, 0}, 2, 2});
  CHECK(decompose_quaternion(w).reconstruct() == w);
}

TEST_CASE("equality terminal appears for every sign pattern of (+-1, +-1, +-1, +-1)") {
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Integer> xs;
    for (int m = 0; m < 4; ++m) xs.emplace_back((mask >> m) & 1 ? -1 : 1);
    for (int s : {1, -1}) {
      UVSolution w{xs, 2 * s, 2 * s};
      CAPTURE(w);
      CHECK(decompose_quaternion(w).reconstruct() == w);
    }
  }
}

TEST_CASE("normalize_odd") {
  RankOneGaussian odd{3, GaussianInt{1, 2}, GaussianInt{0, 1}};
  CHECK(normalize_odd(odd) == odd);
  CHECK(normalize_odd({2, GaussianInt{1}, GaussianInt{1}}) == RankOneGaussian{1, {1, 1}, {1, 1}});
  CHECK(normalize_odd({0, GaussianInt{5, 1}, GaussianInt{2}}) == RankOneGaussian{0, GaussianInt{1}, GaussianInt{}});
  RankOneGaussian even{-24, GaussianInt{2, -1}, GaussianInt{3, 5}};
  auto n = normalize_odd(even);
  CHECK(n.c == -3);
  CHECK(n.reconstruct() == even.reconstruct());
}

TEST_CASE("normalize_unit") {
  RankOneQuaternion unit{1, Quaternion{1, 2}, Quaternion{0, 0, 3}};
  CHECK(normalize_unit(unit) == unit);
  CHECK(normalize_unit({4, Quaternion{1}, Quaternion{}}) == RankOneQuaternion{1, Quaternion{2}, Quaternion{}});
  auto n = normalize_unit({-7, Quaternion{1}, Quaternion{1}});
  CHECK(n.c == -1);
  CHECK(norm(n.a) == 7);
  CHECK(n.a == n.b);
  CHECK(n.reconstruct() == RankOneQuaternion{-7, Quaternion{1}, Quaternion{1}}.reconstruct());
}

TEST_CASE("random decompositions reconstruct exactly") {
  Rng rng(21);
  for (int trial = 0; trial < 10000; ++trial) {
    // Gaussian: entries up to ~1e5 via random parameters.
    auto y = rng.array<5>(30);
    UVSolution w2 = eval_uv_quadruple({y});
    DescentTrace trace;
    auto g = decompose_gaussian(w2, &trace);
    REQUIRE(g.reconstruct() == w2);
    for (std::size_t r = 1; r < trace.u_per_round.size(); ++r) {
      REQUIRE(2 * trace.u_per_round[r] <= trace.u_per_round[r - 1]);
    }
    auto go = normalize_odd(g);
    REQUIRE(go.reconstruct() == w2);
    REQUIRE((go.c == 0 || is_odd(go.c)));

    auto z = rng.array<9>(12);
    UVSolution w4 = eval_uv_sextuple({z});
    DescentTrace qtrace;
    auto q = decompose_quaternion(w4, &qtrace);
    REQUIRE(q.reconstruct() == w4);
    for (std::size_t r = 1; r < qtrace.u_per_round.size(); ++r) {
      REQUIRE(qtrace.u_per_round[r] < qtrace.u_per_round[r - 1]);
    }
    auto qu = normalize_unit(q);
    REQUIRE(qu.reconstruct() == w4);
    REQUIRE((qu.c == 0 || qu.c == 1 || qu.c == -1));
    if (is_odd(qu.c)) {
      REQUIRE(is_even(flat_sum(qu.a, qu.b) - w4.u - w4.v));
    }
  }
}
