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

#include <vector>

#include "pythag/algebra.hpp"

namespace pythag {

/// Integer vector (x_1..x_k, u, v) with x_1^2 + ... + x_k^2 == u*v.
///
/// Viewed as the Hermitian matrix [[u, x], [x*, v]] of determinant zero,
/// where x = x_1 + x_2 i (k = 2) or x_1 + x_2 i + x_3 j + x_4 k (k = 4).
struct UVSolution {
  std::vector<Integer> xs;
  Integer u;
  Integer v;

  /// Validating constructor. Throws InvariantViolation.
  static UVSolution make(std::vector<Integer> xs, Integer u, Integer v);

  std::size_t k() const { return xs.size(); }
  bool holds() const;
  bool is_zero() const;

  friend bool operator==(const UVSolution&, const UVSolution&) = default;
};

std::ostream& operator<<(std::ostream& os, const UVSolution& w);

/// w = (a, b)^* c (a, b) over Z[i]: u = c|a|^2, v = c|b|^2, x1 + x2 i = c conj(a) b.
struct RankOneGaussian {
  Integer c;
  GaussianInt a;
  GaussianInt b;

  UVSolution reconstruct() const;
  friend bool operator==(const RankOneGaussian&, const RankOneGaussian&) = default;
};

/// Quaternion analogue: u = c a*a, v = c b*b, x1 + x2 i + x3 j + x4 k = c b* a.
struct RankOneQuaternion {
  Integer c;
  Quaternion a;
  Quaternion b;

  UVSolution reconstruct() const;
  friend bool operator==(const RankOneQuaternion&, const RankOneQuaternion&) = default;
};

/// Optional instrumentation of a descent run.
struct DescentTrace {
  std::vector<Integer> u_per_round;  ///< |u| of the primitive part at the start of each round
  bool special_terminal = false;     ///< ended at [[2, 1+i+j+k], [.., 2]]
};

/// Rank-one decomposition of a k = 2 solution by descent over Z[i].
/// The zero solution maps to (0, 1, 0). Throws InvariantViolation.
RankOneGaussian decompose_gaussian(const UVSolution& w, DescentTrace* trace = nullptr);

/// Rank-one decomposition of a k = 4 solution by descent over the Lipschitz
/// quaternions. Throws InvariantViolation.
RankOneQuaternion decompose_quaternion(const UVSolution& w, DescentTrace* trace = nullptr);

/// Moves factors of 2 out of c by (a, b) <- (1+i)(a, b) until c is odd or zero.
RankOneGaussian normalize_odd(RankOneGaussian r);

/// Brings c to {-1, 0, 1} by writing |c| = d*d and (a, b) <- d(a, b).
RankOneQuaternion normalize_unit(RankOneQuaternion r);

}  // namespace pythag
