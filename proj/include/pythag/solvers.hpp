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
#include <span>

#include "pythag/families.hpp"

namespace pythag {

/// Coefficients of s in the six skew basis vectors built from z:
/// s = z12(z2,-z1,0,0) + z13(z3,0,-z1,0) + z14(z4,0,0,-z1)
///   + z23(0,z3,-z2,0) + z24(0,z4,0,-z2) + z34(0,0,z4,-z3).
struct SkewCompletion {
  Integer z12, z13, z14, z23, z24, z34;

  /// Applies the skew combination to z.
  std::array<Integer, 4> apply(std::span<const Integer, 4> z) const;

  friend bool operator==(const SkewCompletion&, const SkewCompletion&) = default;
};

/// Solves for the skew coefficients given unimodular z and s orthogonal to z,
/// using z_ij = s_i p_j - p_i s_j with p . z = 1.
/// Throws NotUnimodular or NotOrthogonal.
SkewCompletion skew_complete(std::span<const Integer, 4> z, std::span<const Integer, 4> s);

/// Same, with an explicit cofactor p (p . z must be 1).
SkewCompletion skew_complete(std::span<const Integer, 4> z, std::span<const Integer, 4> s,
                             std::span<const Integer, 4> p);

// Every solver returns parameters whose forward evaluation reproduces its
// input exactly, and throws InvariantViolation when the input does not
// satisfy its defining equation. Zero inputs map to all-zero parameters.

TripleParams solve_triple(const PythTuple& t);

/// y0 is odd for nonzero input.
QuadUVParams solve_uv_quadruple(const UVSolution& w);

QuadParams solve_quadruple(const PythTuple& t);

/// y0 is -1 or +1 for nonzero input.
SextUVParams solve_uv_sextuple(const UVSolution& w);

SextParams solve_sextuple(const PythTuple& t);

QuintUVParams solve_uv_quintuple(const UVSolution& w);

/// Diagnostics from the quintuple solver.
struct QuintSolveInfo {
  int row = 0;          ///< substitution row, t1*4 + t2*2 + t3
  int repairs_used = 0; ///< cofactor adjustments tried before success
};

/// Throws UnreachableParams if no substitution row accepts the parameters
/// even after the repair moves.
QuintParams solve_quintuple(const PythTuple& t, QuintSolveInfo* info = nullptr);

DescartesParams solve_descartes(const DescartesQuadruple& q);

/// (t1, t2, t3) of the substitution row whose z-offset parities equal
/// delta = ((z1 - z4) mod 2, (z2 - z4) mod 2, (z3 - z4) mod 2).
std::array<int, 3> quintuple_row_for(const std::array<int, 3>& delta);

}  // namespace pythag
