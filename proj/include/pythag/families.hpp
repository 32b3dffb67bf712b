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
#include <ostream>
#include <vector>

#include "pythag/descent.hpp"
#include "pythag/integer.hpp"

namespace pythag {

/// (x_1, ..., x_n) with x_1^2 + ... + x_{n-1}^2 == x_n^2, hypotenuse last.
struct PythTuple {
  std::vector<Integer> x;

  /// Validating constructor. Throws InvariantViolation.
  static PythTuple make(std::vector<Integer> x);

  std::size_t n() const { return x.size(); }
  bool holds() const;

  friend bool operator==(const PythTuple&, const PythTuple&) = default;
};

std::ostream& operator<<(std::ostream& os, const PythTuple& t);

/// Integer curvatures with 2(b1^2 + b2^2 + b3^2 + b4^2) == (b1 + b2 + b3 + b4)^2.
struct DescartesQuadruple {
  Integer b1, b2, b3, b4;

  static DescartesQuadruple make(Integer b1, Integer b2, Integer b3, Integer b4);
  bool holds() const;

  friend bool operator==(const DescartesQuadruple&, const DescartesQuadruple&) = default;
};

std::ostream& operator<<(std::ostream& os, const DescartesQuadruple& q);

// Parameter records. Where a family is indexed y0, y1, ... the array index
// is the subscript.

enum class TripleVariant { f1, f2 };

struct TripleParams {
  TripleVariant variant = TripleVariant::f1;
  std::array<Integer, 3> y;
  friend bool operator==(const TripleParams&, const TripleParams&) = default;
};

struct QuadUVParams {
  std::array<Integer, 5> y;
  friend bool operator==(const QuadUVParams&, const QuadUVParams&) = default;
};

struct CarmichaelParams {
  std::array<Integer, 5> y;
  friend bool operator==(const CarmichaelParams&, const CarmichaelParams&) = default;
};

/// y0..y3 and z, with y4 = y1 + y2 + y3 + 2z.
struct QuadParams {
  std::array<Integer, 4> y;
  Integer z;
  friend bool operator==(const QuadParams&, const QuadParams&) = default;
};

/// Nine parameters y0..y8; also the arguments of the sextuple h.
struct SextUVParams {
  std::array<Integer, 9> y;
  friend bool operator==(const SextUVParams&, const SextUVParams&) = default;
};

/// y0..y7 and z, with y8 = y1 + ... + y7 + 2z.
struct SextParams {
  std::array<Integer, 8> y;
  Integer z;
  friend bool operator==(const SextParams&, const SextParams&) = default;
};

struct QuintUVParams {
  Integer y0, z0, z1, z2, z3, z4, z12, z13, z14, z23, z24, z34;
  friend bool operator==(const QuintUVParams&, const QuintUVParams&) = default;
};

/// The fourteen variables of the integer-valued quintuple, plus an explicit
/// overall sign in {-1, +1}.
struct QuintParams {
  Integer sign{1};
  Integer w0, w12, w13, w14, w23, w24, w34, t1, t2, t3, d1, d2, d3, w4;
  friend bool operator==(const QuintParams&, const QuintParams&) = default;
};

struct DescartesParams {
  std::array<Integer, 5> y;
  friend bool operator==(const DescartesParams&, const DescartesParams&) = default;
};

/// u = x_n + x_{n-1}, v = x_n - x_{n-1}.
UVSolution pyth_to_uv(const PythTuple& t);

/// x_{n-1} = (u - v)/2, x_n = (u + v)/2. Throws ParityError when u - v is odd.
PythTuple uv_to_pyth(const UVSolution& w);

PythTuple eval_triple(const TripleParams& p);
UVSolution eval_uv_quadruple(const QuadUVParams& p);
PythTuple eval_quadruple_carmichael(const CarmichaelParams& p);
PythTuple eval_quadruple(const QuadParams& p);
UVSolution eval_uv_sextuple(const SextUVParams& p);
PythTuple eval_sextuple_h(const SextUVParams& p);
PythTuple eval_sextuple(const SextParams& p);
UVSolution eval_uv_quintuple(const QuintUVParams& p);
PythTuple eval_quintuple(const QuintParams& p);
DescartesQuadruple eval_descartes(const DescartesParams& p);

/// y1..y8 of the quintuple family: y_i = z0 z_i for i <= 4, then the skew
/// combinations for y5..y8. Index 0 is unused.
std::array<Integer, 9> quintuple_y(const QuintUVParams& p);

/// The w/t/d substitution producing z0..z34 (sign carried into y0).
QuintUVParams quintuple_substitution(const QuintParams& p);

DescartesQuadruple uv_to_descartes(const UVSolution& w);
UVSolution descartes_to_uv(const DescartesQuadruple& q);

}  // namespace pythag
