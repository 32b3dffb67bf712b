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

#include "pythag/families.hpp"

#include <sstream>
#include <utility>

#include "pythag/errors.hpp"

namespace pythag {

namespace {

Integer sum_of_squares(std::span<const Integer> xs) {
  Integer s = 0;
  for (const auto& x : xs) s += x * x;
  return s;
}

template <class T>
T checked(T value, const char* family) {
  if (!value.holds()) {
    std::ostringstream os;
    os << family << ": output violates its defining equation: " << value;
    throw InternalDefect(os.str());
  }
  return value;
}

// Bilinear forms of c b* a for a = y1 + y2 i + y3 j + y4 k, b = y5 + ... + y8 k.
std::array<Integer, 4> quaternion_cross(const std::array<Integer, 9>& y) {
  return {y[1] * y[5] + y[2] * y[6] + y[3] * y[7] + y[4] * y[8],
          -y[1] * y[6] + y[2] * y[5] + y[3] * y[8] - y[4] * y[7],
          -y[1] * y[7] - y[2] * y[8] + y[3] * y[5] + y[4] * y[6],
          -y[1] * y[8] + y[2] * y[7] - y[3] * y[6] + y[4] * y[5]};
}

Integer upper_norm(const std::array<Integer, 9>& y) {
  return y[1] * y[1] + y[2] * y[2] + y[3] * y[3] + y[4] * y[4];
}

Integer lower_norm(const std::array<Integer, 9>& y) {
  return y[5] * y[5] + y[6] * y[6] + y[7] * y[7] + y[8] * y[8];
}

}  // namespace

PythTuple PythTuple::make(std::vector<Integer> x) {
  PythTuple t{std::move(x)};
  if (t.n() < 3) throw InvariantViolation("Pythagorean tuple needs at least 3 entries");
  if (!t.holds()) {
    std::ostringstream os;
    os << "not a Pythagorean tuple: " << t;
    throw InvariantViolation(os.str());
  }
  return t;
}

bool PythTuple::holds() const {
  if (x.empty()) return false;
  return sum_of_squares(std::span(x).first(x.size() - 1)) == x.back() * x.back();
}

std::ostream& operator<<(std::ostream& os, const PythTuple& t) {
  os << '(';
  for (std::size_t m = 0; m < t.x.size(); ++m) os << (m ? "," : "") << t.x[m];
  return os << ')';
}

DescartesQuadruple DescartesQuadruple::make(Integer b1, Integer b2, Integer b3, Integer b4) {
  DescartesQuadruple q{std::move(b1), std::move(b2), std::move(b3), std::move(b4)};
  if (!q.holds()) {
    std::ostringstream os;
    os << "not a Descartes quadruple: " << q;
    throw InvariantViolation(os.str());
  }
  return q;
}

bool DescartesQuadruple::holds() const {
  Integer s = b1 + b2 + b3 + b4;
  return 2 * (b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4) == s * s;
}

std::ostream& operator<<(std::ostream& os, const DescartesQuadruple& q) {
  return os << '(' << q.b1 << ',' << q.b2 << ',' << q.b3 << ',' << q.b4 << ')';
}

UVSolution pyth_to_uv(const PythTuple& t) {
  if (!t.holds() || t.n() < 3) (void)PythTuple::make(t.x);
  const std::size_t n = t.n();
  std::vector<Integer> xs(t.x.begin(), t.x.end() - 2);
  return {std::move(xs), t.x[n - 1] + t.x[n - 2], t.x[n - 1] - t.x[n - 2]};
}

PythTuple uv_to_pyth(const UVSolution& w) {
  if (!w.holds()) (void)UVSolution::make(w.xs, w.u, w.v);
  if (is_odd(w.u - w.v)) {
    std::ostringstream os;
    os << "u - v is odd in " << w;
    throw ParityError(os.str());
  }
  std::vector<Integer> x = w.xs;
  x.push_back((w.u - w.v) / 2);
  x.push_back((w.u + w.v) / 2);
  return checked(PythTuple{std::move(x)}, "uv_to_pyth");
}

PythTuple eval_triple(const TripleParams& p) {
  const auto& [y0, y1, y2] = p.y;
  Integer even_leg = y0 * 2 * y1 * y2;
  Integer odd_leg = y0 * (y1 * y1 - y2 * y2);
  Integer hyp = y0 * (y1 * y1 + y2 * y2);
  if (p.variant == TripleVariant::f1) {
    return checked(PythTuple{{even_leg, odd_leg, hyp}}, "triple");
  }
  return checked(PythTuple{{odd_leg, even_leg, hyp}}, "triple");
}

UVSolution eval_uv_quadruple(const QuadUVParams& p) {
  const auto& [y0, y1, y2, y3, y4] = p.y;
  return checked(UVSolution{{y0 * (y1 * y3 + y2 * y4), y0 * (y1 * y4 - y2 * y3)},
                            y0 * (y1 * y1 + y2 * y2),
                            y0 * (y3 * y3 + y4 * y4)},
                 "uv2");
}

PythTuple eval_quadruple_carmichael(const CarmichaelParams& p) {
  const auto& [y0, y1, y2, y3, y4] = p.y;
  Integer lo = y1 * y1 + y2 * y2;
  Integer hi = y3 * y3 + y4 * y4;
  return checked(PythTuple{{y0 * (2 * y1 * y3 + 2 * y2 * y4), y0 * (2 * y1 * y4 - 2 * y2 * y3),
                            y0 * (lo - hi), y0 * (lo + hi)}},
                 "carmichael");
}

PythTuple eval_quadruple(const QuadParams& p) {
  const auto& [y0, y1, y2, y3] = p.y;
  const Integer y4 = y1 + y2 + y3 + 2 * p.z;
  Integer lo = y1 * y1 + y2 * y2;
  Integer hi = y3 * y3 + y4 * y4;
  return checked(PythTuple{{y0 * (y1 * y3 + y2 * y4), y0 * (y1 * y4 - y2 * y3),
                            y0 * half(lo - hi, "quadruple x3"), y0 * half(lo + hi, "quadruple x4")}},
                 "quadruple");
}

UVSolution eval_uv_sextuple(const SextUVParams& p) {
  const auto& y = p.y;
  auto x = quaternion_cross(y);
  for (auto& xm : x) xm *= y[0];
  return checked(UVSolution{{x[0], x[1], x[2], x[3]}, y[0] * upper_norm(y), y[0] * lower_norm(y)}, "uv4");
}

PythTuple eval_sextuple_h(const SextUVParams& p) {
  const auto& y = p.y;
  auto x = quaternion_cross(y);
  Integer lo = upper_norm(y);
  Integer hi = lower_norm(y);
  return checked(PythTuple{{2 * y[0] * x[0], 2 * y[0] * x[1], 2 * y[0] * x[2], 2 * y[0] * x[3],
                            y[0] * (lo - hi), y[0] * (lo + hi)}},
                 "sextuple_h");
}

PythTuple eval_sextuple(const SextParams& p) {
  std::array<Integer, 9> y;
  Integer partial = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    y[i] = p.y[i];
    if (i >= 1) partial += p.y[i];
  }
  y[8] = partial + 2 * p.z;
  auto x = quaternion_cross(y);
  Integer lo = upper_norm(y);
  Integer hi = lower_norm(y);
  return checked(PythTuple{{y[0] * x[0], y[0] * x[1], y[0] * x[2], y[0] * x[3],
                            y[0] * half(lo - hi, "sextuple x5"), y[0] * half(lo + hi, "sextuple x6")}},
                 "sextuple");
}

std::array<Integer, 9> quintuple_y(const QuintUVParams& p) {
  return {p.y0,
          p.z0 * p.z1,
          p.z0 * p.z2,
          p.z0 * p.z3,
          p.z0 * p.z4,
          -p.z14 * p.z1 - p.z24 * p.z2 - p.z34 * p.z3,
          p.z13 * p.z1 + p.z23 * p.z2 - p.z34 * p.z4,
          -p.z12 * p.z1 + p.z23 * p.z3 + p.z24 * p.z4,
          -p.z12 * p.z2 - p.z13 * p.z3 - p.z14 * p.z4};
}

UVSolution eval_uv_quintuple(const QuintUVParams& p) {
  auto y = quintuple_y(p);
  auto x = quaternion_cross(y);
  if (x[3] != 0) throw InternalDefect("uv3: skew substitution left a nonzero x4");
  return checked(UVSolution{{p.y0 * x[0], p.y0 * x[1], p.y0 * x[2]}, p.y0 * upper_norm(y),
                            p.y0 * lower_norm(y)},
                 "uv3");
}

QuintUVParams quintuple_substitution(const QuintParams& p) {
  const Integer& w0 = p.w0;
  const Integer& w12 = p.w12;
  const Integer& w13 = p.w13;
  const Integer& w14 = p.w14;
  const Integer& w23 = p.w23;
  const Integer& w24 = p.w24;
  const Integer& w34 = p.w34;
  const Integer& t1 = p.t1;
  const Integer& t2 = p.t2;
  const Integer& t3 = p.t3;
  const Integer t12 = t1 * t2;
  const Integer t13 = t1 * t3;
  const Integer t23 = t2 * t3;
  const Integer t123 = t12 * t3;

  QuintUVParams z;
  z.y0 = p.sign;
  z.z0 = w0 + t1 * w0 + t2 * w0 - 2 * t12 * w0 + t3 * w0 - 2 * t13 * w0 - t23 * w0 + 2 * t123 * w0 +
         t1 * w12 - t12 * w12 - t13 * w12 + t23 * w12 + t2 * w13 - t12 * w13 + t3 * w14 - t13 * w14 +
         t1 * w23 + t2 * w23 - 2 * t12 * w23 - t13 * w23 - t23 * w23 + 2 * t123 * w23 + t1 * w24 -
         t12 * w24 + t3 * w24 - 2 * t13 * w24 - t23 * w24 + 2 * t123 * w24 + t2 * w34 - t12 * w34 +
         t3 * w34 - t13 * w34 - 2 * t23 * w34 + 2 * t123 * w34;
  z.z1 = 2 * p.d1 + t12 + t3 - 2 * t123 + p.w4;
  z.z2 = 2 * p.d2 + t1 - t12 + t3 - t13 - t23 + 2 * t123 + p.w4;
  z.z3 = 2 * p.d3 + t2 + t3 - t13 - 2 * t23 + 2 * t123 + p.w4;
  z.z4 = p.w4;
  z.z12 = w12 + t12 * w12 - t123 * w12 + t12 * w14 - t123 * w14 + t12 * w23 - t123 * w23 + t12 * w34 -
          t123 * w34;
  z.z13 = w13 + t13 * w13 - t123 * w13 + t13 * w14 - t123 * w14 + t13 * w23 - t123 * w23 + t13 * w24 -
          t123 * w24;
  z.z14 = w14;
  z.z23 = w23;
  z.z24 = t123 * w12 + t123 * w13 + w24 + t123 * w24 + t123 * w34;
  z.z34 = w34;
  return z;
}

PythTuple eval_quintuple(const QuintParams& p) {
  if (p.sign != 1 && p.sign != -1) throw InvariantViolation("quintuple: sign must be -1 or +1");
  auto y = quintuple_y(quintuple_substitution(p));
  auto x = quaternion_cross(y);
  if (x[3] != 0) throw InternalDefect("quintuple: skew substitution left a nonzero x4");
  Integer lo = upper_norm(y);
  Integer hi = lower_norm(y);
  const Integer& s = p.sign;
  return checked(PythTuple{{s * x[0], s * x[1], s * x[2], s * half(lo - hi, "quintuple f5"),
                            s * half(lo + hi, "quintuple f6")}},
                 "quintuple");
}

DescartesQuadruple eval_descartes(const DescartesParams& p) {
  const auto& [y0, y1, y2, y3, y4] = p.y;
  const Integer cross = y1 * y4 - y2 * y3;
  const Integer lo = y1 * y1 + y2 * y2;
  const Integer hi = y3 * y3 + y4 * y4;
  return checked(DescartesQuadruple{y0 * (lo + hi - 2 * y1 * y3 - 2 * y2 * y4 + cross), y0 * (lo + cross),
                                    y0 * (hi + cross), y0 * (-y1 * y4 + y2 * y3)},
                 "descartes");
}

DescartesQuadruple uv_to_descartes(const UVSolution& w) {
  if (w.k() != 2) throw InvariantViolation("uv_to_descartes: expected k = 2");
  if (!w.holds()) (void)UVSolution::make(w.xs, w.u, w.v);
  const Integer& x1 = w.xs[0];
  const Integer& x2 = w.xs[1];
  return checked(DescartesQuadruple{w.u + w.v - 2 * x1 + x2, w.u + x2, w.v + x2, -x2}, "uv_to_descartes");
}

UVSolution descartes_to_uv(const DescartesQuadruple& q) {
  if (!q.holds()) (void)DescartesQuadruple::make(q.b1, q.b2, q.b3, q.b4);
  return checked(UVSolution{{half(-q.b1 + q.b2 + q.b3 + q.b4, "descartes_to_uv x1"), -q.b4}, q.b2 + q.b4,
                            q.b3 + q.b4},
                 "descartes_to_uv");
}

}  // namespace pythag
