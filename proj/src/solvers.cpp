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

#include "pythag/solvers.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "pythag/descent.hpp"
#include "pythag/errors.hpp"

namespace pythag {

namespace {

template <class P, class T, class Eval>
P verified(P params, const T& target, Eval eval, const char* family) {
  if (!(eval(params) == target)) {
    std::ostringstream os;
    os << family << ": solver output does not reproduce " << target;
    throw InternalDefect(os.str());
  }
  return params;
}

void require_arity(const PythTuple& t, std::size_t n, const char* family) {
  if (t.n() != n) {
    throw InvariantViolation(std::string(family) + ": expected " + std::to_string(n) + " entries, got " +
                             std::to_string(t.n()));
  }
  if (!t.holds()) (void)PythTuple::make(t.x);
}

void require_k(const UVSolution& w, std::size_t k, const char* family) {
  if (w.k() != k) {
    throw InvariantViolation(std::string(family) + ": expected " + std::to_string(k) + " squares, got " +
                             std::to_string(w.k()));
  }
  if (!w.holds()) (void)UVSolution::make(w.xs, w.u, w.v);
}

int parity(const Integer& n) { return is_odd(n) ? 1 : 0; }

// Pieces of a uv3 solution before the skew coefficients are fixed, kept so
// the quintuple solver can redo the completion with another cofactor.
struct QuintBasis {
  Integer y0;
  Integer z0;
  std::array<Integer, 4> z;
  std::array<Integer, 4> s;
  std::array<Integer, 4> p;
};

QuintUVParams assemble(const QuintBasis& b, const SkewCompletion& k) {
  return {b.y0, b.z0, b.z[0], b.z[1], b.z[2], b.z[3], k.z12, k.z13, k.z14, k.z23, k.z24, k.z34};
}

std::optional<QuintBasis> quint_basis(const UVSolution& w) {
  if (w.is_zero()) return std::nullopt;
  UVSolution lifted{{w.xs[0], w.xs[1], w.xs[2], Integer(0)}, w.u, w.v};
  const auto y = solve_uv_sextuple(lifted).y;
  if (-y[1] * y[8] + y[2] * y[7] - y[3] * y[6] + y[4] * y[5] != 0) {
    throw InternalDefect("solve_uv_quintuple: sextuple parameters violate the x4 = 0 relation");
  }

  QuintBasis b;
  b.y0 = y[0];
  b.s = {-y[8], y[7], -y[6], y[5]};
  std::array<Integer, 4> upper{y[1], y[2], y[3], y[4]};
  Integer g = gcd_of(upper);
  if (g != 0) {
    for (const auto& yi : upper) {
      if (yi != 0) {
        b.z0 = yi < 0 ? Integer(-g) : g;
        break;
      }
    }
    for (std::size_t i = 0; i < 4; ++i) b.z[i] = upper[i] / b.z0;
  } else {
    // a = 0 forces u = 0 and x = 0; any unimodular z orthogonal to s works.
    b.z0 = 0;
    std::array<Integer, 4> perp{b.s[1], -b.s[0], b.s[3], -b.s[2]};
    Integer h = gcd_of(perp);
    if (h == 0) {
      b.z = {1, 0, 0, 0};
    } else {
      for (std::size_t i = 0; i < 4; ++i) b.z[i] = perp[i] / h;
    }
  }
  auto p = cofactor_vector(b.z);
  for (std::size_t i = 0; i < 4; ++i) b.p[i] = p[i];
  return b;
}

struct Row {
  std::array<int, 3> t;
  std::array<int, 3> delta;
};

// z_i = w4 + 2 d_i + delta_i in each row of the substitution.
constexpr std::array<Row, 8> kRows{{
    {{0, 0, 0}, {0, 0, 0}},
    {{0, 0, 1}, {1, 1, 1}},
    {{0, 1, 0}, {0, 0, 1}},
    {{1, 0, 0}, {0, 1, 0}},
    {{0, 1, 1}, {1, 0, 0}},
    {{1, 0, 1}, {1, 1, 0}},
    {{1, 1, 0}, {1, 0, 1}},
    {{1, 1, 1}, {0, 1, 1}},
}};

// Inverts the substitution row for z. Empty when the row's evenness
// condition fails.
std::optional<QuintParams> invert_row(const QuintUVParams& z, QuintSolveInfo* info) {
  std::array<int, 3> delta{parity(z.z1 - z.z4), parity(z.z2 - z.z4), parity(z.z3 - z.z4)};
  const auto t = quintuple_row_for(delta);

  QuintParams q;
  q.sign = z.y0;
  q.t1 = t[0];
  q.t2 = t[1];
  q.t3 = t[2];
  q.w4 = z.z4;
  q.d1 = (z.z1 - z.z4 - delta[0]) / 2;
  q.d2 = (z.z2 - z.z4 - delta[1]) / 2;
  q.d3 = (z.z3 - z.z4 - delta[2]) / 2;
  q.w0 = z.z0;
  q.w12 = z.z12;
  q.w13 = z.z13;
  q.w14 = z.z14;
  q.w23 = z.z23;
  q.w24 = z.z24;
  q.w34 = z.z34;

  auto halve_into = [](Integer& slot, const Integer& numer) {
    if (is_odd(numer)) return false;
    slot = numer / 2;
    return true;
  };
  bool ok = true;
  const int code = t[0] * 4 + t[1] * 2 + t[2];
  switch (code) {
    case 0b000: break;
    case 0b001: ok = halve_into(q.w0, z.z0 - z.z14 - z.z24 - z.z34); break;
    case 0b010: ok = halve_into(q.w0, z.z0 - z.z13 - z.z23 - z.z34); break;
    case 0b100: ok = halve_into(q.w0, z.z0 - z.z12 - z.z23 - z.z24); break;
    case 0b011: ok = halve_into(q.w0, z.z0 - z.z12 - z.z13 - z.z14); break;
    case 0b101: ok = halve_into(q.w13, z.z13 - z.z23 - z.z24 - z.z14); break;
    case 0b110: ok = halve_into(q.w12, z.z12 - z.z23 - z.z14 - z.z34); break;
    case 0b111: ok = halve_into(q.w24, z.z24 - z.z12 - z.z13 - z.z34); break;
    default: throw InternalDefect("invert_row: bad row code");
  }
  if (!ok) return std::nullopt;
  if (info) info->row = code;
  return q;
}

}  // namespace

std::array<int, 3> quintuple_row_for(const std::array<int, 3>& delta) {
  for (const auto& row : kRows) {
    if (row.delta == delta) return row.t;
  }
  throw InternalDefect("quintuple_row_for: parity pattern outside {0,1}^3");
}

std::array<Integer, 4> SkewCompletion::apply(std::span<const Integer, 4> z) const {
  return {z12 * z[1] + z13 * z[2] + z14 * z[3], -z12 * z[0] + z23 * z[2] + z24 * z[3],
          -z13 * z[0] - z23 * z[1] + z34 * z[3], -z14 * z[0] - z24 * z[1] - z34 * z[2]};
}

SkewCompletion skew_complete(std::span<const Integer, 4> z, std::span<const Integer, 4> s,
                             std::span<const Integer, 4> p) {
  Integer pz = 0;
  Integer sz = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    pz += p[i] * z[i];
    sz += s[i] * z[i];
  }
  if (pz != 1) throw NotUnimodular("skew_complete: cofactor does not satisfy p . z = 1");
  if (sz != 0) throw NotOrthogonal("skew_complete: s . z = " + to_decimal(sz));
  // The skew matrix s p^T - p s^T sends z to s (p . z) - p (s . z) = s.
  auto entry = [&](int i, int j) { return Integer(s[i] * p[j] - p[i] * s[j]); };
  return {entry(0, 1), entry(0, 2), entry(0, 3), entry(1, 2), entry(1, 3), entry(2, 3)};
}

SkewCompletion skew_complete(std::span<const Integer, 4> z, std::span<const Integer, 4> s) {
  auto p = cofactor_vector(z);
  std::array<Integer, 4> pa{p[0], p[1], p[2], p[3]};
  return skew_complete(z, s, pa);
}

TripleParams solve_triple(const PythTuple& t) {
  require_arity(t, 3, "solve_triple");
  TripleParams out;
  out.y = {0, 0, 0};
  if (t.x[2] == 0) return out;  // forces the zero triple

  Integer g = gcd_of(t.x);
  Integer y0 = t.x[2] < 0 ? Integer(-g) : g;
  const Integer a = t.x[0] / y0;
  const Integer b = t.x[1] / y0;
  const Integer c = t.x[2] / y0;  // primitive, c > 0, exactly one leg odd

  auto try_variant = [&](TripleVariant variant, const Integer& even, const Integer& odd) -> bool {
    auto r1 = is_perfect_square((c + odd) / 2);
    auto r2 = is_perfect_square((c - odd) / 2);
    if (is_even(c + odd) && r1 && r2) {
      Integer y2 = (2 * *r1 * *r2 == even) ? *r2 : Integer(-*r2);
      out.variant = variant;
      out.y = {y0, *r1, y2};
      return eval_triple(out) == t;
    }
    return false;
  };
  if (try_variant(TripleVariant::f1, a, b) || try_variant(TripleVariant::f2, b, a)) return out;

  // Bounded search over |y_i| <= |x3|.
  const Integer box = abs(t.x[2]);
  for (auto variant : {TripleVariant::f1, TripleVariant::f2}) {
    for (Integer s0 = -box; s0 <= box; ++s0) {
      for (Integer s1 = -box; s1 <= box; ++s1) {
        for (Integer s2 = -box; s2 <= box; ++s2) {
          TripleParams cand{variant, {s0, s1, s2}};
          if (eval_triple(cand) == t) return cand;
        }
      }
    }
  }
  throw InternalDefect("solve_triple: no parameters found");
}

QuadUVParams solve_uv_quadruple(const UVSolution& w) {
  require_k(w, 2, "solve_uv_quadruple");
  QuadUVParams out;
  out.y = {0, 0, 0, 0, 0};
  if (w.is_zero()) return out;
  auto r = normalize_odd(decompose_gaussian(w));
  out.y = {r.c, r.a.re, r.a.im, r.b.re, r.b.im};
  return verified(out, w, eval_uv_quadruple, "solve_uv_quadruple");
}

QuadParams solve_quadruple(const PythTuple& t) {
  require_arity(t, 4, "solve_quadruple");
  const auto y = solve_uv_quadruple(pyth_to_uv(t)).y;
  QuadParams out{{y[0], y[1], y[2], y[3]}, half(y[4] - y[1] - y[2] - y[3], "solve_quadruple z")};
  return verified(out, t, eval_quadruple, "solve_quadruple");
}

SextUVParams solve_uv_sextuple(const UVSolution& w) {
  require_k(w, 4, "solve_uv_sextuple");
  SextUVParams out;
  out.y.fill(0);
  if (w.is_zero()) return out;
  auto r = normalize_unit(decompose_quaternion(w));
  out.y = {r.c, r.a[0], r.a[1], r.a[2], r.a[3], r.b[0], r.b[1], r.b[2], r.b[3]};
  return verified(out, w, eval_uv_sextuple, "solve_uv_sextuple");
}

SextParams solve_sextuple(const PythTuple& t) {
  require_arity(t, 6, "solve_sextuple");
  const auto y = solve_uv_sextuple(pyth_to_uv(t)).y;
  SextParams out;
  Integer partial = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    out.y[i] = y[i];
    if (i >= 1) partial += y[i];
  }
  out.z = half(y[8] - partial, "solve_sextuple z");
  return verified(out, t, eval_sextuple, "solve_sextuple");
}

QuintUVParams solve_uv_quintuple(const UVSolution& w) {
  require_k(w, 3, "solve_uv_quintuple");
  auto basis = quint_basis(w);
  if (!basis) return QuintUVParams{};
  auto out = assemble(*basis, skew_complete(basis->z, basis->s, basis->p));
  return verified(out, w, eval_uv_quintuple, "solve_uv_quintuple");
}

QuintParams solve_quintuple(const PythTuple& t, QuintSolveInfo* info) {
  require_arity(t, 5, "solve_quintuple");
  auto basis = quint_basis(pyth_to_uv(t));
  if (!basis) {
    if (info) *info = QuintSolveInfo{};
    return QuintParams{};
  }

  // Repair moves: p + q with q = z_j e_i - z_i e_j keeps p . z = 1 and
  // shifts the parities of the skew coefficients.
  std::vector<std::array<Integer, 4>> cofactors{basis->p};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int dir : {1, -1}) {
        auto p = basis->p;
        p[i] += dir * basis->z[j];
        p[j] -= dir * basis->z[i];
        cofactors.push_back(p);
      }
    }
  }

  for (std::size_t attempt = 0; attempt < cofactors.size(); ++attempt) {
    auto z = assemble(*basis, skew_complete(basis->z, basis->s, cofactors[attempt]));
    if (auto q = invert_row(z, info)) {
      if (info) info->repairs_used = static_cast<int>(attempt);
      return verified(*q, t, eval_quintuple, "solve_quintuple");
    }
  }
  std::ostringstream os;
  os << "solve_quintuple: no substitution row reaches " << t << " (z0=" << basis->z0 << ", z=(" << basis->z[0]
     << ',' << basis->z[1] << ',' << basis->z[2] << ',' << basis->z[3] << "), " << cofactors.size()
     << " cofactors tried)";
  throw UnreachableParams(os.str());
}

DescartesParams solve_descartes(const DescartesQuadruple& q) {
  if (!q.holds()) (void)DescartesQuadruple::make(q.b1, q.b2, q.b3, q.b4);
  DescartesParams out{solve_uv_quadruple(descartes_to_uv(q)).y};
  return verified(out, q, eval_descartes, "solve_descartes");
}

}  // namespace pythag
