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

#include "pythag/descent.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "pythag/errors.hpp"

namespace pythag {

UVSolution UVSolution::make(std::vector<Integer> xs, Integer u, Integer v) {
  UVSolution w{std::move(xs), std::move(u), std::move(v)};
  if (!w.holds()) {
    std::ostringstream os;
    os << "not a solution of x_1^2 + ... + x_k^2 = uv: " << w;
    throw InvariantViolation(os.str());
  }
  return w;
}

bool UVSolution::holds() const {
  Integer s = 0;
  for (const auto& x : xs) s += x * x;
  return s == u * v;
}

bool UVSolution::is_zero() const {
  if (u != 0 || v != 0) return false;
  for (const auto& x : xs) {
    if (x != 0) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const UVSolution& w) {
  os << "(x=(";
  for (std::size_t m = 0; m < w.xs.size(); ++m) os << (m ? "," : "") << w.xs[m];
  return os << "), u=" << w.u << ", v=" << w.v << ')';
}

UVSolution RankOneGaussian::reconstruct() const {
  GaussianInt x = c * (conj(a) * b);
  return {{x.re, x.im}, c * norm(a), c * norm(b)};
}

UVSolution RankOneQuaternion::reconstruct() const {
  Quaternion x = c * (conj(b) * a);
  return {{x[0], x[1], x[2], x[3]}, c * norm(a), c * norm(b)};
}

namespace {

template <class Elem>
struct RankOne {
  Integer c;
  Elem a;
  Elem b;
};

template <class Elem>
Integer dot(const Elem& p, const Elem& q) {
  Integer s = 0;
  for (std::size_t m = 0; m < Elem::kDim; ++m) s += p[m] * q[m];
  return s;
}

// Residue of x modulo m > 0 in (-m/2, m/2].
Integer centered_residue(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

// Descent on the Hermitian matrix H = [[u, y], [y*, v]] with u v = y* y.
// Returns (c, a, b) with u = c a*a, y = c a*b, v = c b*b.
//
// G is kept so that H_original = G* H_current G. Each step applies
// H <- h* H h and G <- h^-1 G, for h an elementary matrix E12(lambda) or the
// row swap.
template <class Elem>
RankOne<Elem> descend(Integer u, Integer v, Elem y, DescentTrace* trace) {
  if (u == 0 && v == 0 && y.is_zero()) return {0, Elem::one(), Elem{}};

  Integer content = gcd(u, v);
  for (std::size_t m = 0; m < Elem::kDim; ++m) content = gcd(content, y[m]);
  Integer c = content;
  u /= content;
  v /= content;
  for (std::size_t m = 0; m < Elem::kDim; ++m) y[m] /= content;
  if (u < 0 || v < 0) {
    c = -c;
    u = -u;
    v = -v;
    y = -y;
  }

  Elem g00 = Elem::one(), g01{}, g10{}, g11 = Elem::one();
  auto swap_rows = [&] {
    std::swap(u, v);
    y = conj(y);
    std::swap(g00, g10);
    std::swap(g01, g11);
  };

  if (u == 0) swap_rows();
  for (;;) {
    if (trace) trace->u_per_round.push_back(u);
    Elem lambda;
    bool moved = false;
    for (std::size_t m = 0; m < Elem::kDim; ++m) {
      Integer target = centered_residue(y[m], u);
      if (target != y[m]) {
        lambda[m] = (target - y[m]) / u;
        moved = true;
      }
    }
    if (moved) {
      v += u * norm(lambda) + 2 * dot(lambda, y);
      y = y + u * lambda;
      g00 = g00 - lambda * g10;
      g01 = g01 - lambda * g11;
    }
    if (v == 0) {
      if (u != 1 || !y.is_zero()) throw InternalDefect("descent: diagonal terminal is not diag(1, 0)");
      return {c, g00, g01};
    }
    if constexpr (Elem::kDim == 4) {
      if (v == u) {
        // |y_m| = u/2 for every m; primitivity forces u = 2 and the
        // half-open residue choice forces y = 1 + i + j + k.
        if (u != 2 || !(y == Elem{1, 1, 1, 1})) {
          throw InternalDefect("descent: equality terminal is not [[2, 1+i+j+k], [.., 2]]");
        }
        if (trace) trace->special_terminal = true;
        const Elem a0{1, -1, 0, 0};
        const Elem b0{1, 0, 1, 0};
        return {c, a0 * g00 + b0 * g10, a0 * g01 + b0 * g11};
      }
    }
    if (v > u) throw InternalDefect("descent: |v| did not drop below |u|");
    swap_rows();
  }
}

}  // namespace

RankOneGaussian decompose_gaussian(const UVSolution& w, DescentTrace* trace) {
  if (w.k() != 2) throw InvariantViolation("decompose_gaussian: expected k = 2");
  if (!w.holds()) (void)UVSolution::make(w.xs, w.u, w.v);
  auto r = descend<GaussianInt>(w.u, w.v, GaussianInt{w.xs[0], w.xs[1]}, trace);
  RankOneGaussian out{r.c, r.a, r.b};
  if (!(out.reconstruct() == w)) throw InternalDefect("decompose_gaussian: reconstruction mismatch");
  return out;
}

RankOneQuaternion decompose_quaternion(const UVSolution& w, DescentTrace* trace) {
  if (w.k() != 4) throw InvariantViolation("decompose_quaternion: expected k = 4");
  if (!w.holds()) (void)UVSolution::make(w.xs, w.u, w.v);
  // The descent works with the top-right entry c a* b; the coordinate
  // formulas read x as c b* a, its conjugate.
  Quaternion y{w.xs[0], -w.xs[1], -w.xs[2], -w.xs[3]};
  auto r = descend<Quaternion>(w.u, w.v, std::move(y), trace);
  RankOneQuaternion out{r.c, r.a, r.b};
  if (!(out.reconstruct() == w)) throw InternalDefect("decompose_quaternion: reconstruction mismatch");
  return out;
}

RankOneGaussian normalize_odd(RankOneGaussian r) {
  if (r.c == 0) return {0, GaussianInt::one(), GaussianInt{}};
  const GaussianInt one_plus_i{1, 1};
  while (is_even(r.c)) {
    r.c /= 2;
    r.a = one_plus_i * r.a;
    r.b = one_plus_i * r.b;
  }
  return r;
}

RankOneQuaternion normalize_unit(RankOneQuaternion r) {
  if (r.c == 0) return {0, Quaternion::one(), Quaternion{}};
  Integer magnitude = abs(r.c);
  if (magnitude == 1) return r;
  auto sq = four_squares(magnitude);
  Quaternion d{sq[0], sq[1], sq[2], sq[3]};
  return {sign(r.c), d * r.a, d * r.b};
}

}  // namespace pythag
