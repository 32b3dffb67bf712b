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

#include "pythag/algebra.hpp"

#include <algorithm>
#include <functional>

#include "pythag/errors.hpp"

namespace pythag {

std::ostream& operator<<(std::ostream& os, const GaussianInt& g) {
  return os << '(' << g.re << (g.im < 0 ? "" : "+") << g.im << "i)";
}

Quaternion operator*(const Quaternion& w, const Quaternion& z) {
  return {w[0] * z[0] - w[1] * z[1] - w[2] * z[2] - w[3] * z[3],
          w[0] * z[1] + w[1] * z[0] + w[2] * z[3] - w[3] * z[2],
          w[0] * z[2] - w[1] * z[3] + w[2] * z[0] + w[3] * z[1],
          w[0] * z[3] + w[1] * z[2] - w[2] * z[1] + w[3] * z[0]};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q[0] << ", " << q[1] << "i, " << q[2] << "j, " << q[3] << "k)";
}

GaussMatrix2 operator*(const GaussMatrix2& x, const GaussMatrix2& y) {
  GaussMatrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int col = 0; col < 2; ++col) {
      out.e[2 * r + col] = x.at(r, 0) * y.at(0, col) + x.at(r, 1) * y.at(1, col);
    }
  }
  return out;
}

GaussMatrix2 m2_representation(const Quaternion& w) {
  return {{GaussianInt{w[0], w[1]}, GaussianInt{w[2], w[3]}, GaussianInt{-w[2], w[3]},
           GaussianInt{w[0], -w[1]}}};
}

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd_of(std::span<const Integer> z) {
  Integer g = 0;
  for (const auto& v : z) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::vector<Integer> cofactor_vector(std::span<const Integer> z) {
  std::vector<Integer> p(z.size(), 0);
  Integer g = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    // invariant: p[0..i) . z[0..i) == g
    auto step = ext_gcd(g, z[i]);
    for (std::size_t m = 0; m < i; ++m) p[m] *= step.s;
    p[i] = step.t;
    g = step.g;
  }
  if (g != 1) throw NotUnimodular("cofactor_vector: gcd of entries is " + to_decimal(g));
  return p;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> is_perfect_square(const Integer& n) {
  if (n < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(n);
}

namespace {

// Legendre: n is a sum of three squares unless n = 4^a (8b + 7).
bool is_sum_of_three_squares(Integer n) {
  if (n == 0) return true;
  while (mpz_divisible_ui_p(n.get_mpz_t(), 4) != 0) n /= 4;
  return mpz_fdiv_ui(n.get_mpz_t(), 8) != 7;
}

// Searches the largest term downward; the largest of k squares summing to n
// is at least sqrt(n/k), which bounds the scan.
bool descending_squares(const Integer& n, std::size_t k, std::span<Integer> out) {
  if (k == 1) {
    auto r = is_perfect_square(n);
    if (!r) return false;
    out[0] = *r;
    return true;
  }
  if (k == 3 && !is_sum_of_three_squares(n)) return false;
  for (Integer d = isqrt(n); d >= 0 && d * d * k >= n; --d) {
    if (descending_squares(n - d * d, k - 1, out.subspan(1))) {
      out[0] = d;
      return true;
    }
  }
  return false;
}

}  // namespace

std::array<Integer, 4> four_squares(const Integer& n) {
  if (n < 0) throw NegativeInput("four_squares: negative input " + to_decimal(n));
  std::array<Integer, 4> d;
  if (!descending_squares(n, 4, d)) {
    throw InternalDefect("four_squares: no decomposition found for " + to_decimal(n));
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace pythag
