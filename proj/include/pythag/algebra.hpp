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
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "pythag/integer.hpp"

namespace pythag {

/// Element re + im*i of the Gaussian integers.
struct GaussianInt {
  static constexpr std::size_t kDim = 2;

  Integer re;
  Integer im;

  GaussianInt() = default;
  GaussianInt(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}

  static GaussianInt one() { return {1, 0}; }
  static GaussianInt basis(std::size_t m) { return m == 0 ? GaussianInt{1, 0} : GaussianInt{0, 1}; }

  Integer& operator[](std::size_t m) { return m == 0 ? re : im; }
  const Integer& operator[](std::size_t m) const { return m == 0 ? re : im; }

  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInt operator*(const Integer& s, const GaussianInt& a) {
    return {s * a.re, s * a.im};
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussianInt& g);
};

inline GaussianInt conj(const GaussianInt& g) { return {g.re, -g.im}; }
inline Integer norm(const GaussianInt& g) { return g.re * g.re + g.im * g.im; }

/// Lipschitz quaternion a + b*i + c*j + d*k with i^2 = j^2 = -1, ji = -ij, k = ij.
struct Quaternion {
  static constexpr std::size_t kDim = 4;

  std::array<Integer, 4> c;

  Quaternion() = default;
  Quaternion(Integer a, Integer b = 0, Integer cc = 0, Integer d = 0)
      : c{std::move(a), std::move(b), std::move(cc), std::move(d)} {}

  static Quaternion one() { return {1}; }
  static Quaternion basis(std::size_t m) {
    Quaternion q;
    q.c[m] = 1;
    return q;
  }

  Integer& operator[](std::size_t m) { return c[m]; }
  const Integer& operator[](std::size_t m) const { return c[m]; }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c == b.c; }
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
  }
  friend Quaternion operator-(const Quaternion& a) { return {-a[0], -a[1], -a[2], -a[3]}; }
  friend Quaternion operator*(const Quaternion& w, const Quaternion& z);
  friend Quaternion operator*(const Integer& s, const Quaternion& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
  }
  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q);
};

/// The involution a+bi+cj+dk -> a-bi-cj-dk, an anti-automorphism.
inline Quaternion conj(const Quaternion& q) { return {q[0], -q[1], -q[2], -q[3]}; }

/// a^2 + b^2 + c^2 + d^2, which equals conj(q)*q.
inline Integer norm(const Quaternion& q) {
  return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
}

/// 2x2 matrix over the Gaussian integers, row-major.
struct GaussMatrix2 {
  std::array<GaussianInt, 4> e;

  const GaussianInt& at(int r, int col) const { return e[2 * r + col]; }

  static GaussMatrix2 identity() { return {{GaussianInt{1}, GaussianInt{0}, GaussianInt{0}, GaussianInt{1}}}; }

  friend bool operator==(const GaussMatrix2&, const GaussMatrix2&) = default;
  friend GaussMatrix2 operator*(const GaussMatrix2& x, const GaussMatrix2& y);
};

inline GaussianInt det(const GaussMatrix2& m) {
  return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

/// Embeds a+bi+cj+dk as [[a+bi, c+di], [-c+di, a-bi]]. A ring homomorphism
/// with det equal to the reduced norm.
GaussMatrix2 m2_representation(const Quaternion& w);

struct ExtGcd {
  Integer g;  ///< gcd(a, b) >= 0
  Integer s;
  Integer t;  ///< s*a + t*b == g
};

/// Extended Euclid. gcd(0, 0) is 0 with s = t = 0.
ExtGcd ext_gcd(const Integer& a, const Integer& b);

/// Nonnegative gcd of all entries; 0 for an empty or all-zero vector.
Integer gcd_of(std::span<const Integer> z);

/// Returns p with p . z == 1, folding ext_gcd left to right.
/// Throws NotUnimodular when gcd(z) != 1.
std::vector<Integer> cofactor_vector(std::span<const Integer> z);

/// d1^2 + d2^2 + d3^2 + d4^2 == n with d1 >= d2 >= d3 >= d4 >= 0, taking d1
/// as large as possible at each level. Throws NegativeInput for n < 0.
std::array<Integer, 4> four_squares(const Integer& n);

/// The nonnegative root of n if n is a perfect square.
std::optional<Integer> is_perfect_square(const Integer& n);

Integer isqrt(const Integer& n);

}  // namespace pythag
