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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pythag {

/// Signed integer of unbounded magnitude.
using Integer = mpz_class;

/// Parses an optionally signed decimal integer. Throws ParseError.
Integer parse_integer(std::string_view text);

inline std::string to_decimal(const Integer& n) { return n.get_str(10); }

inline int sign(const Integer& n) { return sgn(n); }

inline bool is_even(const Integer& n) { return mpz_even_p(n.get_mpz_t()) != 0; }
inline bool is_odd(const Integer& n) { return !is_even(n); }

/// Exact quotient; throws InternalDefect when `divisor` does not divide `n`.
Integer exact_div(const Integer& n, const Integer& divisor, const char* what);

/// Exact halving; throws InternalDefect when `n` is odd.
Integer half(const Integer& n, const char* what);

}  // namespace pythag
