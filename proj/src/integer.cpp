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

#include "pythag/integer.hpp"

#include <string>

#include "pythag/errors.hpp"

namespace pythag {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("empty integer literal '" + std::string(text) + "'");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw ParseError("invalid integer literal '" + std::string(text) + "'");
  }
  // GMP rejects a leading '+'.
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  return Integer(normalized, 10);
}

Integer exact_div(const Integer& n, const Integer& divisor, const char* what) {
  if (divisor == 0 || !mpz_divisible_p(n.get_mpz_t(), divisor.get_mpz_t())) {
    throw InternalDefect(std::string("non-exact division: ") + what);
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), divisor.get_mpz_t());
  return q;
}

Integer half(const Integer& n, const char* what) {
  if (is_odd(n)) throw InternalDefect(std::string("odd value halved: ") + what);
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), n.get_mpz_t(), 2);
  return q;
}

}  // namespace pythag
