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

#include <stdexcept>
#include <string>

namespace pythag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input tuple or matrix fails its defining equation.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The entries of a vector do not have gcd 1.
class NotUnimodular : public Error {
 public:
  using Error::Error;
};

class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

class NegativeInput : public Error {
 public:
  using Error::Error;
};

/// u - v is odd, so the reverse substitution has no integer solution.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// The quintuple solver could not realize the parameters through any
/// substitution row, even after the repair moves.
class UnreachableParams : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (integers, JSON records, family names).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal identity fails (a halved entry is odd, an output
/// misses its defining equation). Never expected; signals a defect.
class InternalDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pythag
