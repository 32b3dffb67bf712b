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

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pythag/integer.hpp"

namespace pythag {

/// Shape of a family's output tuple.
enum class OutputKind {
  pythagorean,  ///< x1..xn, hypotenuse last
  uv,           ///< x1..xk, u, v
  descartes,    ///< b1..b4
};

/// Flat, name-addressed view of one parametrization. Parameters and outputs
/// travel as integer vectors in the field order given by the name lists.
struct FamilySpec {
  std::string_view name;
  std::string_view summary;
  std::vector<std::string_view> param_names;
  OutputKind kind;
  std::vector<std::string_view> output_names;

  /// Parameters -> output tuple; validates the output.
  std::function<std::vector<Integer>(std::span<const Integer>)> eval;
  /// Output tuple -> parameters, empty when the family has no solver.
  std::function<std::vector<Integer>(std::span<const Integer>)> solve;
  /// Normalization guaranteed by the solver on nonzero inputs.
  std::function<bool(std::span<const Integer>)> normalized;
  std::string_view normalization;
};

/// All registered families, in a fixed order.
std::span<const FamilySpec> families();

/// Throws ParseError for unknown names.
const FamilySpec& family(std::string_view name);

/// Allowed domain for the first triple parameter: 1 means f1, 2 means f2.
inline constexpr std::string_view kTripleVariantField = "variant";

using Json = nlohmann::ordered_json;

/// Pythagorean tuples render as {"x": [...]}, uv solutions as
/// {"x": [...], "u": .., "v": ..}, Descartes quadruples as {"b1": .., ...};
/// parameter records as one key per parameter. Integers are decimal strings.
Json output_to_json(const FamilySpec& f, std::span<const Integer> values);
std::vector<Integer> output_from_json(const FamilySpec& f, const Json& j);
Json params_to_json(const FamilySpec& f, std::span<const Integer> values);
std::vector<Integer> params_from_json(const FamilySpec& f, const Json& j);

/// Parses "a,b,c" into integers, accepting f1/f2 in the triple variant slot
/// when `params_of` is the triple family.
std::vector<Integer> parse_integer_list(std::string_view text, const FamilySpec* params_of = nullptr);

std::string csv_header(std::span<const std::string_view> names);
std::string csv_row(std::span<const Integer> values);

}  // namespace pythag
