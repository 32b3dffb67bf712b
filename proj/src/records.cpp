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

#include "pythag/records.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "pythag/errors.hpp"
#include "pythag/families.hpp"
#include "pythag/solvers.hpp"

namespace pythag {

namespace {

using Flat = std::vector<Integer>;
using In = std::span<const Integer>;

void require_size(In v, std::size_t n, std::string_view what) {
  if (v.size() != n) {
    throw ParseError(std::string(what) + ": expected " + std::to_string(n) + " values, got " +
                     std::to_string(v.size()));
  }
}

template <std::size_t N>
std::array<Integer, N> to_array(In v) {
  std::array<Integer, N> a;
  std::copy(v.begin(), v.end(), a.begin());
  return a;
}

Flat flat(const PythTuple& t) { return t.x; }

Flat flat(const UVSolution& w) {
  Flat out = w.xs;
  out.push_back(w.u);
  out.push_back(w.v);
  return out;
}

Flat flat(const DescartesQuadruple& q) { return {q.b1, q.b2, q.b3, q.b4}; }

template <std::size_t N>
Flat flat(const std::array<Integer, N>& a) {
  return Flat(a.begin(), a.end());
}

UVSolution uv_from(In v, std::size_t k) {
  require_size(v, k + 2, "uv tuple");
  return UVSolution::make(Flat(v.begin(), v.end() - 2), v[v.size() - 2], v.back());
}

PythTuple pyth_from(In v, std::size_t n) {
  require_size(v, n, "tuple");
  return PythTuple::make(Flat(v.begin(), v.end()));
}

DescartesQuadruple descartes_from(In v) { return DescartesQuadruple::make(v[0], v[1], v[2], v[3]); }

QuintUVParams quint_uv_from(In v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10], v[11]};
}

Flat flat(const QuintUVParams& p) {
  return {p.y0, p.z0, p.z1, p.z2, p.z3, p.z4, p.z12, p.z13, p.z14, p.z23, p.z24, p.z34};
}

QuintParams quint_from(In v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10], v[11], v[12], v[13], v[14]};
}

Flat flat(const QuintParams& p) {
  return {p.sign, p.w0, p.w12, p.w13, p.w14, p.w23, p.w24, p.w34,
          p.t1,   p.t2, p.t3,  p.d1,  p.d2,  p.d3,  p.w4};
}

std::vector<std::string_view> pyth_names(std::size_t n) {
  static constexpr std::array<std::string_view, 6> kNames{"x1", "x2", "x3", "x4", "x5", "x6"};
  return {kNames.begin(), kNames.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<std::string_view> uv_names(std::size_t k) {
  auto names = pyth_names(k);
  names.push_back("u");
  names.push_back("v");
  return names;
}

bool y0_odd(In p) { return is_odd(p[0]); }
bool y0_unit(In p) { return p[0] == 1 || p[0] == -1; }

std::vector<FamilySpec> build_registry() {
  std::vector<FamilySpec> r;

  r.push_back({"triple", "y0 (2 y1 y2, y1^2 - y2^2, y1^2 + y2^2); variant 2 swaps the legs",
               {kTripleVariantField, "y0", "y1", "y2"}, OutputKind::pythagorean, pyth_names(3),
               [](In p) {
                 require_size(p, 4, "triple");
                 if (p[0] != 1 && p[0] != 2) throw ParseError("triple: variant must be f1 or f2");
                 TripleParams t{p[0] == 1 ? TripleVariant::f1 : TripleVariant::f2, {p[1], p[2], p[3]}};
                 return flat(eval_triple(t));
               },
               [](In x) {
                 auto t = solve_triple(pyth_from(x, 3));
                 return Flat{t.variant == TripleVariant::f1 ? 1 : 2, t.y[0], t.y[1], t.y[2]};
               },
               {}, ""});

  r.push_back({"quadruple", "single 5-parameter quadruple; y4 = y1 + y2 + y3 + 2z",
               {"y0", "y1", "y2", "y3", "z"}, OutputKind::pythagorean, pyth_names(4),
               [](In p) {
                 require_size(p, 5, "quadruple");
                 return flat(eval_quadruple({{p[0], p[1], p[2], p[3]}, p[4]}));
               },
               [](In x) {
                 auto q = solve_quadruple(pyth_from(x, 4));
                 return Flat{q.y[0], q.y[1], q.y[2], q.y[3], q.z};
               },
               y0_odd, "y0 odd"});

  r.push_back({"carmichael", "y0 (2y1y3 + 2y2y4, 2y1y4 - 2y2y3, y1^2+y2^2-y3^2-y4^2, y1^2+y2^2+y3^2+y4^2)",
               {"y0", "y1", "y2", "y3", "y4"}, OutputKind::pythagorean, pyth_names(4),
               [](In p) {
                 require_size(p, 5, "carmichael");
                 return flat(eval_quadruple_carmichael({to_array<5>(p)}));
               },
               {}, {}, ""});

  r.push_back({"quintuple", "integer-valued quintuple in 14 variables with an overall sign",
               {"sign", "w0", "w12", "w13", "w14", "w23", "w24", "w34", "t1", "t2", "t3", "d1", "d2", "d3", "w4"},
               OutputKind::pythagorean, pyth_names(5),
               [](In p) {
                 require_size(p, 15, "quintuple");
                 return flat(eval_quintuple(quint_from(p)));
               },
               [](In x) { return flat(solve_quintuple(pyth_from(x, 5))); }, y0_unit, "sign in {-1, 1}"});

  r.push_back({"sextuple", "single 9-parameter sextuple; y8 = y1 + ... + y7 + 2z",
               {"y0", "y1", "y2", "y3", "y4", "y5", "y6", "y7", "z"}, OutputKind::pythagorean, pyth_names(6),
               [](In p) {
                 require_size(p, 9, "sextuple");
                 SextParams s;
                 std::copy(p.begin(), p.begin() + 8, s.y.begin());
                 s.z = p[8];
                 return flat(eval_sextuple(s));
               },
               [](In x) {
                 auto s = solve_sextuple(pyth_from(x, 6));
                 Flat out(s.y.begin(), s.y.end());
                 out.push_back(s.z);
                 return out;
               },
               y0_unit, "y0 in {-1, 1}"});

  r.push_back({"sextuple_h", "classical 9-parameter sextuple (does not cover all sextuples)",
               {"y0", "y1", "y2", "y3", "y4", "y5", "y6", "y7", "y8"}, OutputKind::pythagorean, pyth_names(6),
               [](In p) {
                 require_size(p, 9, "sextuple_h");
                 return flat(eval_sextuple_h({to_array<9>(p)}));
               },
               {}, {}, ""});

  r.push_back({"uv2", "x1^2 + x2^2 = uv: y0 (y1y3 + y2y4, y1y4 - y2y3, y1^2 + y2^2, y3^2 + y4^2)",
               {"y0", "y1", "y2", "y3", "y4"}, OutputKind::uv, uv_names(2),
               [](In p) {
                 require_size(p, 5, "uv2");
                 return flat(eval_uv_quadruple({to_array<5>(p)}));
               },
               [](In x) { return flat(solve_uv_quadruple(uv_from(x, 2)).y); }, y0_odd, "y0 odd"});

  r.push_back({"uv3", "x1^2 + x2^2 + x3^2 = uv in 12 parameters",
               {"y0", "z0", "z1", "z2", "z3", "z4", "z12", "z13", "z14", "z23", "z24", "z34"}, OutputKind::uv,
               uv_names(3),
               [](In p) {
                 require_size(p, 12, "uv3");
                 return flat(eval_uv_quintuple(quint_uv_from(p)));
               },
               [](In x) { return flat(solve_uv_quintuple(uv_from(x, 3))); }, y0_unit, "y0 in {-1, 1}"});

  r.push_back({"uv4", "x1^2 + ... + x4^2 = uv: y0 times the quaternion products of (y1..y4), (y5..y8)",
               {"y0", "y1", "y2", "y3", "y4", "y5", "y6", "y7", "y8"}, OutputKind::uv, uv_names(4),
               [](In p) {
                 require_size(p, 9, "uv4");
                 return flat(eval_uv_sextuple({to_array<9>(p)}));
               },
               [](In x) { return flat(solve_uv_sextuple(uv_from(x, 4)).y); }, y0_unit, "y0 in {-1, 1}"});

  r.push_back({"descartes", "2(b1^2 + b2^2 + b3^2 + b4^2) = (b1 + b2 + b3 + b4)^2 in 5 parameters",
               {"y0", "y1", "y2", "y3", "y4"}, OutputKind::descartes, {"b1", "b2", "b3", "b4"},
               [](In p) {
                 require_size(p, 5, "descartes");
                 return flat(eval_descartes({to_array<5>(p)}));
               },
               [](In x) {
                 require_size(x, 4, "descartes");
                 return flat(solve_descartes(descartes_from(x)).y);
               },
               y0_odd, "y0 odd"});
  return r;
}

Json integer_json(const Integer& n) { return to_decimal(n); }

Integer integer_from_json(const Json& j, std::string_view field) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<unsigned long long>()))
                                  : Integer(std::to_string(j.get<long long>()));
  }
  throw ParseError("field '" + std::string(field) + "' must be a decimal string");
}

const Json& member(const Json& j, std::string_view key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(std::string(key));
  if (it == j.end()) throw ParseError("missing field '" + std::string(key) + "'");
  return *it;
}

std::size_t x_count(const FamilySpec& f) {
  return f.kind == OutputKind::uv ? f.output_names.size() - 2 : f.output_names.size();
}

}  // namespace

std::span<const FamilySpec> families() {
  static const std::vector<FamilySpec> registry = build_registry();
  return registry;
}

const FamilySpec& family(std::string_view name) {
  for (const auto& f : families()) {
    if (f.name == name) return f;
  }
  throw ParseError("unknown family '" + std::string(name) + "'");
}

Json output_to_json(const FamilySpec& f, std::span<const Integer> values) {
  Json j = Json::object();
  if (f.kind == OutputKind::descartes) {
    for (std::size_t i = 0; i < values.size(); ++i) j[std::string(f.output_names[i])] = integer_json(values[i]);
    return j;
  }
  const std::size_t nx = f.kind == OutputKind::uv ? values.size() - 2 : values.size();
  Json xs = Json::array();
  for (std::size_t i = 0; i < nx; ++i) xs.push_back(integer_json(values[i]));
  j["x"] = std::move(xs);
  if (f.kind == OutputKind::uv) {
    j["u"] = integer_json(values[nx]);
    j["v"] = integer_json(values[nx + 1]);
  }
  return j;
}

std::vector<Integer> output_from_json(const FamilySpec& f, const Json& j) {
  std::vector<Integer> out;
  if (f.kind == OutputKind::descartes) {
    for (auto name : f.output_names) out.push_back(integer_from_json(member(j, name), name));
    return out;
  }
  const Json& xs = member(j, "x");
  if (!xs.is_array() || xs.size() != x_count(f)) {
    throw ParseError("field 'x' must be an array of " + std::to_string(x_count(f)) + " integers");
  }
  for (const auto& x : xs) out.push_back(integer_from_json(x, "x"));
  if (f.kind == OutputKind::uv) {
    out.push_back(integer_from_json(member(j, "u"), "u"));
    out.push_back(integer_from_json(member(j, "v"), "v"));
  }
  return out;
}

Json params_to_json(const FamilySpec& f, std::span<const Integer> values) {
  Json j = Json::object();
  for (std::size_t i = 0; i < f.param_names.size(); ++i) {
    if (f.param_names[i] == kTripleVariantField) {
      j[std::string(kTripleVariantField)] = values[i] == 1 ? "f1" : "f2";
    } else {
      j[std::string(f.param_names[i])] = integer_json(values[i]);
    }
  }
  return j;
}

std::vector<Integer> params_from_json(const FamilySpec& f, const Json& j) {
  std::vector<Integer> out;
  for (auto name : f.param_names) {
    const Json& v = member(j, name);
    if (name == kTripleVariantField && v.is_string() && (v == "f1" || v == "f2")) {
      out.emplace_back(v == "f1" ? 1 : 2);
    } else {
      out.push_back(integer_from_json(v, name));
    }
  }
  return out;
}

std::vector<Integer> parse_integer_list(std::string_view text, const FamilySpec* params_of) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const bool variant_slot = params_of != nullptr && out.size() < params_of->param_names.size() &&
                              params_of->param_names[out.size()] == kTripleVariantField;
    if (variant_slot && (token == "f1" || token == "f2")) {
      out.emplace_back(token == "f1" ? 1 : 2);
    } else {
      out.push_back(parse_integer(token));
    }
    start = comma + 1;
  }
  return out;
}

std::string csv_header(std::span<const std::string_view> names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

std::string csv_row(std::span<const Integer> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_decimal(values[i]);
  }
  return out;
}

}  // namespace pythag
