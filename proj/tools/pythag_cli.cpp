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

// pythag: evaluate, solve, enumerate and verify integer parametrizations of
// Pythagorean tuples, uv-forms and Descartes quadruples.
//
// All integers on input and output are exact decimal strings. Records are
// JSON objects, one per line.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "pythag/errors.hpp"
#include "pythag/records.hpp"
#include "pythag/verify.hpp"

namespace {

using namespace pythag;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr const char* kWorkerCapEnv = "PYTHAG_MAX_WORKERS";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// A record is either a JSON object or a comma-separated list of integers.
std::vector<Integer> read_record(const FamilySpec& f, const std::string& text, bool params) {
  if (!text.empty() && text.front() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return params ? params_from_json(f, j) : output_from_json(f, j);
  }
  return parse_integer_list(text, params ? &f : nullptr);
}

// Applies fn to the inline argument, or to each nonblank stdin line.
void for_each_record(const std::optional<std::string>& inline_arg, const std::function<void(const std::string&)>& fn) {
  if (inline_arg) {
    fn(trim(*inline_arg));
    return;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    line = trim(line);
    if (!line.empty()) fn(line);
  }
}

unsigned capped_workers(unsigned requested) {
  if (const char* cap = std::getenv(kWorkerCapEnv)) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(cap, &end, 10);
    if (end == cap || *end != '\0' || v == 0) {
      throw ParseError(std::string(kWorkerCapEnv) + " must be a positive integer");
    }
    requested = static_cast<unsigned>(std::min<unsigned long>(requested, v));
  }
  return std::max(requested, 1u);
}

std::string family_help() {
  std::string out = "Families (parameters -> output):\n";
  for (const auto& f : families()) {
    out += "  " + std::string(f.name) + ": " + csv_header(f.param_names) + " -> " + csv_header(f.output_names);
    if (!f.solve) out += " (eval only)";
    out += "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact parametrizations of Pythagorean tuples and Descartes quadruples"};
  app.require_subcommand(1);
  app.footer(family_help());

  std::string family_name;
  std::optional<std::string> params_arg, tuple_arg;
  std::int64_t bound = 0;
  std::string format = "json";
  unsigned workers = 1;

  auto* eval = app.add_subcommand("eval", "Evaluate a parametrization; reads records from stdin without --params");
  eval->add_option("family", family_name, "Family name")->required();
  eval->add_option("--params", params_arg, "Comma-separated parameters in family order (triple: f1|f2,y0,y1,y2)");

  auto* solve = app.add_subcommand("solve", "Find parameters for a tuple; reads records from stdin without --tuple");
  solve->add_option("family", family_name, "Family name")->required();
  solve->add_option("--tuple", tuple_arg, "Comma-separated tuple (x1..xn, or x1..xk,u,v, or b1..b4)");

  auto* enumerate = app.add_subcommand("enumerate", "Stream every solution with coordinates bounded by --bound");
  enumerate->add_option("family", family_name, "Family name")->required();
  enumerate->add_option("--bound", bound, "Coordinate bound")->required();
  enumerate->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Solve and re-evaluate every solution up to --bound");
  verify->add_option("family", family_name, "Family name")->required();
  verify->add_option("--bound", bound, "Coordinate bound")->required();
  verify->add_option("--workers", workers, std::string("Parallel workers, capped by ") + kWorkerCapEnv)
      ->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("families", "List families with parameter and output fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  std::ios::sync_with_stdio(false);
  try {
    if (list->parsed()) {
      std::cout << family_help();
      return 0;
    }
    const FamilySpec& f = family(family_name);

    if (eval->parsed()) {
      for_each_record(params_arg, [&](const std::string& text) {
        std::cout << output_to_json(f, f.eval(read_record(f, text, true))).dump() << '\n';
      });
      return 0;
    }

    if (solve->parsed()) {
      if (!f.solve) throw ParseError("family '" + family_name + "' has no solver");
      for_each_record(tuple_arg, [&](const std::string& text) {
        std::cout << params_to_json(f, f.solve(read_record(f, text, false))).dump() << '\n';
      });
      return 0;
    }

    if (enumerate->parsed()) {
      const bool csv = format == "csv";
      if (csv) std::cout << csv_header(f.output_names) << '\n';
      enumerate_family(f, bound, [&](std::span<const Integer> x) {
        std::cout << (csv ? csv_row(x) : output_to_json(f, x).dump()) << '\n';
      });
      return 0;
    }

    if (verify->parsed()) {
      const auto report = roundtrip_report(f.name, bound, capped_workers(workers));
      std::cout << report_to_json(report).dump() << '\n';
      return report.verified() ? 0 : kExitFailure;
    }
  } catch (const UnreachableParams& e) {
    std::cerr << "pythag: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    std::cerr << "pythag: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "pythag: internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
