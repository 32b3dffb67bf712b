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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pythag/families.hpp"
#include "pythag/records.hpp"

namespace pythag {

/// Enumerations can be split across workers by the value of their first
/// coordinate: value x belongs to shard (x + bound) mod count.
struct Shard {
  unsigned index = 0;
  unsigned count = 1;
};

/// Largest bound accepted by the enumerators.
inline constexpr std::int64_t kMaxBound = 1'000'000;

/// Pythagorean n-tuples with |x_i| <= bound for i < n, both signs of x_n,
/// in lexicographic order. n in 3..6.
void enumerate_pyth(int n, std::int64_t bound, const std::function<void(const PythTuple&)>& visit,
                    Shard shard = {});

/// Solutions of x_1^2 + ... + x_k^2 = uv with every entry in [-bound, bound],
/// lexicographic in (x, u, v). k in 2..4.
void enumerate_uv(int k, std::int64_t bound, const std::function<void(const UVSolution&)>& visit,
                  Shard shard = {});

/// Descartes quadruples with |b_i| <= bound, lexicographic.
void enumerate_descartes(std::int64_t bound, const std::function<void(const DescartesQuadruple&)>& visit,
                         Shard shard = {});

/// Enumerates the solution set a solving family covers, as flat tuples in
/// that family's output layout. Throws ParseError for families without a
/// solver.
void enumerate_family(const FamilySpec& f, std::int64_t bound,
                      const std::function<void(std::span<const Integer>)>& visit, Shard shard = {});

struct CoverageFailure {
  std::vector<Integer> input;
  std::string error;
  friend bool operator==(const CoverageFailure&, const CoverageFailure&) = default;
};

struct CoverageReport {
  std::string family;
  std::int64_t bound = 0;
  std::uint64_t total = 0;
  std::uint64_t failure_count = 0;
  std::vector<CoverageFailure> failures;  ///< first kMaxRecordedFailures in enumeration order
  std::uint64_t unreachable = 0;          ///< quintuple solves that exhausted the repair moves
  std::uint64_t repaired = 0;             ///< quintuple solves that needed a repair move
  double elapsed_ms = 0;

  bool verified() const { return failure_count == 0; }

  /// Associative, commutative merge of shard reports (elapsed is not merged).
  void merge(const CoverageReport& other);
};

inline constexpr std::size_t kMaxRecordedFailures = 100;

/// Solves every enumerated element of the family, re-evaluates, and records
/// mismatches, errors and normalization violations. `workers` > 1 shards
/// the enumeration across threads; the report is identical for any worker
/// count apart from elapsed_ms.
CoverageReport roundtrip_report(std::string_view family, std::int64_t bound, unsigned workers = 1);

Json report_to_json(const CoverageReport& r);

/// Scans every parameter vector with entries in [-box, box] (the triple
/// variant ranges over {1, 2}, the quintuple sign over {-1, 1}) in
/// lexicographic order, returning the first whose evaluation equals target.
std::optional<std::vector<Integer>> brute_force_param_search(std::string_view family,
                                                             std::span<const Integer> target,
                                                             std::int64_t box);

}  // namespace pythag
