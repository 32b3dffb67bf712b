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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "pythag/errors.hpp"
#include "pythag/verify.hpp"

using namespace pythag;

namespace {

using Row = std::vector<long>;

Row to_row(std::span<const Integer> v) {
  Row r;
  for (const auto& x : v) r.push_back(x.get_si());
  return r;
}

bool square(long n, long* root) {
  if (n < 0) return false;
  for (long r = 0; r * r <= n; ++r) {
    if (r * r == n) {
      *root = r;
      return true;
    }
  }
  return false;
}

std::vector<Row> collect_pyth(int n, long bound) {
  std::vector<Row> out;
  enumerate_pyth(n, bound, [&](const PythTuple& t) { out.push_back(to_row(t.x)); });
  return out;
}

void expect_report_eq(const CoverageReport& a, const CoverageReport& b) {
  CHECK(a.family == b.family);
  CHECK(a.bound == b.bound);
  CHECK(a.total == b.total);
  CHECK(a.failure_count == b.failure_count);
  CHECK(a.failures == b.failures);
  CHECK(a.unreachable == b.unreachable);
  CHECK(a.repaired == b.repaired);
}

}  // namespace

TEST_CASE("enumerate_pyth examples") {
  CHECK(collect_pyth(3, 0) == std::vector<Row>{{0, 0, 0}});
  auto quads = collect_pyth(4, 2);
  CHECK(std::count(quads.begin(), quads.end(), Row{1, 2, 2, 3}) == 1);
  CHECK(std::count(quads.begin(), quads.end(), Row{1, 2, 2, -3}) == 1);
  auto sext = collect_pyth(6, 1);
  std::set<Row> seen(sext.begin(), sext.end());
  Row base{1, 1, 1, 1, 0};
  std::sort(base.begin(), base.end());
  do {
    for (int signs = 0; signs < 32; ++signs) {
      Row r = base;
      for (int i = 0; i < 5; ++i) {
        if (signs >> i & 1) r[i] = -r[i];
      }
      for (long h : {2L, -2L}) {
        Row full = r;
        full.push_back(h);
        CHECK(seen.count(full) == 1);
      }
    }
  } while (std::next_permutation(base.begin(), base.end()));
  CHECK_THROWS_AS(enumerate_pyth(7, 1, [](const PythTuple&) {}), ParseError);
  CHECK_THROWS_AS(enumerate_pyth(3, -1, [](const PythTuple&) {}), ParseError);
}

TEST_CASE("enumerate_pyth agrees with a naive scan") {
  for (long bound = 0; bound <= 15; ++bound) {
    std::vector<Row> naive3;
    for (long a = -bound; a <= bound; ++a) {
      for (long b = -bound; b <= bound; ++b) {
        long r;
        if (!square(a * a + b * b, &r)) continue;
        naive3.push_back({a, b, -r});
        if (r != 0) naive3.push_back({a, b, r});
      }
    }
    CHECK(collect_pyth(3, bound) == naive3);

    std::vector<Row> naive4;
    for (long a = -bound; a <= bound; ++a) {
      for (long b = -bound; b <= bound; ++b) {
        for (long c = -bound; c <= bound; ++c) {
          long r;
          if (!square(a * a + b * b + c * c, &r)) continue;
          naive4.push_back({a, b, c, -r});
          if (r != 0) naive4.push_back({a, b, c, r});
        }
      }
    }
    auto got = collect_pyth(4, bound);
    CHECK(got == naive4);
    std::set<Row> uniq(got.begin(), got.end());
    CHECK(uniq.size() == got.size());
  }
}

TEST_CASE("enumerate_uv") {
  auto collect = [](int k, long bound) {
    std::vector<Row> out;
    enumerate_uv(k, bound, [&](const UVSolution& w) {
      Row r = to_row(w.xs);
      r.push_back(w.u.get_si());
      r.push_back(w.v.get_si());
      out.push_back(r);
    });
    return out;
  };
  auto k2b1 = collect(2, 1);
  CHECK(std::count(k2b1.begin(), k2b1.end(), Row{1, 0, 1, 1}) == 1);
  CHECK(std::count(k2b1.begin(), k2b1.end(), Row{0, 0, 1, 0}) == 1);

  for (long bound : {0L, 1L, 5L}) {
    std::size_t oracle = 0;
    for (long a = -bound; a <= bound; ++a)
      for (long b = -bound; b <= bound; ++b)
        for (long u = -bound; u <= bound; ++u)
          for (long v = -bound; v <= bound; ++v) oracle += (a * a + b * b == u * v);
    auto got = collect(2, bound);
    CHECK(got.size() == oracle);
    std::set<Row> uniq(got.begin(), got.end());
    CHECK(uniq.size() == got.size());
  }

  auto k4 = collect(4, 2);
  CHECK(std::count(k4.begin(), k4.end(), Row{1, 1, 1, 1, 2, 2}) == 1);
}

TEST_CASE("enumerate_descartes") {
  auto collect = [](long bound) {
    std::vector<Row> out;
    enumerate_descartes(bound, [&](const DescartesQuadruple& q) {
      out.push_back({q.b1.get_si(), q.b2.get_si(), q.b3.get_si(), q.b4.get_si()});
    });
    return out;
  };
  CHECK(collect(0) == std::vector<Row>{{0, 0, 0, 0}});
  auto b3 = collect(3);
  CHECK(std::count(b3.begin(), b3.end(), Row{-1, 2, 2, 3}) == 1);
  auto b1 = collect(1);
  for (const Row& r : {Row{1, 1, 0, 0}, Row{1, 0, 1, 0}, Row{0, 0, 1, 1}, Row{0, 1, 0, 1}})
    CHECK(std::count(b1.begin(), b1.end(), r) == 1);

  const long bound = 8;
  std::vector<Row> naive;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d) {
          long s = a + b + c + d;
          if (2 * (a * a + b * b + c * c + d * d) == s * s) naive.push_back({a, b, c, d});
        }
  auto got = collect(bound);
  std::sort(got.begin(), got.end());
  CHECK(got == naive);
}

TEST_CASE("sharded enumeration partitions the full stream") {
  std::vector<Row> whole = collect_pyth(4, 6);
  std::vector<Row> parts;
  for (unsigned i = 0; i < 3; ++i) {
    enumerate_pyth(4, 6, [&](const PythTuple& t) { parts.push_back(to_row(t.x)); }, {i, 3});
  }
  std::sort(whole.begin(), whole.end());
  std::sort(parts.begin(), parts.end());
  CHECK(whole == parts);
}

TEST_CASE("roundtrip_report examples") {
  auto q0 = roundtrip_report("quadruple", 0);
  CHECK(q0.total >= 1);
  CHECK(q0.failures.empty());
  CHECK(q0.verified());

  auto s1 = roundtrip_report("sextuple", 1);
  CHECK(s1.verified());
  std::uint64_t orbit = 0;
  enumerate_pyth(6, 1, [&](const PythTuple& t) { orbit += (t.x[5] == 2 || t.x[5] == -2); });
  CHECK(orbit == 5 * 16 * 2);
  CHECK(s1.total >= orbit);

  CHECK(roundtrip_report("descartes", 10).verified());
  for (auto name : {"triple", "uv2", "uv3", "uv4", "quintuple"}) {
    CAPTURE(name);
    auto r = roundtrip_report(name, 3);
    CHECK(r.verified());
    CHECK(r.unreachable == 0);
  }

  CHECK_THROWS_AS(roundtrip_report("carmichael", 1), ParseError);
  CHECK_THROWS_AS(roundtrip_report("nonsense", 1), ParseError);
  CHECK_THROWS_AS(roundtrip_report("quadruple", kMaxBound + 1), ParseError);
}

TEST_CASE("reports do not depend on the worker count") {
  for (auto name : {"quadruple", "uv2", "descartes", "quintuple"}) {
    CAPTURE(name);
    auto one = roundtrip_report(name, 5, 1);
    for (unsigned w : {2u, 3u, 7u}) expect_report_eq(one, roundtrip_report(name, 5, w));
  }
}

TEST_CASE("report merging caps recorded failures") {
  CoverageReport a, b;
  for (long i = 0; i < 80; ++i) {
    ++a.failure_count;
    a.failures.push_back({{Integer(2 * i)}, "even"});
    ++b.failure_count;
    b.failures.push_back({{Integer(2 * i + 1)}, "odd"});
  }
  CoverageReport ab = a, ba = b;
  ab.merge(b);
  ba.merge(a);
  CHECK(ab.failure_count == 160);
  CHECK(ab.failures.size() == kMaxRecordedFailures);
  CHECK(ab.failures == ba.failures);
  CHECK(ab.failures.front().input == std::vector<Integer>{0});
  CHECK(ab.failures.back().input == std::vector<Integer>{99});
  CHECK_FALSE(ab.verified());

  auto j = report_to_json(ab);
  CHECK(j["failure_count"] == 160);
  CHECK(j["failures"].size() == kMaxRecordedFailures);
  CHECK(j["verified"] == false);
}

TEST_CASE("brute_force_param_search") {
  const Integer zero_uv[4] = {0, 0, 0, 0};
  auto z = brute_force_param_search("uv2", zero_uv, 0);
  REQUIRE(z);
  CHECK(*z == std::vector<Integer>(5, 0));

  const Integer target[4] = {11, -2, 5, 25};
  auto hit = brute_force_param_search("uv2", target, 4);
  REQUIRE(hit);
  CHECK(eval_uv_quadruple({{(*hit)[0], (*hit)[1], (*hit)[2], (*hit)[3], (*hit)[4]}}) ==
        UVSolution{{11, -2}, 5, 25});
  CHECK(*hit <= std::vector<Integer>{1, 1, 2, 3, 4});

  // Independent scan over the Descartes parameters in the same order.
  const Integer circles[4] = {1, 1, 0, 0};
  std::optional<std::vector<Integer>> first;
  for (long a = -1; a <= 1 && !first; ++a)
    for (long b = -1; b <= 1 && !first; ++b)
      for (long c = -1; c <= 1 && !first; ++c)
        for (long d = -1; d <= 1 && !first; ++d)
          for (long e = -1; e <= 1 && !first; ++e)
            if (eval_descartes({{a, b, c, d, e}}) == DescartesQuadruple{1, 1, 0, 0})
              first = std::vector<Integer>{a, b, c, d, e};
  REQUIRE(first);
  CHECK(*first == std::vector<Integer>{1, -1, 0, 0, 0});
  CHECK(brute_force_param_search("descartes", circles, 1) == first);

  const Integer unreachable[4] = {7, 0, 49, 1};
  CHECK_FALSE(brute_force_param_search("uv2", unreachable, 1));
  const Integer triple[3] = {3, 4, 5};
  auto t = brute_force_param_search("triple", triple, 2);
  REQUIRE(t);
  CHECK(*t == std::vector<Integer>{2, 1, -2, -1});
}
