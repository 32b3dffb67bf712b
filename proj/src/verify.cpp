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

#include "pythag/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "pythag/errors.hpp"
#include "pythag/solvers.hpp"

namespace pythag {

namespace {

void check_bound(std::int64_t bound) {
  if (bound < 0 || bound > kMaxBound) {
    throw ParseError("bound must lie in [0, " + std::to_string(kMaxBound) + "]");
  }
}

std::optional<std::int64_t> isqrt_exact(std::int64_t n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

bool in_shard(std::int64_t first, std::int64_t bound, Shard shard) {
  return static_cast<std::uint64_t>(first + bound) % shard.count == shard.index;
}

// Visits every vector in [-bound, bound]^dims in lexicographic order whose
// first coordinate falls in the shard.
template <class Visit>
void odometer(std::size_t dims, std::int64_t bound, Shard shard, Visit&& visit) {
  std::vector<std::int64_t> v(dims, -bound);
  if (dims == 0) return;
  for (;;) {
    if (in_shard(v[0], bound, shard)) visit(v);
    std::size_t pos = dims;
    while (pos > 0) {
      --pos;
      if (v[pos] < bound) {
        ++v[pos];
        break;
      }
      v[pos] = -bound;
      if (pos == 0) return;
    }
  }
}

std::vector<Integer> widen(const std::vector<std::int64_t>& v) {
  std::vector<Integer> out;
  out.reserve(v.size() + 2);
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

std::int64_t sum_sq(const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x * x;
  return s;
}

}  // namespace

void enumerate_pyth(int n, std::int64_t bound, const std::function<void(const PythTuple&)>& visit, Shard shard) {
  if (n < 3 || n > 6) throw ParseError("enumerate_pyth: arity must be 3..6");
  check_bound(bound);
  odometer(static_cast<std::size_t>(n - 1), bound, shard, [&](const std::vector<std::int64_t>& legs) {
    auto r = isqrt_exact(sum_sq(legs));
    if (!r) return;
    PythTuple t{widen(legs)};
    if (*r == 0) {
      t.x.emplace_back(0);
      visit(t);
      return;
    }
    t.x.emplace_back(static_cast<long>(-*r));
    visit(t);
    t.x.back() = static_cast<long>(*r);
    visit(t);
  });
}

void enumerate_uv(int k, std::int64_t bound, const std::function<void(const UVSolution&)>& visit, Shard shard) {
  if (k < 2 || k > 4) throw ParseError("enumerate_uv: k must be 2..4");
  check_bound(bound);
  odometer(static_cast<std::size_t>(k), bound, shard, [&](const std::vector<std::int64_t>& xs) {
    const std::int64_t s = sum_sq(xs);
    UVSolution w{widen(xs), 0, 0};
    for (std::int64_t u = -bound; u <= bound; ++u) {
      if (s == 0) {
        if (u == 0) {
          for (std::int64_t v = -bound; v <= bound; ++v) {
            w.u = 0;
            w.v = static_cast<long>(v);
            visit(w);
          }
        } else {
          w.u = static_cast<long>(u);
          w.v = 0;
          visit(w);
        }
        continue;
      }
      if (u == 0 || s % u != 0) continue;
      const std::int64_t v = s / u;
      if (v < -bound || v > bound) continue;
      w.u = static_cast<long>(u);
      w.v = static_cast<long>(v);
      visit(w);
    }
  });
}

void enumerate_descartes(std::int64_t bound, const std::function<void(const DescartesQuadruple&)>& visit,
                         Shard shard) {
  check_bound(bound);
  // For fixed b1..b3 the relation is quadratic in b4 with roots
  // s +- 2 sqrt(b1 b2 + b1 b3 + b2 b3), s = b1 + b2 + b3.
  odometer(3, bound, shard, [&](const std::vector<std::int64_t>& b) {
    auto r = isqrt_exact(b[0] * b[1] + b[0] * b[2] + b[1] * b[2]);
    if (!r) return;
    const std::int64_t s = b[0] + b[1] + b[2];
    std::int64_t roots[2] = {s - 2 * *r, s + 2 * *r};
    const int count = *r == 0 ? 1 : 2;
    for (int i = 0; i < count; ++i) {
      if (roots[i] < -bound || roots[i] > bound) continue;
      visit(DescartesQuadruple{static_cast<long>(b[0]), static_cast<long>(b[1]), static_cast<long>(b[2]),
                               static_cast<long>(roots[i])});
    }
  });
}

void enumerate_family(const FamilySpec& f, std::int64_t bound,
                      const std::function<void(std::span<const Integer>)>& visit, Shard shard) {
  switch (f.kind) {
    case OutputKind::pythagorean:
      enumerate_pyth(static_cast<int>(f.output_names.size()), bound, [&](const PythTuple& t) { visit(t.x); },
                     shard);
      return;
    case OutputKind::uv:
      enumerate_uv(
          static_cast<int>(f.output_names.size() - 2), bound,
          [&](const UVSolution& w) {
            std::vector<Integer> flat = w.xs;
            flat.push_back(w.u);
            flat.push_back(w.v);
            visit(flat);
          },
          shard);
      return;
    case OutputKind::descartes:
      enumerate_descartes(
          bound,
          [&](const DescartesQuadruple& q) {
            const Integer flat[4] = {q.b1, q.b2, q.b3, q.b4};
            visit(flat);
          },
          shard);
      return;
  }
}

void CoverageReport::merge(const CoverageReport& other) {
  total += other.total;
  failure_count += other.failure_count;
  unreachable += other.unreachable;
  repaired += other.repaired;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  std::sort(failures.begin(), failures.end(),
            [](const CoverageFailure& a, const CoverageFailure& b) { return a.input < b.input; });
  if (failures.size() > kMaxRecordedFailures) failures.resize(kMaxRecordedFailures);
}

namespace {

CoverageReport run_shard(const FamilySpec& f, std::int64_t bound, Shard shard) {
  CoverageReport rep;
  rep.family = std::string(f.name);
  rep.bound = bound;
  const bool quintuple = f.name == "quintuple";

  auto fail = [&](std::span<const Integer> x, std::string why) {
    ++rep.failure_count;
    if (rep.failures.size() < kMaxRecordedFailures) {
      rep.failures.push_back({std::vector<Integer>(x.begin(), x.end()), std::move(why)});
    }
  };

  enumerate_family(
      f, bound,
      [&](std::span<const Integer> x) {
        ++rep.total;
        try {
          std::vector<Integer> params;
          if (quintuple) {
            QuintSolveInfo info;
            auto q = solve_quintuple(PythTuple::make({x.begin(), x.end()}), &info);
            if (info.repairs_used > 0) ++rep.repaired;
            params = {q.sign, q.w0, q.w12, q.w13, q.w14, q.w23, q.w24, q.w34,
                      q.t1,   q.t2, q.t3,  q.d1,  q.d2,  q.d3,  q.w4};
          } else {
            params = f.solve(x);
          }
          auto back = f.eval(params);
          if (!std::equal(back.begin(), back.end(), x.begin(), x.end())) {
            fail(x, "round trip mismatch: " + params_to_json(f, params).dump() + " evaluates to " +
                        output_to_json(f, back).dump());
            return;
          }
          const bool zero = std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
          if (!zero && f.normalized && !f.normalized(params)) {
            fail(x, "normalization violated (" + std::string(f.normalization) + "): " +
                        params_to_json(f, params).dump());
          }
        } catch (const UnreachableParams& e) {
          ++rep.unreachable;
          fail(x, e.what());
        } catch (const std::exception& e) {
          fail(x, e.what());
        }
      },
      shard);
  return rep;
}

}  // namespace

CoverageReport roundtrip_report(std::string_view family_name, std::int64_t bound, unsigned workers) {
  const FamilySpec& f = family(family_name);
  if (!f.solve) throw ParseError("family '" + std::string(f.name) + "' has no solver to verify");
  check_bound(bound);
  const auto start = std::chrono::steady_clock::now();

  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, width));
  std::vector<CoverageReport> parts(workers);
  if (workers == 1) {
    parts[0] = run_shard(f, bound, {});
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) {
      pool.emplace_back([&, i] { parts[i] = run_shard(f, bound, {i, workers}); });
    }
    for (auto& t : pool) t.join();
  }

  CoverageReport report;
  report.family = std::string(f.name);
  report.bound = bound;
  for (const auto& p : parts) report.merge(p);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json report_to_json(const CoverageReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json input = Json::array();
    for (const auto& v : f.input) input.push_back(to_decimal(v));
    failures.push_back(Json{{"input", std::move(input)}, {"error", f.error}});
  }
  return Json{{"family", r.family},
              {"bound", r.bound},
              {"total", r.total},
              {"failure_count", r.failure_count},
              {"failures", std::move(failures)},
              {"unreachable", r.unreachable},
              {"repaired", r.repaired},
              {"elapsed_ms", r.elapsed_ms},
              {"verified", r.verified()}};
}

std::optional<std::vector<Integer>> brute_force_param_search(std::string_view family_name,
                                                             std::span<const Integer> target,
                                                             std::int64_t box) {
  const FamilySpec& f = family(family_name);
  if (box < 0) throw ParseError("box must be nonnegative");
  const std::size_t m = f.param_names.size();

  std::vector<std::vector<Integer>> domains(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (f.param_names[i] == kTripleVariantField) {
      domains[i] = {1, 2};
    } else if (f.param_names[i] == "sign") {
      domains[i] = {-1, 1};
    } else {
      for (std::int64_t v = -box; v <= box; ++v) domains[i].emplace_back(static_cast<long>(v));
    }
  }

  std::vector<std::size_t> idx(m, 0);
  std::vector<Integer> params(m);
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) params[i] = domains[i][idx[i]];
    auto out = f.eval(params);
    if (std::equal(out.begin(), out.end(), target.begin(), target.end())) return params;
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < domains[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
  }
}

}  // namespace pythag
