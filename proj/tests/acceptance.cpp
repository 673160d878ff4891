// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The ffprime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <array>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "ffprime/cli.hpp"
#include "ffprime/counting.hpp"
#include "ffprime/family.hpp"
#include "ffprime/heuristic.hpp"
#include "ffprime/irreducible.hpp"
#include "ffprime/parallel.hpp"
#include "ffprime/sweep.hpp"

using namespace ffprime;

namespace {

const unsigned kJobs = std::max(1u, std::thread::hardware_concurrency());

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

Poly P(const Field& f, std::vector<Elem> c) { return Poly(f, std::move(c)); }

Outcome irreducible_counts() {
  Outcome o;
  std::size_t cells = 0;
  for (std::uint64_t q = 2; q <= 16; ++q) {
    if (!prime_power(q)) continue;
    const Field f = Field::of_order(q);
    for (std::size_t d = 1; d <= 5; ++d) {
      const std::uint64_t total = monic_count(q, d, default_budget());
      const auto ranges = split_range(total, kJobs * 4);
      std::vector<std::uint64_t> found(ranges.size(), 0);
      parallel_for(ranges.size(), kJobs, [&](std::size_t r) {
        for_each_monic(f, d, ranges[r].first, ranges[r].second, [&](std::span<const Elem> c) {
          if (is_irreducible(Poly(f, std::vector<Elem>(c.begin(), c.end())))) ++found[r];
        });
      });
      std::uint64_t enumerated = 0;
      for (auto v : found) enumerated += v;
      o.require(BigInt(enumerated) == count_irreducible(q, d),
                "q=" + std::to_string(q) + " d=" + std::to_string(d) + " enumeration " + std::to_string(enumerated) +
                    " vs formula " + count_irreducible(q, d).str());
      BigInt sum = 0;
      for (std::size_t e = 1; e <= d; ++e)
        if (d % e == 0) sum += BigInt(e) * count_irreducible(q, e);
      o.require(sum == boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d)),
                "divisor sum fails at q=" + std::to_string(q) + " d=" + std::to_string(d));
      ++cells;
    }
  }
  if (o.ok) o.detail = std::to_string(cells) + " (q, d) cells";
  return o;
}

Outcome quadratic_law() {
  Outcome o;
  std::size_t inputs = 0;
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const Field f = Field::of_order(q);
    for (std::uint64_t i = 0; i < q * q; ++i) {
      const Poly F = monic_from_index(f, 2, i);
      const auto r = goldbach_count(F).count;
      o.require(r == (q - 1) / 2, "q=" + std::to_string(q) + " F=" + format_poly(F) + " R=" + std::to_string(r));
      ++inputs;
    }
  }
  if (o.ok) o.detail = std::to_string(inputs) + " quadratics";
  return o;
}

Outcome char2_obstruction() {
  Outcome o;
  for (std::uint64_t q : {2u, 4u, 8u}) {
    const Field f = Field::of_order(q);
    for (Elem a = 0; a < q; ++a) {
      const Poly F = P(f, {a, 1, 1});
      const auto r = goldbach_count(F).count;
      o.require(r == 0, "q=" + std::to_string(q) + " F=" + format_poly(F) + " R=" + std::to_string(r));
    }
  }
  if (o.ok) o.detail = "14 inputs";
  return o;
}

Outcome sum_identities() {
  Outcome o;
  for (auto [q, n] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}, {5u, 3u}, {7u, 2u}}) {
    const auto id = goldbach_sum_identity(Field::of_order(q), n, kJobs);
    o.require(id.holds(), "goldbach q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " +
                              std::to_string(id.lhs) + " vs " + std::to_string(id.rhs));
  }
  for (auto [q, n] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 2u}, {3u, 3u}}) {
    const auto id = twin_sum_identity(Field::of_order(q), n, kJobs);
    o.require(id.holds(), "twin q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + std::to_string(id.lhs) +
                              " vs " + std::to_string(id.rhs));
  }
  if (o.ok) o.detail = "9 (q, n) pairs";
  return o;
}

Outcome fiber_constancy() {
  Outcome o;
  const Field f3 = Field::make(3);
  for (auto [problem, n] : {std::pair{Problem::goldbach, 2u}, {Problem::goldbach, 3u}, {Problem::twin, 2u}}) {
    const auto fam = FamilySpec::make(problem, f3, n);
    const auto rep = fiber_counts(fam, kJobs);
    // Goldbach: q^{I-n+2}; twin: q^{I+1-n}.
    const std::size_t e = problem == Problem::goldbach ? fam.I - n + 2 : fam.I + 1 - n;
    const BigInt want = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(e));
    bool all = !rep.per_g.empty();
    for (const auto& [g, c] : rep.per_g) all = all && BigInt(c) == want;
    o.require(all && rep.constant(), std::string(problem_name(problem)) + " n=" + std::to_string(n) +
                                         ": fiber sizes not all " + want.str());
    o.require(rep.total_ok(), std::string(problem_name(problem)) + " n=" + std::to_string(n) + ": total " +
                                  std::to_string(rep.total_pairs));
  }
  if (o.ok) o.detail = "3 families";
  return o;
}

Outcome double_counting() {
  Outcome o;
  const Field f3 = Field::make(3);
  auto check = [&](Problem problem, std::size_t n, const Poly& input, std::uint64_t direct) {
    const auto dc = double_count_check(FamilySpec::make(problem, f3, n), input, kJobs);
    const std::string what = std::string(problem_name(problem)) + " input " + format_poly(input);
    o.require(dc.holds(), what + ": lhs " + dc.lhs.str() + " rhs " + dc.rhs.str());
    o.require(dc.rhs % dc.ng == 0 && dc.rhs / dc.ng == direct, what + ": rhs / N_g differs from the direct count");
  };
  for (const auto& F : {P(f3, {0, 0, 1}), P(f3, {1, 0, 1}), P(f3, {0, 0, 0, 1})})
    check(Problem::goldbach, F.degree().value(), F, goldbach_count(F).count);
  for (const auto& A : {P(f3, {1}), P(f3, {0, 1})}) check(Problem::twin, 2, A, twin_count(f3, 2, A).count);
  if (o.ok) o.detail = "5 inputs";
  return o;
}

Outcome series_refinement() {
  Outcome o;
  std::mt19937_64 rng(20261016);
  std::size_t checked = 0;
  for (std::uint64_t q : {3u, 5u, 9u}) {
    const Field f = Field::of_order(q);
    for (int i = 0; i < 20; ++i) {
      const unsigned D = 1 + static_cast<unsigned>(rng() % 8);
      const bool goldbach = i % 2 == 0;
      const std::size_t n = 2 + rng() % 3;
      const Poly input = goldbach ? monic_from_index(f, n, rng() % monic_count(q, n, ~0ull))
                                  : poly_from_index(f, n, 1 + rng() % (monic_count(q, n, ~0ull) - 1));
      const Problem problem = goldbach ? Problem::goldbach : Problem::twin;
      const auto lo = singular_series(problem, input, D);
      const auto hi = singular_series(problem, input, D + 4);
      o.require(std::abs(hi.value - lo.value) <= lo.err_bound,
                "q=" + std::to_string(q) + " input " + format_poly(input) + " D=" + std::to_string(D));
      ++checked;
    }
  }
  const Field f2 = Field::make(2);
  for (const auto& A : {P(f2, {1}), P(f2, {0, 1}), P(f2, {1, 1})})
    for (unsigned D : {1u, 4u, 10u}) {
      const auto s = singular_series(Problem::twin, A, D);
      o.require(s.zero_flag && s.value == 0.0, "q=2 twin A=" + format_poly(A) + " not exactly zero");
    }
  if (o.ok) o.detail = std::to_string(checked) + " random inputs + 9 zero cases";
  return o;
}

Outcome disc_locus_bound() {
  Outcome o;
  const Field f5 = Field::make(5), f7 = Field::make(7);
  auto l1 = disc_locus(parse_bipoly("t^2 - u", f5));
  o.require(l1.roots == std::vector<Elem>{0} && l1.bound == 3, "t^2 - u over GF(5)");
  auto l2 = disc_locus(parse_bipoly("t^2 + 1", f5));
  o.require(l2.roots.empty() && l2.bound == 0, "t^2 + 1");
  auto l3 = disc_locus(parse_bipoly("t^2 - u^2", f7));
  o.require(l3.roots == std::vector<Elem>{0} && l3.bound == 6, "t^2 - u^2 over GF(7)");

  std::mt19937_64 rng(4242);
  std::size_t tested = 0, skipped = 0;
  while (tested < 150) {
    const std::uint64_t q = std::array<std::uint64_t, 3>{3, 5, 7}[rng() % 3];
    const Field f = Field::of_order(q);
    const std::size_t n = 1 + rng() % 4, m = rng() % 4;
    std::vector<std::vector<Elem>> rows(n + 1, std::vector<Elem>(m + 1, 0));
    for (auto& r : rows)
      for (auto& c : r) c = static_cast<Elem>(rng() % q);
    if (std::all_of(rows[n].begin(), rows[n].end(), [](Elem c) { return c == 0; })) rows[n][0] = 1;
    const BiPoly bf(f, std::move(rows));
    DiscLocus loc{Poly(f), {}, 0};
    try {
      loc = disc_locus(bf);
    } catch (const InseparableError&) {
      ++skipped;
      continue;
    }
    ++tested;
    o.require(loc.roots.size() <= loc.bound, "q=" + std::to_string(q) + ": " + std::to_string(loc.roots.size()) +
                                                  " roots exceed bound " + std::to_string(loc.bound));
  }
  if (o.ok) o.detail = "3 examples + " + std::to_string(tested) + " random (" + std::to_string(skipped) + " inseparable skipped)";
  return o;
}

Outcome trend() {
  Outcome o;
  SweepConfig cfg;
  cfg.problem = Problem::goldbach;
  cfg.n = 3;
  cfg.q_list = {5, 7, 9, 11, 13, 17, 19, 23, 25, 27};
  cfg.sampling = Sampling::random(10, 1);
  cfg.jobs = kJobs;
  const auto rows = sweep(cfg);
  std::map<std::uint64_t, std::pair<double, int>> dev;
  for (const auto& r : rows) {
    o.require(r.error.empty() && r.ratio.has_value(), "cell failed at q=" + std::to_string(r.q));
    if (!r.ratio) continue;
    dev[r.q].first += std::abs(*r.ratio - 1.0);
    dev[r.q].second += 1;
  }
  auto mean = [&](std::initializer_list<std::uint64_t> qs) {
    double s = 0;
    int c = 0;
    for (auto q : qs) {
      s += dev[q].first;
      c += dev[q].second;
    }
    return c ? s / c : NAN;
  };
  const double low = mean({5, 7, 9}), high = mean({23, 25, 27});
  o.require(high < low, "mean |ratio - 1|: top-3 q " + std::to_string(high) + " vs bottom-3 q " + std::to_string(low));
  char buf[160];
  std::snprintf(buf, sizeof buf, "mean |ratio - 1| bottom-3 q %.4f, top-3 q %.4f", low, high);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{
      {"goldbach", "sweep", "--q", "3,5,7,9,11,13", "--n", "2", "--sample", "all"},
      {"verify", "identities", "--p", "3", "--n", "3"},
      {"verify", "identities", "--p", "5", "--n", "2"},
      {"twin", "sweep", "--q", "3,5", "--n", "2", "--sample", "all", "--format", "json"},
      {"goldbach", "sweep", "--q", "5,7,9,11,13,17,19,23,25,27", "--n", "3", "--sample", "random:10", "--seed", "1"},
  };
  for (const auto& base : commands) {
    std::string first;
    for (const char* jobs : {"1", "4", "1", "3"}) {
      auto args = base;
      args.push_back("--jobs");
      args.push_back(jobs);
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      o.require(code == 0, base[0] + " " + base[1] + " exited " + std::to_string(code));
      if (first.empty())
        first = out.str();
      else
        o.require(out.str() == first, base[0] + " " + base[1] + " output differs with --jobs " + jobs);
    }
  }
  if (o.ok) o.detail = "5 commands x 4 runs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"irreducible counts: enumeration = formula, q <= 16, d <= 5", 60, irreducible_counts},
      {"quadratic Goldbach law R = (q-1)/2", 60, quadratic_law},
      {"characteristic 2: R(t^2 + t + a) = 0 for q in {2,4,8}", 60, char2_obstruction},
      {"global sum identities", 120, sum_identities},
      {"fiber constancy", 120, fiber_constancy},
      {"double counting", 120, double_counting},
      {"singular series refinement and q = 2 zeros", 60, series_refinement},
      {"discriminant locus bound", 120, disc_locus_bound},
      {"trend toward the main term for n = 3", 300, trend},
      {"CLI determinism across --jobs", 600, cli_determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      o.ok = false;
      o.detail += " (runtime over " + std::to_string(static_cast<int>(c.limit_s)) + " s)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << c.name << " [" << timing << "] "
              << o.detail << std::endl;
    failed += o.ok ? 0 : 1;
  }
  return failed;
}
