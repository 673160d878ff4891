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


#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ffprime/sweep.hpp"

using namespace ffprime;

TEST_SUITE("sweep") {

TEST_CASE("exhaustive Goldbach sweep") {
  SweepConfig cfg;
  cfg.problem = Problem::goldbach;
  cfg.n = 2;
  cfg.q_list = {7, 3, 5};
  const auto rows = sweep(cfg);
  REQUIRE(rows.size() == 9 + 25 + 49);
  CHECK(rows.front().q == 3);
  CHECK(rows.back().q == 7);
  for (const auto& r : rows) {
    CHECK(r.error.empty());
    REQUIRE(r.ratio);
    CHECK(std::isfinite(*r.ratio));
    CHECK(*r.count == (r.q - 1) / 2);
    CHECK_FALSE(r.elapsed_ms);
  }
}

TEST_CASE("twin sweep over constants") {
  SweepConfig cfg;
  cfg.problem = Problem::twin;
  cfg.n = 1;
  cfg.q_list = {3};
  const auto rows = sweep(cfg);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) CHECK(*r.count == 3);
}

TEST_CASE("empty field list") {
  SweepConfig cfg;
  CHECK(sweep(cfg).empty());
}

TEST_CASE("sampling") {
  const auto s = Sampling::random(10, 42);
  const auto a = sample_inputs(Problem::goldbach, 9, 3, s);
  CHECK(a.size() == 10);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  CHECK(a == sample_inputs(Problem::goldbach, 9, 3, s));
  CHECK(a != sample_inputs(Problem::goldbach, 9, 3, Sampling::random(10, 43)));
  for (auto i : a) CHECK(i < 729);
  const auto t = sample_inputs(Problem::twin, 3, 2, Sampling::random(100, 1));
  CHECK(t.size() == 8);
  CHECK(t.front() == 1);
}

TEST_CASE("a field's sample does not depend on the other fields") {
  SweepConfig one, two;
  one.problem = two.problem = Problem::goldbach;
  one.n = two.n = 3;
  one.sampling = two.sampling = Sampling::random(4, 7);
  one.q_list = {5};
  two.q_list = {3, 5};
  const auto a = sweep(one), b = sweep(two);
  std::vector<TableRow> b5;
  for (const auto& r : b)
    if (r.q == 5) b5.push_back(r);
  CHECK(a == b5);
}

TEST_CASE("job count does not change rows") {
  SweepConfig cfg;
  cfg.problem = Problem::goldbach;
  cfg.n = 3;
  cfg.q_list = {3, 4, 5};
  cfg.sampling = Sampling::random(6, 3);
  cfg.trunc_D = 6;
  const auto a = sweep(cfg);
  cfg.jobs = 4;
  CHECK(sweep(cfg) == a);
}

TEST_CASE("budget applies to input listing") {
  SweepConfig cfg;
  cfg.problem = Problem::goldbach;
  cfg.n = 4;
  cfg.q_list = {5};
  cfg.budget = 100;
  CHECK_THROWS_AS(sweep(cfg), BudgetExceeded);
}

}  // TEST_SUITE
