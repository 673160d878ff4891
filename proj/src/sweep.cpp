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

#include "ffprime/sweep.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ffprime/parallel.hpp"

namespace ffprime {

namespace {

// Size of the input space and the first valid index.
std::pair<std::uint64_t, std::uint64_t> input_space(Problem problem, std::uint64_t q, std::size_t n,
                                                    std::uint64_t budget) {
  const std::uint64_t total = monic_count(q, n, budget);
  if (problem == Problem::goldbach) return {0, total};
  return {1, total};  // A ranges over nonzero polynomials of degree < n
}

}  // namespace

std::vector<std::uint64_t> sample_inputs(Problem problem, std::uint64_t q, std::size_t n, const Sampling& s,
                                         std::uint64_t budget) {
  const auto [first, end] = input_space(problem, q, n, budget);
  std::vector<std::uint64_t> out;
  if (s.kind == Sampling::Kind::all || s.count >= end - first) {
    for (std::uint64_t i = first; i < end; ++i) out.push_back(i);
    return out;
  }
  std::set<std::uint64_t> chosen;
  for (std::uint64_t draw = 0; chosen.size() < s.count; ++draw) {
    std::seed_seq key{static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32),
                      static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(q >> 32),
                      static_cast<std::uint32_t>(draw), static_cast<std::uint32_t>(draw >> 32)};
    std::mt19937_64 gen(key);
    chosen.insert(first + gen() % (end - first));
  }
  out.assign(chosen.begin(), chosen.end());
  return out;
}

Poly input_from_index(Problem problem, const Field& f, std::size_t n, std::uint64_t index) {
  return problem == Problem::goldbach ? monic_from_index(f, n, index) : poly_from_index(f, n, index);
}

TableRow make_row(const CountReport& report, const Comparison& cmp, bool timing) {
  TableRow row;
  row.problem = std::string(problem_name(report.problem));
  row.q = report.field.q();
  row.n = report.n;
  row.input = format_poly(report.input);
  row.count = cmp.count;
  row.main_term = cmp.main.convert_to<double>();
  row.series_value = cmp.series.value;
  row.series_err = cmp.series.err_bound;
  row.ratio = cmp.ratio;
  row.err_t1 = cmp.bounds.term1();
  row.err_t2 = cmp.bounds.term2_value();
  if (timing) row.elapsed_ms = report.elapsed_ms;
  return row;
}

std::vector<TableRow> sweep(const SweepConfig& cfg) {
  struct Cell {
    std::uint64_t q;
    std::uint64_t index;
  };
  std::vector<Cell> cells;
  std::vector<Field> fields;
  std::vector<std::uint64_t> qs = cfg.q_list;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

  std::vector<std::size_t> field_of;
  for (auto q : qs) {
    fields.push_back(Field::of_order(q));
    for (auto idx : sample_inputs(cfg.problem, q, cfg.n, cfg.sampling, cfg.budget)) {
      cells.push_back({q, idx});
      field_of.push_back(fields.size() - 1);
    }
  }

  std::vector<TableRow> rows(cells.size());
  CountOptions opts;
  opts.budget = cfg.budget;
  opts.loose_summand = cfg.loose_summand;
  parallel_for(cells.size(), cfg.jobs, [&](std::size_t i) {
    const Field& f = fields[field_of[i]];
    const Poly input = input_from_index(cfg.problem, f, cfg.n, cells[i].index);
    try {
      const CountReport rep =
          cfg.problem == Problem::goldbach ? goldbach_count(input, opts) : twin_count(f, cfg.n, input, opts);
      rows[i] = make_row(rep, compare(rep, cfg.trunc_D), cfg.timing);
    } catch (const std::exception& e) {
      TableRow r;
      r.problem = std::string(problem_name(cfg.problem));
      r.q = cells[i].q;
      r.n = cfg.n;
      r.input = format_poly(input);
      r.error = e.what();
      rows[i] = std::move(r);
    }
  });
  return rows;
}

}  // namespace ffprime
