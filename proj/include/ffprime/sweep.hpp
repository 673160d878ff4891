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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffprime/counting.hpp"
#include "ffprime/heuristic.hpp"

namespace ffprime {

struct Sampling {
  enum class Kind { all, random };
  Kind kind = Kind::all;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  static Sampling all() { return {}; }
  static Sampling random(std::uint64_t count, std::uint64_t seed) { return {Kind::random, count, seed}; }
};

/// Input indices for one field: monic index of F for Goldbach, base-q index
/// of A (nonzero) for twin. Random draws for a given q depend only on
/// (seed, q, draw number), never on the other fields in a sweep. Sorted.
std::vector<std::uint64_t> sample_inputs(Problem problem, std::uint64_t q, std::size_t n, const Sampling& s,
                                         std::uint64_t budget = default_budget());

/// The input polynomial a sample index denotes.
Poly input_from_index(Problem problem, const Field& f, std::size_t n, std::uint64_t index);

struct SweepConfig {
  Problem problem = Problem::goldbach;
  std::size_t n = 2;
  std::vector<std::uint64_t> q_list;
  Sampling sampling;
  std::optional<unsigned> trunc_D;
  unsigned jobs = 1;
  std::uint64_t budget = default_budget();
  bool loose_summand = false;
  /// Fill elapsed_ms. Off by default so output is byte-reproducible.
  bool timing = false;
};

/// One flat output row; the CSV/JSON emitters serialize exactly these fields.
struct TableRow {
  std::string problem;
  std::uint64_t q = 0;
  std::size_t n = 0;
  /// Canonical comma-list form of F or A.
  std::string input;
  std::optional<std::uint64_t> count;
  std::optional<double> main_term;
  std::optional<double> series_value;
  std::optional<double> series_err;
  std::optional<double> ratio;
  std::optional<double> err_t1;
  std::optional<double> err_t2;
  std::optional<double> elapsed_ms;
  /// Per-cell failure; when set the numeric fields are empty.
  std::string error;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

TableRow make_row(const CountReport& report, const Comparison& cmp, bool timing);

/// Rows sorted by (q, input index). Per-cell failures are recorded in-row.
/// Output does not depend on cfg.jobs.
std::vector<TableRow> sweep(const SweepConfig& cfg);

}  // namespace ffprime
