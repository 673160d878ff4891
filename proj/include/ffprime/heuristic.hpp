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

// Conjectured main terms, singular series and theorem error terms.
//
// Both problems share the local-factor product
//
//   S(X) = prod_{P | X} (1 - 1/|P|)^{-1} * prod_{P does not divide X} (1 - 1/(|P| - 1)^2)
//
// over monic irreducible P, with |P| = q^deg P and X = F (Goldbach) or
// X = A (twin). Only the distinct irreducible divisors of X matter.
//
// Truncation at degree D drops, for each d > D, e_d <= pi_q(d) <= q^d / d
// factors equal to 1 - x_d with x_d = (q^d - 1)^{-2}. For d >= 2, q^d >= 4
// and x_d <= 1/9, so -log(1 - x_d) <= (9/8) x_d and q^d x_d <= (16/9) q^{-d}.
// Hence the omitted log-mass is
//
//   delta <= sum_{d > D} (2/d) q^{-d} <= 2 q^{-(D+1)} / ((D+1)(1 - 1/q)),
//
// and since every omitted factor lies in (0, 1), the full product equals
// value * exp(-delta), giving |value - full| <= value * delta. SeriesValue
// reports err_bound = value * (the right-hand side above).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>

#include "ffprime/counting.hpp"

namespace ffprime {

using BigRational = boost::multiprecision::cpp_rational;

/// q^{n-1} / (n(n-1)) for Goldbach (n >= 2), q^n / n^2 for twin (n >= 1).
BigRational main_term(Problem problem, std::size_t n, std::uint64_t q);

struct SeriesValue {
  double value = 0;
  unsigned truncation_degree = 0;
  double err_bound = 0;
  /// Some local factor is exactly zero (q = 2 with a linear P not dividing the input).
  bool zero_flag = false;
  /// The automatic truncation hit kMaxAutoDegree before reaching the target accuracy.
  bool capped = false;
};

inline constexpr unsigned kMaxAutoDegree = 20;
inline constexpr double kAutoRelativeError = 1e-12;

/// Relative truncation bound 2 q^{-(D+1)} / ((D+1)(1 - 1/q)).
double series_tail_bound(std::uint64_t q, unsigned D);

/// Product truncated at degree D >= 1 for the non-dividing primes.
SeriesValue singular_series(Problem problem, const Poly& input, unsigned D);

/// Least D whose relative tail bound is below kAutoRelativeError, capped at
/// kMaxAutoDegree (with `capped` set).
SeriesValue singular_series(Problem problem, const Poly& input);

/// Error terms of the asymptotic theorems with every implied constant set
/// to 1. These are raw magnitudes, not rigorous bounds.
struct BoundReport {
  Problem problem = Problem::goldbach;
  std::size_t n = 0;
  std::uint64_t q = 0;
  /// (n-1)! n! for Goldbach, n!^2 for twin.
  BigInt N;
  /// 1 + N(n^2 - 2n) for Goldbach, 1 + N(n^2 - n - 1) for twin.
  BigInt genus;
  /// term1 = term1_sqrt_coeff * sqrt(q).
  BigInt term1_sqrt_coeff;
  BigInt term2;

  double term1() const;
  double term2_value() const;
};

BoundReport theorem_error_bound(Problem problem, std::size_t n, std::uint64_t q);

struct Comparison {
  std::uint64_t count = 0;
  BigRational main;
  SeriesValue series;
  double predicted = 0;
  /// count / predicted; absent when predicted is zero.
  std::optional<double> ratio;
  BoundReport bounds;
};

/// Lines a count up against main term times singular series. D = nullopt
/// selects the truncation automatically.
Comparison compare(const CountReport& report, std::optional<unsigned> D = std::nullopt);

}  // namespace ffprime
