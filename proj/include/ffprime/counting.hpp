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

// Exact Goldbach and twin-pair counts over GF(q)[t].
//
// A Goldbach representation of a monic F of degree n >= 2 is F = g + h with
// g, h monic irreducible, deg g = n - 1 and deg h = n. R(F; q) counts the
// summands g. The twin count pi2(n; A, q) counts monic irreducible F of
// degree n with F + A irreducible, for nonzero A of degree below n.
//
// Two global identities hold by bijection and serve as oracles:
//
//   sum over monic F of degree n of R(F; q) = pi_q(n-1) * pi_q(n)
//     since (g, h) -> (g + h, g) is a bijection between pairs of monic
//     irreducibles of degrees (n-1, n) and pairs (F, g) with g a summand of F.
//
//   sum over nonzero A with deg A < n of pi2(n; A, q) = pi_q(n)^2 - pi_q(n)
//     since an ordered pair (F, G) of distinct monic irreducibles of degree
//     n determines A = G - F, which is nonzero of degree below n.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ffprime/field.hpp"
#include "ffprime/irreducible.hpp"
#include "ffprime/poly.hpp"

namespace ffprime {

enum class Problem { goldbach, twin };

std::string_view problem_name(Problem p);
Problem parse_problem(std::string_view s);

struct CountOptions {
  bool keep_witnesses = false;
  /// Goldbach only: accept summands of any degree 1..n-1, not just n-1.
  bool loose_summand = false;
  unsigned jobs = 1;
  std::uint64_t budget = default_budget();
};

struct CountReport {
  Problem problem = Problem::goldbach;
  Field field;
  std::size_t n = 0;
  /// F for Goldbach, A for twin.
  Poly input;
  std::uint64_t count = 0;
  /// Summands g (Goldbach) or twin leaders F (twin), in encoding order.
  std::optional<std::vector<Poly>> witnesses;
  double elapsed_ms = 0;
};

CountReport goldbach_count(const Poly& F, const CountOptions& opts = {});
CountReport twin_count(const Field& field, std::size_t n, const Poly& A, const CountOptions& opts = {});

struct IdentityCheck {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

IdentityCheck goldbach_sum_identity(const Field& field, std::size_t n, unsigned jobs = 1,
                                    std::uint64_t budget = default_budget());
IdentityCheck twin_sum_identity(const Field& field, std::size_t n, unsigned jobs = 1,
                                std::uint64_t budget = default_budget());

/// The polynomial of length < len whose coefficients, read as base-q digits
/// with c_0 least significant, equal `index`.
Poly poly_from_index(const Field& f, std::size_t len, std::uint64_t index);

/// Inverse of poly_from_index / monic_from_index on the non-leading part.
std::uint64_t poly_index(const Poly& f, std::size_t len);

}  // namespace ffprime
