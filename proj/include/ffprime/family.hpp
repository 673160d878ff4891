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

// Shift-specialization families of bivariate polynomials.
//
// A family member is f(x, t) of total degree d such that f(t + b, t) is monic
// of degree d in t for every b. Writing f = sum_{i=0}^{d} c_i(x) t^i with
// deg c_i <= d - i, the t^d coefficient of f(t + b, t) is the sum of the
// top-degree coefficients sum_i [x^{d-i}] c_i, which does not depend on b.
// Membership is therefore the single affine condition that this sum is 1,
// and fixing every coefficient except [x^d] c_0 parametrizes the family:
// its size is q^I with I = (d+1)(d+2)/2 - 1.
//
// For the Goldbach target of degree n the family has d = n - 1; for twins of
// degree n it has d = n. In both cases I = binom(d + 2, 2) - 1.
//
// Each monic g of degree d is hit by exactly q^{I+1-d} pairs (f, b): for
// each b and each free choice of c_1 .. c_d the polynomial
//   c_0(x) = g(x - b) - sum_{i>=1} c_i(x) (x - b)^i
// is the unique completion with f(t + b, t) = g.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ffprime/counting.hpp"
#include "ffprime/poly.hpp"

namespace ffprime {

struct FamilySpec {
  Problem problem = Problem::goldbach;
  Field field;
  /// Degree of the Goldbach target F, or of the twin polynomials.
  std::size_t n = 0;
  /// Total degree of members.
  std::size_t d = 0;
  /// log_q of the family size.
  std::size_t I = 0;

  static FamilySpec make(Problem problem, const Field& field, std::size_t n);

  BigInt expected_size() const;
  /// q^{I+1-d}, the constant fiber size.
  BigInt expected_fiber() const;
};

bool family_member(const BiPoly& f, const FamilySpec& fam);

/// The member with free-coefficient index `index` in [0, q^I). Digits, least
/// significant first: [x^0..x^{d-1}] c_0, then [x^0..x^{d-i}] c_i for i = 1..d.
BiPoly family_member_at(const FamilySpec& fam, std::uint64_t index);

/// The unique c_0 making f = c_0(x) + sum_{i>=1} c[i-1](x) t^i a member with
/// f(t + b, t) = g. Requires deg c_i <= d - i where d = c.size(), and g monic
/// of degree d.
BiPoly complete_c0(std::span<const Poly> c, Elem b, const Poly& g);

struct FiberReport {
  FamilySpec family;
  /// N_g for every monic g of degree d, in encoding order.
  std::vector<std::pair<Poly, std::uint64_t>> per_g;
  BigInt expected;
  std::uint64_t members = 0;
  std::uint64_t total_pairs = 0;

  bool constant() const;
  bool total_ok() const;
};

FiberReport fiber_counts(const FamilySpec& fam, unsigned jobs = 1, std::uint64_t budget = default_budget());

/// Membership count over every bivariate of total degree <= d; the slow
/// cross-check of the parametrized enumeration.
std::uint64_t family_size_by_filter(const FamilySpec& fam, std::uint64_t budget = default_budget());

struct DoubleCount {
  /// N_g times the direct count.
  BigInt lhs;
  /// sum over members f of #{b : both specializations irreducible}.
  BigInt rhs;
  BigInt ng;
  std::uint64_t direct_count = 0;
  bool holds() const { return lhs == rhs; }
};

/// input is F (Goldbach, degree fam.n) or A (twin, degree < fam.n).
DoubleCount double_count_check(const FamilySpec& fam, const Poly& input, unsigned jobs = 1,
                               std::uint64_t budget = default_budget());

class InseparableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DiscLocus {
  Poly discriminant;
  std::vector<Elem> roots;
  std::uint64_t bound = 0;
};

/// f(t, u): roots are the u = b where the t-discriminant vanishes; bound is
/// (2n - 1) m with n = deg_t f and m = deg_u f. Throws InseparableError when
/// the discriminant is identically zero.
DiscLocus disc_locus(const BiPoly& f);

}  // namespace ffprime
