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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ffprime/poly.hpp"

namespace ffprime {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an enumeration would visit more items than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// kDefaultBudget, or the FFPRIME_BUDGET environment variable when set.
std::uint64_t default_budget();

/// Rabin's test, preceded for prime fields by a vectorized root count
/// (which alone decides degrees 2 and 3). Units are not irreducible.
bool is_irreducible(const Poly& f);

namespace detail {
/// Rabin's criterion with no prefilter, on a monic coefficient vector.
bool rabin_monic(const Field& f, std::span<const Elem> monic);
}  // namespace detail

struct Factor {
  Poly poly;
  unsigned multiplicity;
};

struct Factorization {
  Elem leading = 0;
  /// Monic irreducible factors sorted by (degree, encoding).
  std::vector<Factor> factors;

  Poly expand(const Field& f) const;
};

/// Squarefree split, distinct-degree split, then Cantor-Zassenhaus
/// equal-degree splitting. The splitting randomness is seeded from `seed`
/// and the input's coefficients, so results are reproducible.
Factorization factorize(const Poly& f, std::uint64_t seed = 0);

int moebius(std::uint64_t n);

/// Number of monic irreducibles of degree d over GF(q): (1/d) sum_{e|d} mu(d/e) q^e.
BigInt count_irreducible(std::uint64_t q, std::uint64_t d);

/// q^d, throwing BudgetExceeded when it exceeds `budget`.
std::uint64_t monic_count(std::uint64_t q, std::size_t d, std::uint64_t budget);

/// The monic degree-d polynomial whose non-leading coefficients, read as
/// base-q digits with c_0 least significant, equal `index`.
Poly monic_from_index(const Field& f, std::size_t d, std::uint64_t index);

enum class MonicFilter { all, irreducible };

/// All monic degree-d polynomials in increasing encoding order, optionally
/// only the irreducible ones.
std::vector<Poly> enumerate_monic(const Field& f, std::size_t d, MonicFilter filter = MonicFilter::all,
                                  std::uint64_t budget = default_budget());

/// Visits monic degree-d polynomials with index in [begin, end) in order,
/// as raw ascending coefficient vectors (leading 1 included). Disjoint
/// ranges visit disjoint sets, so ranges can be handed to separate workers.
template <class Visitor>
void for_each_monic(const Field& f, std::size_t d, std::uint64_t begin, std::uint64_t end, Visitor&& visit) {
  if (begin >= end) return;
  std::vector<Elem> c(d + 1, 0);
  c[d] = 1;
  std::uint64_t idx = begin;
  for (std::size_t i = 0; i < d; ++i) {
    c[i] = static_cast<Elem>(idx % f.q());
    idx /= f.q();
  }
  const Elem q = f.q();
  for (std::uint64_t n = begin;;) {
    visit(std::span<const Elem>(c));
    if (++n == end) break;
    for (std::size_t i = 0; i < d; ++i) {
      if (++c[i] < q) break;
      c[i] = 0;
    }
  }
}

}  // namespace ffprime
