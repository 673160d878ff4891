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

#include "ffprime/heuristic.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace ffprime {

namespace {

void check_n(Problem problem, std::size_t n) {
  if (problem == Problem::goldbach && n < 2) throw std::invalid_argument("Goldbach needs n >= 2");
  if (problem == Problem::twin && n < 1) throw std::invalid_argument("twin problem needs n >= 1");
}

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt ipow(std::uint64_t base, std::size_t e) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e)); }

}  // namespace

BigRational main_term(Problem problem, std::size_t n, std::uint64_t q) {
  check_n(problem, n);
  if (problem == Problem::goldbach) return BigRational(ipow(q, n - 1), BigInt(n * (n - 1)));
  return BigRational(ipow(q, n), BigInt(n * n));
}

double series_tail_bound(std::uint64_t q, unsigned D) {
  const double qd = static_cast<double>(q);
  return 2.0 * std::pow(qd, -static_cast<double>(D + 1)) / ((D + 1) * (1.0 - 1.0 / qd));
}

SeriesValue singular_series(Problem problem, const Poly& input, unsigned D) {
  if (D < 1) throw std::invalid_argument("truncation degree must be at least 1");
  if (input.is_zero()) throw std::invalid_argument("singular series of the zero polynomial");
  if (problem == Problem::goldbach && (!input.is_monic() || input.degree() < Degree(2)))
    throw std::invalid_argument("Goldbach input must be monic of degree >= 2");

  const std::uint64_t q = input.field().q();
  const long double ql = static_cast<long double>(q);
  SeriesValue out;
  out.truncation_degree = D;

  // Distinct irreducible divisors, tallied by degree.
  std::map<std::size_t, std::uint64_t> dividing;
  long double value = 1.0L;
  if (input.degree() > Degree(0)) {
    for (const auto& fac : factorize(input).factors) {
      const std::size_t d = fac.poly.degree().value();
      ++dividing[d];
      value /= 1.0L - std::pow(ql, -static_cast<long double>(d));
    }
  }
  for (unsigned d = 1; d <= D; ++d) {
    const BigInt e = count_irreducible(q, d) - dividing[d];
    if (e == 0) continue;
    const long double qd = std::pow(ql, static_cast<long double>(d));
    if (qd - 1.0L == 1.0L) {
      // q = 2, d = 1: the factor 1 - 1/1 vanishes.
      out.zero_flag = true;
      out.value = 0;
      out.err_bound = 0;
      return out;
    }
    const long double x = 1.0L / ((qd - 1.0L) * (qd - 1.0L));
    value *= std::exp(e.convert_to<long double>() * std::log1p(-x));
  }
  out.value = static_cast<double>(value);
  out.err_bound = out.value * series_tail_bound(q, D);
  return out;
}

SeriesValue singular_series(Problem problem, const Poly& input) {
  const std::uint64_t q = input.field().q();
  unsigned D = 1;
  while (D < kMaxAutoDegree && series_tail_bound(q, D) >= kAutoRelativeError) ++D;
  SeriesValue s = singular_series(problem, input, D);
  s.capped = series_tail_bound(q, D) >= kAutoRelativeError;
  return s;
}

double BoundReport::term1() const {
  return term1_sqrt_coeff.convert_to<double>() * std::sqrt(static_cast<double>(q));
}

double BoundReport::term2_value() const { return term2.convert_to<double>(); }

BoundReport theorem_error_bound(Problem problem, std::size_t n, std::uint64_t q) {
  check_n(problem, n);
  BoundReport r;
  r.problem = problem;
  r.n = n;
  r.q = q;
  const std::size_t binom = (n + 2) * (n + 1) / 2;
  const BigInt two_pow = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(binom));
  const BigInt nn = BigInt(n) * n;
  if (problem == Problem::goldbach) {
    r.N = factorial(n - 1) * factorial(n);
    r.genus = 1 + r.N * (nn - 2 * BigInt(n));
    // N q^{n-3/2} = N q^{n-2} sqrt(q);  n 2^binom q^{n-2}
    r.term1_sqrt_coeff = r.N * ipow(q, n - 2);
    r.term2 = BigInt(n) * two_pow * ipow(q, n - 2);
  } else {
    r.N = factorial(n) * factorial(n);
    r.genus = 1 + r.N * (nn - BigInt(n) - 1);
    // N q^{n-1/2} = N q^{n-1} sqrt(q);  n 2^binom q^{n-1}
    r.term1_sqrt_coeff = r.N * ipow(q, n - 1);
    r.term2 = BigInt(n) * two_pow * ipow(q, n - 1);
  }
  return r;
}

Comparison compare(const CountReport& report, std::optional<unsigned> D) {
  Comparison c;
  c.count = report.count;
  c.main = main_term(report.problem, report.n, report.field.q());
  c.series = D ? singular_series(report.problem, report.input, *D) : singular_series(report.problem, report.input);
  c.predicted = c.main.convert_to<double>() * c.series.value;
  if (c.predicted > 0) c.ratio = static_cast<double>(c.count) / c.predicted;
  c.bounds = theorem_error_bound(report.problem, report.n, report.field.q());
  return c;
}

}  // namespace ffprime
