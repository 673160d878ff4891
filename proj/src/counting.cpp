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

#include "ffprime/counting.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "ffprime/parallel.hpp"

namespace ffprime {

std::string_view problem_name(Problem p) { return p == Problem::goldbach ? "goldbach" : "twin"; }

Problem parse_problem(std::string_view s) {
  if (s == "goldbach") return Problem::goldbach;
  if (s == "twin") return Problem::twin;
  throw std::invalid_argument("unknown problem '" + std::string(s) + "'");
}

Poly poly_from_index(const Field& f, std::size_t len, std::uint64_t index) {
  std::vector<Elem> c(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    c[i] = static_cast<Elem>(index % f.q());
    index /= f.q();
  }
  return Poly(f, std::move(c));
}

std::uint64_t poly_index(const Poly& f, std::size_t len) {
  std::uint64_t idx = 0;
  for (std::size_t i = len; i-- > 0;) idx = idx * f.field().q() + f.coeff(i);
  return idx;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Partial {
  std::uint64_t count = 0;
  std::vector<Poly> witnesses;
};

// Scans monic polynomials of degree d over [0, q^d), testing `accept` on each
// irreducible candidate; chunks are merged in index order.
template <class Accept>
Partial scan_irreducible(const Field& f, std::size_t d, std::uint64_t total, unsigned jobs, bool keep,
                         Accept&& accept) {
  const auto ranges = split_range(total, jobs > 1 ? std::size_t{jobs} * 8 : 1);
  std::vector<Partial> parts(ranges.size());
  parallel_for(ranges.size(), jobs, [&](std::size_t r) {
    Partial& out = parts[r];
    for_each_monic(f, d, ranges[r].first, ranges[r].second, [&](std::span<const Elem> c) {
      Poly g(f, std::vector<Elem>(c.begin(), c.end()));
      if (!is_irreducible(g)) return;
      if (!accept(g)) return;
      ++out.count;
      if (keep) out.witnesses.push_back(std::move(g));
    });
  });
  Partial merged;
  for (auto& p : parts) {
    merged.count += p.count;
    for (auto& w : p.witnesses) merged.witnesses.push_back(std::move(w));
  }
  return merged;
}

}  // namespace

CountReport goldbach_count(const Poly& F, const CountOptions& opts) {
  const auto start = Clock::now();
  if (F.is_zero() || !F.is_monic()) throw std::invalid_argument("Goldbach target must be monic");
  const std::size_t n = F.degree().value();
  if (n < 2) throw std::invalid_argument("Goldbach target must have degree at least 2");
  const Field& field = F.field();

  CountReport rep{Problem::goldbach, field, n, F, 0, std::nullopt, 0};
  auto accept = [&](const Poly& g) { return is_irreducible(F - g); };
  Partial all;
  const std::size_t lowest = opts.loose_summand ? 1 : n - 1;
  for (std::size_t d = lowest; d <= n - 1; ++d) {
    const std::uint64_t total = monic_count(field.q(), d, opts.budget);
    Partial part = scan_irreducible(field, d, total, opts.jobs, opts.keep_witnesses, accept);
    all.count += part.count;
    for (auto& w : part.witnesses) all.witnesses.push_back(std::move(w));
  }
  rep.count = all.count;
  if (opts.keep_witnesses) rep.witnesses = std::move(all.witnesses);
  rep.elapsed_ms = ms_since(start);
  return rep;
}

CountReport twin_count(const Field& field, std::size_t n, const Poly& A, const CountOptions& opts) {
  const auto start = Clock::now();
  if (!(A.field() == field)) throw FieldMismatch("shift polynomial is over a different field");
  if (A.is_zero()) throw std::invalid_argument("twin shift A must be nonzero");
  if (n < 1 || A.degree() >= Degree(n)) throw std::invalid_argument("twin shift A must have degree below n");

  CountReport rep{Problem::twin, field, n, A, 0, std::nullopt, 0};
  const std::uint64_t total = monic_count(field.q(), n, opts.budget);
  Partial part =
      scan_irreducible(field, n, total, opts.jobs, opts.keep_witnesses, [&](const Poly& F) { return is_irreducible(F + A); });
  rep.count = part.count;
  if (opts.keep_witnesses) rep.witnesses = std::move(part.witnesses);
  rep.elapsed_ms = ms_since(start);
  return rep;
}

IdentityCheck goldbach_sum_identity(const Field& field, std::size_t n, unsigned jobs, std::uint64_t budget) {
  if (n < 2) throw std::invalid_argument("Goldbach identity needs n >= 2");
  const std::uint64_t total = monic_count(field.q(), n, budget);
  monic_count(field.q(), n - 1, budget);
  std::vector<std::uint64_t> counts(total, 0);
  CountOptions inner;
  inner.budget = budget;
  parallel_for(total, jobs, [&](std::size_t i) { counts[i] = goldbach_count(monic_from_index(field, n, i), inner).count; });
  IdentityCheck out;
  for (auto c : counts) out.lhs += c;
  out.rhs = static_cast<std::uint64_t>(count_irreducible(field.q(), n - 1) * count_irreducible(field.q(), n));
  return out;
}

IdentityCheck twin_sum_identity(const Field& field, std::size_t n, unsigned jobs, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("twin identity needs n >= 1");
  const std::uint64_t total = monic_count(field.q(), n, budget);
  // Every nonzero A with deg A < n: indices 1 .. q^n - 1.
  std::vector<std::uint64_t> counts(total, 0);
  CountOptions inner;
  inner.budget = budget;
  parallel_for(total - 1, jobs, [&](std::size_t i) {
    counts[i + 1] = twin_count(field, n, poly_from_index(field, n, i + 1), inner).count;
  });
  IdentityCheck out;
  for (auto c : counts) out.lhs += c;
  const BigInt pi = count_irreducible(field.q(), n);
  out.rhs = static_cast<std::uint64_t>(pi * pi - pi);
  return out;
}

}  // namespace ffprime
