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

#include "ffprime/family.hpp"

#include <stdexcept>

#include "ffprime/kernels.hpp"
#include "ffprime/parallel.hpp"

namespace ffprime {

namespace {

BigInt big_pow(std::uint64_t q, std::size_t e) { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e)); }

std::uint64_t to_u64(const BigInt& v, std::uint64_t budget, const char* what) {
  if (v > budget) throw BudgetExceeded(std::string(what) + " exceeds the enumeration budget of " + std::to_string(budget));
  return static_cast<std::uint64_t>(v);
}

}  // namespace

FamilySpec FamilySpec::make(Problem problem, const Field& field, std::size_t n) {
  if (problem == Problem::goldbach && n < 2) throw std::invalid_argument("Goldbach family needs n >= 2");
  if (problem == Problem::twin && n < 1) throw std::invalid_argument("twin family needs n >= 1");
  const std::size_t d = problem == Problem::goldbach ? n - 1 : n;
  return FamilySpec{problem, field, n, d, (d + 1) * (d + 2) / 2 - 1};
}

BigInt FamilySpec::expected_size() const { return big_pow(field.q(), I); }

BigInt FamilySpec::expected_fiber() const { return big_pow(field.q(), I + 1 - d); }

bool family_member(const BiPoly& f, const FamilySpec& fam) {
  if (!(f.field() == fam.field)) return false;
  if (f.total_degree() != Degree(fam.d)) return false;
  for (Elem b = 0; b < fam.field.q(); ++b) {
    const Poly g = f.specialize_shift(b);
    if (g.degree() != Degree(fam.d) || !g.is_monic()) return false;
  }
  return true;
}

BiPoly family_member_at(const FamilySpec& fam, std::uint64_t index) {
  const Field& F = fam.field;
  const std::size_t d = fam.d;
  auto digit = [&] {
    const Elem v = static_cast<Elem>(index % F.q());
    index /= F.q();
    return v;
  };
  std::vector<std::vector<Elem>> c(d + 1);
  c[0].assign(d + 1, 0);
  for (std::size_t k = 0; k < d; ++k) c[0][k] = digit();
  Elem top_sum = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    c[i].assign(d - i + 1, 0);
    for (auto& v : c[i]) v = digit();
    top_sum = F.add(top_sum, c[i][d - i]);
  }
  c[0][d] = F.sub(1, top_sum);

  std::vector<Poly> polys;
  polys.reserve(d + 1);
  for (auto& row : c) polys.emplace_back(F, std::move(row));
  return BiPoly::from_y_powers(F, polys);
}

BiPoly complete_c0(std::span<const Poly> c, Elem b, const Poly& g) {
  const Field& F = g.field();
  const std::size_t d = c.size();
  if (!g.is_monic() || g.degree() != Degree(d)) throw std::invalid_argument("g must be monic of degree d");
  for (std::size_t i = 1; i <= d; ++i) {
    if (!(c[i - 1].field() == F)) throw FieldMismatch("coefficient polynomial over a different field");
    if (c[i - 1].degree() > Degree(d - i)) throw std::invalid_argument("deg c_i must not exceed d - i");
  }
  // c_0(x) = g(x - b) - sum_i c_i(x) (x - b)^i
  const Poly lin(F, {F.neg(b), 1});
  Poly c0 = g.shifted(F.neg(b));
  Poly power = lin;
  for (std::size_t i = 1; i <= d; ++i) {
    c0 -= c[i - 1] * power;
    power = power * lin;
  }
  std::vector<Poly> all;
  all.reserve(d + 1);
  all.push_back(std::move(c0));
  for (const auto& ci : c) all.push_back(ci);
  return BiPoly::from_y_powers(F, all);
}

bool FiberReport::constant() const {
  for (const auto& [g, count] : per_g)
    if (BigInt(count) != expected) return false;
  return !per_g.empty();
}

bool FiberReport::total_ok() const { return BigInt(total_pairs) == family.expected_size() * family.field.q(); }

FiberReport fiber_counts(const FamilySpec& fam, unsigned jobs, std::uint64_t budget) {
  const Field& F = fam.field;
  const std::uint64_t members = to_u64(fam.expected_size(), budget, "family size");
  to_u64(fam.expected_size() * F.q(), budget, "pair count");
  const std::uint64_t targets = monic_count(F.q(), fam.d, budget);

  const auto ranges = split_range(members, jobs > 1 ? std::size_t{jobs} * 8 : 1);
  std::vector<std::vector<std::uint64_t>> tallies(ranges.size());
  parallel_for(ranges.size(), jobs, [&](std::size_t r) {
    auto& tally = tallies[r];
    tally.assign(targets, 0);
    for (std::uint64_t idx = ranges[r].first; idx < ranges[r].second; ++idx) {
      const BiPoly f = family_member_at(fam, idx);
      for (Elem b = 0; b < F.q(); ++b) {
        const Poly g = f.specialize_shift(b);
        if (!g.is_monic() || g.degree() != Degree(fam.d))
          throw std::logic_error("family member specialized to a non-monic polynomial");
        ++tally[poly_index(g, fam.d)];
      }
    }
  });

  FiberReport rep{fam, {}, fam.expected_fiber(), members, 0};
  rep.per_g.reserve(targets);
  for (std::uint64_t g = 0; g < targets; ++g) {
    std::uint64_t n = 0;
    for (const auto& t : tallies) n += t.empty() ? 0 : t[g];
    rep.total_pairs += n;
    rep.per_g.emplace_back(monic_from_index(F, fam.d, g), n);
  }
  return rep;
}

std::uint64_t family_size_by_filter(const FamilySpec& fam, std::uint64_t budget) {
  const Field& F = fam.field;
  const std::size_t d = fam.d;
  std::vector<std::pair<std::size_t, std::size_t>> monomials;
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; i + j <= d; ++j) monomials.emplace_back(i, j);
  const std::uint64_t total = monic_count(F.q(), monomials.size(), budget);

  std::uint64_t hits = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::vector<Elem>> rows(d + 1, std::vector<Elem>(d + 1, 0));
    std::uint64_t rest = idx;
    for (auto [i, j] : monomials) {
      rows[i][j] = static_cast<Elem>(rest % F.q());
      rest /= F.q();
    }
    if (family_member(BiPoly(F, std::move(rows)), fam)) ++hits;
  }
  return hits;
}

DoubleCount double_count_check(const FamilySpec& fam, const Poly& input, unsigned jobs, std::uint64_t budget) {
  const Field& F = fam.field;
  if (!(input.field() == F)) throw FieldMismatch("input polynomial over a different field");
  CountOptions opts;
  opts.budget = budget;
  opts.jobs = jobs;
  std::uint64_t direct = 0;
  if (fam.problem == Problem::goldbach) {
    if (input.degree() != Degree(fam.n)) throw std::invalid_argument("Goldbach target must have degree n");
    direct = goldbach_count(input, opts).count;
  } else {
    direct = twin_count(F, fam.n, input, opts).count;
  }

  const std::uint64_t members = to_u64(fam.expected_size(), budget, "family size");
  const auto ranges = split_range(members, jobs > 1 ? std::size_t{jobs} * 8 : 1);
  std::vector<std::uint64_t> partial(ranges.size(), 0);
  const bool goldbach = fam.problem == Problem::goldbach;
  parallel_for(ranges.size(), jobs, [&](std::size_t r) {
    for (std::uint64_t idx = ranges[r].first; idx < ranges[r].second; ++idx) {
      const BiPoly f = family_member_at(fam, idx);
      for (Elem b = 0; b < F.q(); ++b) {
        const Poly g = f.specialize_shift(b);
        if (!is_irreducible(g)) continue;
        if (is_irreducible(goldbach ? input - g : g + input)) ++partial[r];
      }
    }
  });

  DoubleCount out;
  out.ng = fam.expected_fiber();
  out.direct_count = direct;
  out.lhs = out.ng * direct;
  for (auto p : partial) out.rhs += p;
  return out;
}

DiscLocus disc_locus(const BiPoly& f) {
  if (f.deg_x() < Degree(1)) throw std::invalid_argument("disc_locus needs positive degree in t");
  const Field& F = f.field();
  const std::size_t n = f.deg_x().value();
  const std::size_t m = f.deg_y().value();
  DiscLocus out{discriminant_x(f), {}, static_cast<std::uint64_t>((2 * n - 1) * m)};
  if (out.discriminant.is_zero())
    throw InseparableError("t-discriminant vanishes identically; the polynomial is inseparable");

  const auto xs = F.elements();
  std::vector<Elem> values(xs.size());
  if (F.is_prime_field()) {
    kernels::active().eval_many(out.discriminant.coeffs(), xs, values, F.p());
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i) values[i] = out.discriminant.eval(xs[i]);
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (values[i] == 0) out.roots.push_back(xs[i]);
  return out;
}

}  // namespace ffprime
