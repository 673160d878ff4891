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

#include "ffprime/irreducible.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "ffprime/kernels.hpp"

namespace ffprime {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FFPRIME_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

namespace {

std::vector<std::size_t> distinct_prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

namespace detail {

bool rabin_monic(const Field& f, std::span<const Elem> m) {
  const std::size_t n = m.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  // frob[i] = t^(q^i) mod m
  std::vector<Coeffs> frob(n + 1);
  frob[0] = {0, 1};
  for (std::size_t i = 1; i <= n; ++i) frob[i] = powmod_monic(f, frob[i - 1], f.q(), m);
  if (frob[n] != frob[0]) return false;
  const Coeffs mc(m.begin(), m.end());
  for (auto r : distinct_prime_divisors(n)) {
    Coeffs h = frob[n / r];
    if (h.size() < 2) h.resize(2, 0);
    h[1] = f.sub(h[1], 1);
    normalize(h);
    if (h.empty()) return false;
    const Coeffs g = gcd(f, h, mc);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

bool is_irreducible(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("irreducibility of the zero polynomial");
  const std::size_t n = f.degree().value();
  if (n == 0) return false;
  if (n == 1) return true;
  const Field& F = f.field();
  const Poly m = f.is_monic() ? f : f.monic();
  if (F.is_prime_field()) {
    const auto roots = kernels::active().count_roots(m.coeffs(), F.p());
    if (roots > 0) return false;
    if (n <= 3) return true;
  }
  return detail::rabin_monic(F, m.coeffs());
}

// ---------------------------------------------------------------------------
// Factorization

namespace {

using Pairs = std::vector<std::pair<Poly, unsigned>>;

Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  const std::int64_t frob_inv = F.q() / F.p();  // a^(1/p) = a^(q/p)
  const auto c = f.coeffs();
  std::vector<Elem> r(c.size() / F.p() + 1, 0);
  for (std::size_t i = 0; i < c.size(); i += F.p()) r[i / F.p()] = F.pow(c[i], frob_inv);
  return Poly(F, std::move(r));
}

// Squarefree decomposition of a monic polynomial.
Pairs squarefree(const Poly& f) {
  Pairs out;
  if (f.degree() == Degree(0)) return out;
  const Field& F = f.field();
  const Poly d = f.derivative();
  if (d.is_zero()) {
    for (auto& [g, m] : squarefree(pth_root(f))) out.emplace_back(std::move(g), m * F.p());
    return out;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.emplace_back(fac, i);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    for (auto& [g, m] : squarefree(pth_root(c))) out.emplace_back(std::move(g), m * F.p());
  }
  return out;
}

// Distinct-degree split of a monic squarefree polynomial: (product, degree).
std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, std::size_t>> out;
  const Field& F = f.field();
  const Poly t = Poly::var(F);
  Poly h = t % f;
  for (std::size_t i = 1; !f.degree().is_neg_inf() && f.degree().value() >= 2 * i; ++i) {
    h = pow_mod(h, F.q(), f);
    Poly g = gcd(h - t, f);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > Degree(0)) {
    const std::size_t d = f.degree().value();
    out.emplace_back(std::move(f), d);
  }
  return out;
}

void equal_degree(const Poly& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t n = g.degree().value();
  if (n == d) {
    out.push_back(g);
    return;
  }
  const Field& F = g.field();
  for (;;) {
    std::vector<Elem> a(n, 0);
    for (auto& c : a) c = static_cast<Elem>(rng() % F.q());
    Poly ap(F, std::move(a));
    if (ap.degree() < Degree(1)) continue;
    Poly split(F);
    if (F.p() == 2) {
      // Trace map a + a^2 + ... + a^(2^(kd-1)).
      Poly term = ap;
      Poly tr = ap;
      for (std::size_t j = 1; j < static_cast<std::size_t>(F.k()) * d; ++j) {
        term = pow_mod(term, 2, g);
        tr += term;
      }
      split = tr;
    } else {
      // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
      Poly term = ap % g;
      Poly norm = term;
      for (std::size_t j = 1; j < d; ++j) {
        term = pow_mod(term, F.q(), g);
        norm = (norm * term) % g;
      }
      split = pow_mod(norm, (F.q() - 1) / 2, g) - Poly::constant(F, 1);
    }
    if (split.is_zero()) continue;
    Poly h = gcd(split, g);
    const Degree hd = h.degree();
    if (hd > Degree(0) && hd < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

Poly Factorization::expand(const Field& f) const {
  Poly r = Poly::constant(f, leading);
  for (const auto& fac : factors)
    for (unsigned i = 0; i < fac.multiplicity; ++i) r = r * fac.poly;
  return r;
}

Factorization factorize(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("factorization of the zero polynomial");
  Factorization out;
  out.leading = f.leading();
  const Poly m = f.monic();

  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (auto c : m.coeffs()) h = (h ^ c) * 0x100000001b3ull;
  std::mt19937_64 rng(h);

  for (auto& [sq, mult] : squarefree(m)) {
    for (auto& [block, d] : distinct_degree(sq)) {
      std::vector<Poly> parts;
      equal_degree(block, d, rng, parts);
      for (auto& p : parts) out.factors.push_back({std::move(p), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return encoding_less(a.poly, b.poly); });
  return out;
}

// ---------------------------------------------------------------------------
// Counting and enumeration

int moebius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("moebius(0)");
  int mu = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

BigInt count_irreducible(std::uint64_t q, std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  BigInt sum = 0;
  for (std::uint64_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = moebius(d / e);
    if (mu == 0) continue;
    BigInt term = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e));
    sum += mu > 0 ? term : BigInt(-term);
  }
  return sum / d;
}

std::uint64_t monic_count(std::uint64_t q, std::size_t d, std::uint64_t budget) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (n > budget / q)
      throw BudgetExceeded("enumerating " + std::to_string(q) + "^" + std::to_string(d) +
                           " polynomials exceeds the budget of " + std::to_string(budget));
    n *= q;
  }
  if (n > budget) throw BudgetExceeded("enumeration exceeds the budget of " + std::to_string(budget));
  return n;
}

Poly monic_from_index(const Field& f, std::size_t d, std::uint64_t index) {
  std::vector<Elem> c(d + 1, 0);
  c[d] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    c[i] = static_cast<Elem>(index % f.q());
    index /= f.q();
  }
  return Poly(f, std::move(c));
}

std::vector<Poly> enumerate_monic(const Field& f, std::size_t d, MonicFilter filter, std::uint64_t budget) {
  const std::uint64_t total = monic_count(f.q(), d, budget);
  std::vector<Poly> out;
  for_each_monic(f, d, 0, total, [&](std::span<const Elem> c) {
    Poly p(f, std::vector<Elem>(c.begin(), c.end()));
    if (filter == MonicFilter::all || is_irreducible(p)) out.push_back(std::move(p));
  });
  return out;
}

}  // namespace ffprime
