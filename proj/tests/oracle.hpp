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


// Slow, self-contained reference implementations used only by the tests.
// Nothing here calls into the library: elements are digit vectors reduced
// by schoolbook polynomial division, and irreducibility is trial division.

#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // ascending, trimmed

struct Field {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // monic, ascending, degree k (empty for k == 1)

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(k);
    for (auto& x : d) {
      x = a % p;
      a /= p;
    }
    return d;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (std::uint32_t i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }
  std::uint32_t neg(std::uint32_t a) const {
    auto x = digits(a);
    for (auto& v : x) v = (p - v) % p;
    return encode(x);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    auto x = digits(a), y = digits(b);
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    for (std::size_t i = 2 * k - 2; i >= k; --i) {
      const std::uint64_t c = prod[i];
      if (c == 0) continue;
      for (std::uint32_t j = 0; j <= k; ++j) prod[i - k + j] = (prod[i - k + j] + (p - c) * modulus[j]) % p;
    }
    std::vector<std::uint32_t> low(k);
    for (std::uint32_t i = 0; i < k; ++i) low[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(low);
  }
};

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly add(const Field& F, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly sub(const Field& F, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

/// Remainder of a by a monic g.
inline Poly rem_monic(const Field& F, Poly a, const Poly& g) {
  trim(a);
  while (a.size() >= g.size()) {
    const std::uint32_t c = a.back();
    const std::size_t s = a.size() - g.size();
    for (std::size_t j = 0; j < g.size(); ++j) a[s + j] = F.sub(a[s + j], F.mul(c, g[j]));
    trim(a);
  }
  return a;
}

inline Poly monic_at(const Field& F, std::size_t d, std::uint64_t index) {
  Poly f(d + 1, 0);
  f[d] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(index % F.q);
    index /= F.q;
  }
  return f;
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Trial division by every monic of degree 1 .. deg/2.
inline bool irreducible(const Field& F, const Poly& f) {
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  Poly m = f;
  if (m.back() != 1) {
    // scale to monic by brute-force inverse
    std::uint32_t inv = 1;
    while (F.mul(inv, m.back()) != 1) ++inv;
    for (auto& c : m) c = F.mul(c, inv);
  }
  for (std::size_t d = 1; d <= n / 2; ++d)
    for (std::uint64_t i = 0; i < ipow(F.q, d); ++i)
      if (rem_monic(F, m, monic_at(F, d, i)).empty()) return false;
  return true;
}

inline std::uint64_t count_irreducible(const Field& F, std::size_t d) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 0; i < ipow(F.q, d); ++i) c += irreducible(F, monic_at(F, d, i)) ? 1 : 0;
  return c;
}

inline std::uint64_t goldbach(const Field& F, const Poly& target) {
  const std::size_t n = target.size() - 1;
  std::uint64_t c = 0;
  for (std::uint64_t i = 0; i < ipow(F.q, n - 1); ++i) {
    const Poly g = monic_at(F, n - 1, i);
    if (irreducible(F, g) && irreducible(F, sub(F, target, g))) ++c;
  }
  return c;
}

inline std::uint64_t twin(const Field& F, std::size_t n, const Poly& A) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 0; i < ipow(F.q, n); ++i) {
    const Poly g = monic_at(F, n, i);
    if (irreducible(F, g) && irreducible(F, add(F, g, A))) ++c;
  }
  return c;
}

}  // namespace oracle
