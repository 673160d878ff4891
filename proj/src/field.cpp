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

#include "ffprime/field.hpp"

#include <numeric>
#include <sstream>

#include "ffprime/irreducible.hpp"
#include "ffprime/poly.hpp"

namespace ffprime {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1 || p > 0xffffffffu) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), k);
}

namespace {

std::uint64_t checked_power(std::uint64_t p, std::uint64_t k) {
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (q > 0xffffffffull / p) throw FieldError("field order p^k does not fit in 32 bits");
    q *= p;
  }
  return q;
}

// Power-basis coordinate arithmetic, used only while building tables.
class DigitArith {
 public:
  DigitArith(std::uint32_t p, const std::vector<std::uint32_t>& modulus)
      : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(modulus) {}

  std::vector<std::uint32_t> decode(Elem a) const {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  Elem encode(const std::vector<std::uint32_t>& d) const {
    std::uint64_t e = 0;
    for (std::uint32_t i = k_; i-- > 0;) e = e * p_ + d[i];
    return static_cast<Elem>(e);
  }

  Elem mul(Elem a, Elem b) const {
    auto x = decode(a);
    auto y = decode(b);
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
      for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
    // Reduce by the monic modulus from the top down.
    for (std::size_t i = prod.size(); i-- > k_;) {
      std::uint64_t c = prod[i];
      if (c == 0) continue;
      for (std::uint32_t j = 0; j < k_; ++j) {
        std::uint64_t sub = c * modulus_[j] % p_;
        prod[i - k_ + j] = (prod[i - k_ + j] + p_ - sub) % p_;
      }
      prod[i] = 0;
    }
    std::vector<std::uint32_t> r(k_);
    for (std::uint32_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(r);
  }

  Elem add(Elem a, Elem b) const {
    auto x = decode(a);
    auto y = decode(b);
    for (std::uint32_t i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

 private:
  std::uint32_t p_;
  std::uint32_t k_;
  const std::vector<std::uint32_t>& modulus_;
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::shared_ptr<const Field::Data> Field::build_extension(std::uint32_t p, std::uint32_t k,
                                                          std::vector<std::uint32_t> modulus) {
  auto d = std::make_shared<Data>();
  d->p = p;
  d->k = k;
  d->q = static_cast<std::uint32_t>(checked_power(p, k));
  d->modulus = std::move(modulus);
  const std::uint32_t q = d->q;
  const std::uint32_t order = q - 1;

  DigitArith arith(p, d->modulus);
  const auto factors = prime_factors(order);
  auto is_primitive = [&](Elem g) {
    for (auto r : factors)
      if (arith.pow(g, order / r) == 1) return false;
    return true;
  };
  // The modulus root alpha has encoding p; it is primitive surprisingly often.
  Elem gen = 0;
  if (is_primitive(p)) {
    gen = p;
  } else {
    for (Elem c = 2; c < q; ++c) {
      if (is_primitive(c)) {
        gen = c;
        break;
      }
    }
  }
  if (gen == 0) throw FieldError("no primitive element found; modulus is not irreducible");

  d->exp_.resize(2 * static_cast<std::size_t>(order));
  d->log_.assign(q, kNoLog);
  Elem x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    d->exp_[i] = x;
    d->exp_[i + order] = x;
    if (d->log_[x] != kNoLog) throw FieldError("modulus is not irreducible");
    d->log_[x] = i;
    x = arith.mul(x, gen);
  }
  d->zech_.resize(order);
  for (std::uint32_t i = 0; i < order; ++i) {
    Elem s = arith.add(1, d->exp_[i]);
    d->zech_[i] = s == 0 ? kNoLog : d->log_[s];
  }
  return d;
}

Field Field::make(std::uint64_t p, std::uint64_t k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw FieldError("extension degree must be at least 1");
  const std::uint64_t q = checked_power(p, k);

  if (k == 1) {
    if (modulus && !(modulus->empty() || (modulus->size() == 2 && (*modulus)[1] == 1 && (*modulus)[0] < p)))
      throw FieldError("a prime field takes no modulus (or a monic linear one)");
    auto d = std::make_shared<Data>();
    d->p = d->q = static_cast<std::uint32_t>(p);
    d->k = 1;
    return Field(std::move(d));
  }
  if (q > kMaxExtensionOrder) throw FieldError("extension field order exceeds the table limit");

  const Field base = make(p, 1);
  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != k + 1) throw FieldError("modulus must have degree k");
    if (m.back() != 1) throw FieldError("modulus must be monic");
    for (auto c : m)
      if (c >= p) throw FieldError("modulus coefficient out of range");
    if (!is_irreducible(Poly(base, std::vector<Elem>(m.begin(), m.end()))))
      throw FieldError("modulus is not irreducible over GF(p)");
    return Field(build_extension(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), m));
  }

  // Smallest encoding of the non-leading coefficients: count upward in base p.
  std::vector<Elem> coeffs(k + 1, 0);
  coeffs[k] = 1;
  for (;;) {
    if (is_irreducible(Poly(base, coeffs))) break;
    std::uint64_t i = 0;
    while (i < k && ++coeffs[i] == p) coeffs[i++] = 0;
    if (i == k) throw FieldError("no irreducible modulus found");  // unreachable
  }
  return Field(build_extension(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k),
                               std::vector<std::uint32_t>(coeffs.begin(), coeffs.end())));
}

Field Field::of_order(std::uint64_t q) {
  auto pk = prime_power(q);
  if (!pk) throw FieldError(std::to_string(q) + " is not a prime power");
  return make(pk->first, pk->second);
}

Elem Field::add(Elem a, Elem b) const {
  const Data& d = *data_;
  if (d.k == 1) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= d.p ? s - d.p : s);
  }
  if (d.p == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t order = d.q - 1;
  std::uint32_t la = d.log_[a];
  std::uint32_t lb = d.log_[b];
  // a + b = a (1 + b/a)
  std::uint32_t diff = lb >= la ? lb - la : lb + order - la;
  std::uint32_t z = d.zech_[diff];
  if (z == kNoLog) return 0;
  return d.exp_[la + z];
}

Elem Field::neg(Elem a) const {
  const Data& d = *data_;
  if (a == 0) return 0;
  if (d.k == 1) return d.p - a;
  if (d.p == 2) return a;
  // -1 = g^((q-1)/2)
  return d.exp_[d.log_[a] + (d.q - 1) / 2];
}

Elem Field::mul(Elem a, Elem b) const {
  const Data& d = *data_;
  if (d.k == 1) return static_cast<Elem>(std::uint64_t{a} * b % d.p);
  if (a == 0 || b == 0) return 0;
  return d.exp_[d.log_[a] + d.log_[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  const Data& d = *data_;
  if (d.k == 1) {
    // Extended Euclid over the integers.
    std::int64_t r0 = d.p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t quo = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - quo * r1);
      std::tie(s0, s1) = std::make_pair(s1, s0 - quo * s1);
    }
    std::int64_t r = s0 % static_cast<std::int64_t>(d.p);
    return static_cast<Elem>(r < 0 ? r + d.p : r);
  }
  std::uint32_t l = d.log_[a];
  return d.exp_[l == 0 ? 0 : d.q - 1 - l];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    // -INT64_MIN overflows; fold one factor out first.
    std::uint64_t m = static_cast<std::uint64_t>(-(e + 1)) + 1;
    Elem r = 1, base = a;
    while (m) {
      if (m & 1) r = mul(r, base);
      base = mul(base, base);
      m >>= 1;
    }
    return r;
  }
  if (e == 0) return 1;
  if (a == 0) return 0;
  const Data& d = *data_;
  if (d.k > 1) {
    const std::uint64_t order = d.q - 1;
    std::uint64_t l = d.log_[a] * (static_cast<std::uint64_t>(e) % order) % order;
    return d.exp_[l];
  }
  Elem r = 1;
  std::uint64_t m = static_cast<std::uint64_t>(e);
  while (m) {
    if (m & 1) r = mul(r, a);
    a = mul(a, a);
    m >>= 1;
  }
  return r;
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t p = data_->p;
  std::int64_t r = n % p;
  return static_cast<Elem>(r < 0 ? r + p : r);
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(data_->q);
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "p=" << p() << " k=" << k();
  if (k() > 1) {
    os << " modulus=";
    for (std::size_t i = 0; i < modulus().size(); ++i) os << (i ? "," : "") << modulus()[i];
  }
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  return a.p() == b.p() && a.k() == b.k() && a.modulus() == b.modulus();
}

}  // namespace ffprime
