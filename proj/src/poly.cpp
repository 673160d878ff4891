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

#include "ffprime/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "ffprime/kernels.hpp"

namespace ffprime {

namespace detail {

void normalize(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs mul(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  if (f.is_prime_field()) {
    const auto& k = kernels::active();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) k.axpy(a[i], b, std::span<Elem>(out).subspan(i, b.size()), f.p());
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  normalize(out);
  return out;
}

void rem_monic(const Field& f, Coeffs& a, std::span<const Elem> m) {
  const std::size_t n = m.size() - 1;
  if (a.size() <= n) return;
  const auto low = m.first(n);
  const bool prime = f.is_prime_field();
  const auto& k = kernels::active();
  for (std::size_t i = a.size(); i-- > n;) {
    const Elem c = a[i];
    if (c == 0) continue;
    const Elem negc = f.neg(c);
    std::span<Elem> dst = std::span<Elem>(a).subspan(i - n, n);
    if (prime) {
      k.axpy(negc, low, dst, f.p());
    } else {
      for (std::size_t j = 0; j < n; ++j) dst[j] = f.add(dst[j], f.mul(negc, low[j]));
    }
    a[i] = 0;
  }
  a.resize(n);
  normalize(a);
}

Coeffs mulmod_monic(const Field& f, std::span<const Elem> a, std::span<const Elem> b, std::span<const Elem> m) {
  Coeffs r = mul(f, a, b);
  rem_monic(f, r, m);
  return r;
}

Coeffs powmod_monic(const Field& f, Coeffs base, std::uint64_t e, std::span<const Elem> m) {
  rem_monic(f, base, m);
  Coeffs r{1};
  rem_monic(f, r, m);
  while (e) {
    if (e & 1) r = mulmod_monic(f, r, base, m);
    e >>= 1;
    if (e) base = mulmod_monic(f, base, base, m);
  }
  return r;
}

namespace {

// a mod b for arbitrary nonzero b, in place; also returns the quotient when asked.
void rem_general(const Field& f, Coeffs& a, std::span<const Elem> b, Coeffs* quotient) {
  const std::size_t n = b.size() - 1;
  const Elem lc_inv = f.inv(b.back());
  if (quotient) quotient->assign(a.size() > n ? a.size() - n : 0, 0);
  if (a.size() <= n) return;
  for (std::size_t i = a.size(); i-- > n;) {
    const Elem c = f.mul(a[i], lc_inv);
    if (c == 0) continue;
    if (quotient) (*quotient)[i - n] = c;
    for (std::size_t j = 0; j <= n; ++j) a[i - n + j] = f.sub(a[i - n + j], f.mul(c, b[j]));
  }
  a.resize(n);
  normalize(a);
  if (quotient) normalize(*quotient);
}

void make_monic(const Field& f, Coeffs& a) {
  if (a.empty() || a.back() == 1) return;
  const Elem inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
}

}  // namespace

Coeffs gcd(const Field& f, Coeffs a, Coeffs b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    rem_general(f, a, b, nullptr);
    std::swap(a, b);
  }
  make_monic(f, a);
  return a;
}

Elem eval(const Field& f, std::span<const Elem> c, Elem x) {
  Elem r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = f.add(f.mul(r, x), c[i]);
  return r;
}

Elem sylvester(const Field& f, std::span<const Elem> a, std::size_t m, std::span<const Elem> b, std::size_t n) {
  const std::size_t dim = m + n;
  if (dim == 0) return 1;
  std::vector<std::vector<Elem>> mat(dim, std::vector<Elem>(dim, 0));
  auto coeff = [](std::span<const Elem> c, std::size_t i) { return i < c.size() ? c[i] : Elem{0}; };
  // Row r of the a-block holds a_m .. a_0 starting at column r.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) mat[r][r + j] = coeff(a, m - j);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) mat[n + r][r + j] = coeff(b, n - j);

  Elem det = 1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    while (piv < dim && mat[piv][col] == 0) ++piv;
    if (piv == dim) return 0;
    if (piv != col) {
      std::swap(mat[piv], mat[col]);
      det = f.neg(det);
    }
    det = f.mul(det, mat[col][col]);
    const Elem inv = f.inv(mat[col][col]);
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (mat[r][col] == 0) continue;
      const Elem factor = f.mul(mat[r][col], inv);
      for (std::size_t j = col; j < dim; ++j) mat[r][j] = f.sub(mat[r][j], f.mul(factor, mat[col][j]));
    }
  }
  return det;
}

}  // namespace detail

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("polynomials over different fields");
}

}  // namespace

Poly::Poly(Field f, std::vector<Elem> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (!field_.contains(c)) throw FieldError("coefficient encoding " + std::to_string(c) + " out of range");
  detail::normalize(coeffs_);
}

Poly Poly::monomial(const Field& f, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(f, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) throw DivisionByZero("monic of the zero polynomial");
  return scaled(field_.inv(leading()));
}

Poly Poly::scaled(Elem c) const {
  Poly r(field_);
  if (c == 0) return r;
  r.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_.mul(coeffs_[i], c);
  return r;
}

Elem Poly::eval(Elem x) const { return detail::eval(field_, coeffs_, x); }

Poly Poly::derivative() const {
  Poly r(field_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.p())), coeffs_[i]);
  detail::normalize(r.coeffs_);
  return r;
}

Poly Poly::shifted(Elem b) const {
  // Horner in the polynomial ring: ((c_n)(t+b) + c_{n-1})(t+b) + ...
  const Poly lin(field_, {b, 1});
  Poly r(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * lin + constant(field_, coeffs_[i]);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(field_, o.field_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  detail::normalize(coeffs_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_field(field_, o.field_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
  detail::normalize(coeffs_);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  Poly r(a.field_);
  r.coeffs_ = detail::mul(a.field_, a.coeffs_, b.coeffs_);
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = field_.neg(c);
  return r;
}

bool encoding_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  for (std::size_t i = ca.size(); i-- > 0;)
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  return false;
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  detail::Coeffs r(a.coeffs().begin(), a.coeffs().end());
  detail::Coeffs quo;
  detail::rem_general(a.field(), r, b.coeffs(), &quo);
  return {Poly(a.field(), std::move(quo)), Poly(a.field(), std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  return Poly(a.field(), detail::gcd(a.field(), {a.coeffs().begin(), a.coeffs().end()},
                                     {b.coeffs().begin(), b.coeffs().end()}));
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modulus) {
  require_same_field(base.field(), modulus.field());
  if (modulus.is_zero()) throw DivisionByZero("reduction modulo the zero polynomial");
  const Poly m = modulus.monic();
  return Poly(base.field(), detail::powmod_monic(base.field(), {base.coeffs().begin(), base.coeffs().end()}, e,
                                                 m.coeffs()));
}

Elem resultant(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant with a zero polynomial");
  return detail::sylvester(a.field(), a.coeffs(), a.degree().value(), b.coeffs(), b.degree().value());
}

Elem discriminant(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("discriminant of the zero polynomial");
  const std::size_t n = f.degree().value();
  if (n == 0) throw std::invalid_argument("discriminant of a constant");
  const Field& F = f.field();
  const Poly d = f.derivative();
  const Elem res = detail::sylvester(F, f.coeffs(), n, d.coeffs(), n - 1);
  Elem disc = F.div(res, f.leading());
  if ((n * (n - 1) / 2) % 2 == 1) disc = F.neg(disc);
  return disc;
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

// Sums of terms c*t^i*u^j; `u` is accepted only when allow_u is set.
class SymbolicParser {
 public:
  SymbolicParser(std::string_view s, const Field& f, bool allow_u) : s_(s), f_(f), allow_u_(allow_u) {}

  std::vector<std::vector<Elem>> parse() {
    std::vector<std::vector<Elem>> acc;
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      const Term t = term();
      if (acc.size() <= t.i) acc.resize(t.i + 1);
      auto& row = acc[t.i];
      if (row.size() <= t.j) row.resize(t.j + 1, 0);
      row[t.j] = negate ? f_.sub(row[t.j], t.coef) : f_.add(row[t.j], t.coef);
      skip_ws();
      if (pos_ == s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      negate = c == '-';
      ++pos_;
    }
    return acc;
  }

 private:
  struct Term {
    Elem coef;
    std::size_t i;
    std::size_t j;
  };

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool is_var(char c) const { return c == 't' || (allow_u_ && c == 'u'); }

  std::optional<std::uint64_t> number() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (1ull << 40)) throw ParseError("number too large", pos_);
      ++pos_;
    }
    return v;
  }

  Term term() {
    skip_ws();
    const std::size_t start = pos_;
    auto coef = number();
    Term out{f_.from_int(static_cast<std::int64_t>(coef ? *coef % f_.p() : 1)), 0, 0};
    bool any_var = false;
    for (;;) {
      skip_ws();
      if ((coef || any_var) && peek() == '*') {
        ++pos_;
        skip_ws();
        if (!is_var(peek())) throw ParseError(allow_u_ ? "expected 't' or 'u' after '*'" : "expected 't' after '*'", pos_);
      }
      if (!is_var(peek())) break;
      const char var = s_[pos_++];
      std::size_t deg = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        auto e = number();
        if (!e) throw ParseError("expected an exponent after '^'", pos_);
        if (*e > 100000) throw ParseError("exponent too large", pos_);
        deg = static_cast<std::size_t>(*e);
      }
      (var == 't' ? out.i : out.j) += deg;
      any_var = true;
    }
    if (!coef && !any_var) throw ParseError(allow_u_ ? "expected a coefficient, 't' or 'u'" : "expected a coefficient or 't'", start);
    return out;
  }

  std::string_view s_;
  const Field& f_;
  bool allow_u_;
  std::size_t pos_ = 0;
};

Poly parse_comma_list(std::string_view s, const Field& f) {
  std::vector<Elem> coeffs;
  std::size_t pos = 0;
  for (;;) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > 0xffffffffull) throw ParseError("coefficient too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a coefficient encoding", pos);
    if (v >= f.q()) throw ParseError("coefficient encoding " + std::to_string(v) + " is not below q", start);
    coeffs.push_back(static_cast<Elem>(v));
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos == s.size()) break;
    if (s[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return Poly(f, std::move(coeffs));
}

}  // namespace

Poly parse_poly(std::string_view text, const Field& f) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first == text.size()) throw ParseError("empty polynomial text", 0);
  if (text.find('t') != std::string_view::npos) {
    if (!f.is_prime_field())
      throw ParseError("symbolic polynomials need a prime field; use the comma-list form", 0);
    auto rows = SymbolicParser(text, f, false).parse();
    std::vector<Elem> coeffs(rows.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!rows[i].empty()) coeffs[i] = rows[i][0];
    return Poly(f, std::move(coeffs));
  }
  return parse_comma_list(text, f);
}

BiPoly parse_bipoly(std::string_view text, const Field& f) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first == text.size()) throw ParseError("empty polynomial text", 0);
  if (text.find_first_of("tu") != std::string_view::npos) {
    if (!f.is_prime_field())
      throw ParseError("symbolic polynomials need a prime field; use the row form", 0);
    return BiPoly(f, SymbolicParser(text, f, true).parse());
  }
  std::vector<std::vector<Elem>> rows;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(';', start);
    const auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    try {
      const Poly row = parse_comma_list(piece, f);
      rows.emplace_back(row.coeffs().begin(), row.coeffs().end());
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad row ") + std::to_string(rows.size()) + ": " + e.what(), start + e.position());
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return BiPoly(f, std::move(rows));
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

std::string format_symbolic(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << (f.field().is_prime_field() ? "" : "[") << c[i] << (f.field().is_prime_field() ? "" : "]");
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Bivariate

BiPoly::BiPoly(Field f, std::vector<std::vector<Elem>> rows) : field_(std::move(f)), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    for (auto c : r)
      if (!field_.contains(c)) throw FieldError("coefficient encoding out of range");
  normalize();
}

void BiPoly::normalize() {
  for (auto& r : rows_) detail::normalize(r);
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

BiPoly BiPoly::from_x_powers(const Field& f, const std::vector<Poly>& a) {
  std::vector<std::vector<Elem>> rows;
  rows.reserve(a.size());
  for (const auto& p : a) {
    require_same_field(f, p.field());
    rows.emplace_back(p.coeffs().begin(), p.coeffs().end());
  }
  return BiPoly(f, std::move(rows));
}

BiPoly BiPoly::from_y_powers(const Field& f, const std::vector<Poly>& c) {
  std::size_t width = 0;
  for (const auto& p : c) {
    require_same_field(f, p.field());
    width = std::max(width, p.coeffs().size());
  }
  std::vector<std::vector<Elem>> rows(width, std::vector<Elem>(c.size(), 0));
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < c[j].coeffs().size(); ++i) rows[i][j] = c[j].coeffs()[i];
  return BiPoly(f, std::move(rows));
}

Elem BiPoly::coeff(std::size_t i, std::size_t j) const {
  if (i >= rows_.size() || j >= rows_[i].size()) return 0;
  return rows_[i][j];
}

Degree BiPoly::deg_x() const { return rows_.empty() ? Degree::neg_inf() : Degree(rows_.size() - 1); }

Degree BiPoly::deg_y() const {
  Degree d = Degree::neg_inf();
  for (const auto& r : rows_)
    if (!r.empty()) d = std::max(d, Degree(r.size() - 1));
  return d;
}

Degree BiPoly::total_degree() const {
  Degree d = Degree::neg_inf();
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!rows_[i].empty()) d = std::max(d, Degree(i + rows_[i].size() - 1));
  return d;
}

Poly BiPoly::x_coeff(std::size_t i) const {
  if (i >= rows_.size()) return Poly(field_);
  return Poly(field_, rows_[i]);
}

Poly BiPoly::y_coeff(std::size_t j) const {
  std::vector<Elem> c(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = coeff(i, j);
  return Poly(field_, std::move(c));
}

Poly BiPoly::specialize_shift(Elem b) const {
  const Poly lin(field_, {b, 1});
  Poly power = Poly::constant(field_, 1);
  Poly out(field_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].empty()) out += power * Poly(field_, rows_[i]);
    power = power * lin;
  }
  return out;
}

Poly BiPoly::specialize_y(Elem b) const {
  std::vector<Elem> c(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = detail::eval(field_, rows_[i], b);
  return Poly(field_, std::move(c));
}

namespace {

// Fraction-free (Bareiss) determinant over GF(q)[y], with row pivoting.
Poly bareiss_det(const Field& f, std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(f, 1);
  Poly prev = Poly::constant(f, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return Poly(f);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num / prev;  // exact by Sylvester's identity
      }
      m[i][k] = Poly(f);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

Poly discriminant_x(const BiPoly& f) {
  if (f.deg_x().is_neg_inf() || f.deg_x().value() == 0)
    throw std::invalid_argument("discriminant needs positive degree in x");
  const Field& F = f.field();
  const std::size_t n = f.deg_x().value();
  std::vector<Poly> a(n + 1, Poly(F)), da(n, Poly(F));
  for (std::size_t i = 0; i <= n; ++i) a[i] = f.x_coeff(i);
  for (std::size_t i = 1; i <= n; ++i) da[i - 1] = a[i].scaled(F.from_int(static_cast<std::int64_t>(i % F.p())));

  // Sylvester matrix of (f, f') with formal degrees (n, n-1).
  const std::size_t dim = 2 * n - 1;
  std::vector<std::vector<Poly>> m(dim, std::vector<Poly>(dim, Poly(F)));
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t j = 0; j <= n; ++j) m[r][r + j] = a[n - j];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) m[n - 1 + r][r + j] = da[n - 1 - j];

  Poly res = bareiss_det(F, std::move(m));
  Poly disc = res / a[n];
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

}  // namespace ffprime
