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

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffprime/field.hpp"

namespace ffprime {

/// Polynomial degree with a distinct negative-infinity value for zero.
class Degree {
 public:
  constexpr Degree(std::size_t d) : d_(static_cast<std::int64_t>(d)) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_inf() { return Degree(kNegInf, 0); }

  constexpr bool is_neg_inf() const { return d_ == kNegInf; }
  std::size_t value() const {
    if (is_neg_inf()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<std::size_t>(d_);
  }
  constexpr auto operator<=>(const Degree&) const = default;
  std::string to_string() const { return is_neg_inf() ? "-inf" : std::to_string(d_); }

 private:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  constexpr Degree(std::int64_t raw, int) : d_(raw) {}
  std::int64_t d_;
};

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Univariate polynomial over a finite field, coefficients ascending by
/// degree with no trailing zeros.
class Poly {
 public:
  explicit Poly(Field f) : field_(std::move(f)) {}
  /// Validates every coefficient against the field and normalizes.
  Poly(Field f, std::vector<Elem> coeffs);

  static Poly constant(const Field& f, Elem c) { return Poly(f, std::vector<Elem>{c}); }
  static Poly monomial(const Field& f, Elem c, std::size_t degree);
  /// The indeterminate t.
  static Poly var(const Field& f) { return monomial(f, 1, 1); }

  const Field& field() const { return field_; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  Degree degree() const { return coeffs_.empty() ? Degree::neg_inf() : Degree(coeffs_.size() - 1); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Poly monic() const;
  Poly scaled(Elem c) const;
  Elem eval(Elem x) const;
  Poly derivative() const;
  /// f(t + b).
  Poly shifted(Elem b) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

 private:
  Field field_;
  std::vector<Elem> coeffs_;
};

/// Canonical order: by degree, then by the coefficient vector read from the
/// top non-leading coefficient down (the base-q encoding sum c_i q^i).
bool encoding_less(const Poly& a, const Poly& b);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

/// Monic gcd; throws when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modulus);

/// det of the Sylvester matrix, rows of a's coefficients first.
Elem resultant(const Poly& a, const Poly& b);

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f), with f' taken at formal degree n-1.
Elem discriminant(const Poly& f);

/// Comma list of encodings ascending ("2,1" is t+2), or for prime fields a
/// symbolic sum in t ("t^2+2t+1").
Poly parse_poly(std::string_view text, const Field& f);
/// Canonical comma-list form; the zero polynomial is "0".
std::string format_poly(const Poly& f);
/// Human-readable form in t; extension-field coefficients print as encodings.
std::string format_symbolic(const Poly& f);

/// f(x, y) = sum c_{ij} x^i y^j, stored as one coefficient row in y per power of x.
class BiPoly {
 public:
  explicit BiPoly(Field f) : field_(std::move(f)) {}
  /// rows[i] holds the y-coefficients of x^i.
  BiPoly(Field f, std::vector<std::vector<Elem>> rows);
  /// f = sum_i a[i](y) x^i.
  static BiPoly from_x_powers(const Field& f, const std::vector<Poly>& a);
  /// f = sum_j c[j](x) y^j.
  static BiPoly from_y_powers(const Field& f, const std::vector<Poly>& c);

  const Field& field() const { return field_; }
  Elem coeff(std::size_t i, std::size_t j) const;
  Degree deg_x() const;
  Degree deg_y() const;
  Degree total_degree() const;
  bool is_zero() const { return rows_.empty(); }

  /// Coefficient of x^i as a polynomial in y.
  Poly x_coeff(std::size_t i) const;
  /// Coefficient of y^j as a polynomial in x.
  Poly y_coeff(std::size_t j) const;

  /// f(t + b, t).
  Poly specialize_shift(Elem b) const;
  /// f(x, b) as a polynomial in x.
  Poly specialize_y(Elem b) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.field_ == b.field_ && a.rows_ == b.rows_; }

 private:
  void normalize();

  Field field_;
  std::vector<std::vector<Elem>> rows_;
};

/// Discriminant of f with respect to x, as a polynomial in y, computed from
/// the Sylvester determinant of (f, df/dx) over GF(q)[y].
Poly discriminant_x(const BiPoly& f);

/// Rows of comma lists separated by ';' (row i holds the y-coefficients of
/// x^i), or for prime fields a symbolic sum in t (for x) and u (for y),
/// such as "t^2 - u".
BiPoly parse_bipoly(std::string_view text, const Field& f);

namespace detail {

using Coeffs = std::vector<Elem>;

void normalize(Coeffs& c);
Coeffs mul(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
/// a mod m for monic m, in place.
void rem_monic(const Field& f, Coeffs& a, std::span<const Elem> m);
Coeffs mulmod_monic(const Field& f, std::span<const Elem> a, std::span<const Elem> b, std::span<const Elem> m);
Coeffs powmod_monic(const Field& f, Coeffs base, std::uint64_t e, std::span<const Elem> m);
/// Monic gcd of raw coefficient vectors.
Coeffs gcd(const Field& f, Coeffs a, Coeffs b);
Elem eval(const Field& f, std::span<const Elem> c, Elem x);
/// Determinant of the Sylvester matrix for formal degrees m = deg a, n = deg b.
Elem sylvester(const Field& f, std::span<const Elem> a, std::size_t m, std::span<const Elem> b, std::size_t n);

}  // namespace detail

}  // namespace ffprime
