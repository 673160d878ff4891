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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffprime {

/// Canonical element encoding: an integer in [0, q) equal to sum d_i p^i,
/// where d_i are the power-basis coordinates over the modulus root.
using Elem = std::uint32_t;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n);

/// Splits a prime power q = p^k. Returns nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// GF(p^k). Cheap to copy; all copies share one immutable table set.
///
/// Prime fields use direct modular arithmetic. Extension fields are backed
/// by exp/log/Zech-log tables over a primitive element, so q is capped at
/// kMaxExtensionOrder.
class Field {
 public:
  static constexpr std::uint64_t kMaxExtensionOrder = 1u << 22;

  /// Builds GF(p^k). With no modulus and k > 1, picks the monic irreducible
  /// of degree k whose non-leading coefficient vector has the least encoding
  /// sum c_i p^i. A supplied modulus lists GF(p) coefficients ascending,
  /// including the leading 1.
  static Field make(std::uint64_t p, std::uint64_t k = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Convenience for a prime power q with canonical modulus.
  static Field of_order(std::uint64_t q);

  std::uint32_t p() const { return data_->p; }
  std::uint32_t k() const { return data_->k; }
  std::uint32_t q() const { return data_->q; }
  bool is_prime_field() const { return data_->k == 1; }
  /// Modulus coefficients ascending including the leading 1; empty when k == 1.
  const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }

  bool contains(Elem a) const { return a < data_->q; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Negative exponents are inverse powers; pow(0, e < 0) throws.
  Elem pow(Elem a, std::int64_t e) const;
  /// Image of an integer under Z -> GF(p) -> GF(q).
  Elem from_int(std::int64_t n) const;

  /// All q elements in increasing encoding order.
  std::vector<Elem> elements() const;

  /// "p=3 k=2 modulus=1,0,1" style description.
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Data {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    // Extension fields only. exp_ has length 2(q-1) so log sums need no mod.
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    // zech_[i] = log(1 + g^i), or kNoLog when 1 + g^i = 0.
    std::vector<std::uint32_t> zech_;
  };
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static std::shared_ptr<const Data> build_extension(std::uint32_t p, std::uint32_t k,
                                                     std::vector<std::uint32_t> modulus);

  std::shared_ptr<const Data> data_;
};

}  // namespace ffprime
