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


#include <doctest.h>

#include <random>
#include <string>

#include "ffprime/field.hpp"
#include "oracle.hpp"

using namespace ffprime;

namespace {

oracle::Field oracle_of(const Field& f) {
  return oracle::Field{f.p(), f.k(), f.q(), f.modulus()};
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("prime fields") {
  const Field f = Field::make(3);
  CHECK(f.q() == 3);
  CHECK(f.is_prime_field());
  CHECK(f.modulus().empty());
  CHECK(Field::make(5).add(3, 4) == 2);
  CHECK(Field::make(7).inv(3) == 5);
  CHECK_THROWS_AS(Field::make(4), FieldError);
  CHECK_THROWS_AS(Field::make(1), FieldError);
  CHECK_THROWS_AS(Field::of_order(12), FieldError);
}

TEST_CASE("default moduli are the least-encoded irreducibles") {
  CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(Field::of_order(9) == Field::make(3, 2));
}

TEST_CASE("custom modulus is validated") {
  CHECK_NOTHROW(Field::make(3, 2, std::vector<std::uint32_t>{2, 1, 1}));
  CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{2, 0, 1}), FieldError);  // t^2 - 1
  CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 2}), FieldError);  // not monic
  CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{1, 1}), FieldError);     // wrong degree
}

TEST_CASE("GF(9) multiplication table") {
  // Computed independently in GF(3)[t]/(t^2 + 1); row a, column b.
  const std::string table = "000000000012345678021687354036258147048561723057813462063174285075426831084732516";
  const Field f = Field::make(3, 2);
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b) CHECK(f.mul(a, b) == static_cast<Elem>(table[a * 9 + b] - '0'));
  CHECK(f.mul(3, 3) == 2);
}

TEST_CASE("GF(4) and GF(8) multiplication tables") {
  const std::string t4 = "0000012302310312";
  const std::string t8 = "0000000001234567024631750365741204376251051427360671532407521643";
  const Field f4 = Field::make(2, 2), f8 = Field::make(2, 3);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) CHECK(f4.mul(a, b) == static_cast<Elem>(t4[a * 4 + b] - '0'));
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) CHECK(f8.mul(a, b) == static_cast<Elem>(t8[a * 8 + b] - '0'));
}

TEST_CASE("arithmetic agrees with schoolbook reduction") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair{2u, 5u}, {3u, 3u}, {5u, 2u}, {7u, 2u}, {2u, 8u}, {13u, 1u}, {3u, 5u}}) {
    const Field f = Field::make(p, k);
    const oracle::Field o = oracle_of(f);
    for (int i = 0; i < 400; ++i) {
      const Elem a = static_cast<Elem>(rng() % f.q()), b = static_cast<Elem>(rng() % f.q());
      CHECK(f.add(a, b) == o.add(a, b));
      CHECK(f.sub(a, b) == o.sub(a, b));
      CHECK(f.mul(a, b) == o.mul(a, b));
      if (b != 0) CHECK(f.mul(f.div(a, b), b) == a);
    }
  }
}

TEST_CASE("field laws") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u}) {
    const Field f = Field::of_order(q);
    const auto els = f.elements();
    REQUIRE(els.size() == q);
    Elem sum = 0;
    for (Elem a : els) {
      sum = f.add(sum, a);
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.pow(a, static_cast<std::int64_t>(q)) == a);  // Fermat
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, static_cast<std::int64_t>(q - 1)) == 1);
        CHECK(f.pow(a, -1) == f.inv(a));
      }
      for (Elem b : els) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        // Frobenius is additive
        CHECK(f.pow(f.add(a, b), f.p()) == f.add(f.pow(a, f.p()), f.pow(b, f.p())));
      }
    }
    if (q > 2) CHECK(sum == 0);
  }
}

TEST_CASE("distributivity and associativity on GF(27)") {
  const Field f = Field::of_order(27);
  for (Elem a = 0; a < 27; a += 2)
    for (Elem b = 0; b < 27; b += 3)
      for (Elem c = 0; c < 27; c += 5) {
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      }
}

TEST_CASE("division by zero") {
  const Field f = Field::of_order(9);
  CHECK_THROWS_AS(f.inv(0), DivisionByZero);
  CHECK_THROWS_AS(f.pow(0, -2), DivisionByZero);
  CHECK(f.pow(0, 0) == 1);
}

TEST_CASE("from_int maps through the prime field") {
  const Field f = Field::of_order(9);
  CHECK(f.from_int(4) == 1);
  CHECK(f.from_int(-1) == 2);
  CHECK(f.from_int(0) == 0);
}

TEST_CASE("element listing") {
  CHECK(Field::make(2).elements() == std::vector<Elem>{0, 1});
  CHECK(Field::of_order(9).elements().size() == 9);
}

}  // TEST_SUITE
