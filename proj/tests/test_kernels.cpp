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
#include <vector>

#include "ffprime/kernels.hpp"

using namespace ffprime::kernels;

TEST_SUITE("kernels") {

TEST_CASE("avx2 variants agree with scalar") {
  const PrimeKernels& s = kernels_for(Isa::scalar);
  const PrimeKernels& v = kernels_for(Isa::avx2);
  if (!cpu_has_avx2()) MESSAGE("no AVX2 on this machine; comparing scalar with itself");
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 31u, 251u, 1021u, 2039u, 2053u, 65521u, 1000003u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint32_t> coeffs(1 + rng() % 9), xs(rng() % 70), b(rng() % 70);
      for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng() % p);
      for (auto& x : xs) x = static_cast<std::uint32_t>(rng() % p);
      for (auto& x : b) x = static_cast<std::uint32_t>(rng() % p);

      std::vector<std::uint32_t> o1(xs.size()), o2(xs.size());
      s.eval_many(coeffs, xs, o1, p);
      v.eval_many(coeffs, xs, o2, p);
      CHECK(o1 == o2);

      std::vector<std::uint32_t> acc1(b.size()), acc2;
      for (auto& a : acc1) a = static_cast<std::uint32_t>(rng() % p);
      acc2 = acc1;
      const auto c = static_cast<std::uint32_t>(rng() % p);
      s.axpy(c, b, acc1, p);
      v.axpy(c, b, acc2, p);
      CHECK(acc1 == acc2);

      if (p < 70000) CHECK(s.count_roots(coeffs, p) == v.count_roots(coeffs, p));
    }
  }
}

TEST_CASE("edge values near the float reduction limit") {
  const PrimeKernels& s = kernels_for(Isa::scalar);
  const PrimeKernels& v = kernels_for(Isa::avx2);
  const std::uint32_t p = 2039;
  std::vector<std::uint32_t> coeffs(8, p - 1), xs(37, p - 1), o1(37), o2(37);
  s.eval_many(coeffs, xs, o1, p);
  v.eval_many(coeffs, xs, o2, p);
  CHECK(o1 == o2);
  std::vector<std::uint32_t> b(37, p - 1), a1(37, p - 1), a2(37, p - 1);
  s.axpy(p - 1, b, a1, p);
  v.axpy(p - 1, b, a2, p);
  CHECK(a1 == a2);
}

TEST_CASE("scalar reference values") {
  // t^2 + 1 over GF(5) has roots 2 and 3.
  const std::vector<std::uint32_t> f{1, 0, 1};
  CHECK(scalar::count_roots(f, 5) == 2);
  CHECK(scalar::count_roots(f, 3) == 0);
  std::vector<std::uint32_t> xs{0, 1, 2, 3, 4}, out(5);
  scalar::eval_many(f, xs, out, 5);
  CHECK(out == std::vector<std::uint32_t>{1, 2, 0, 0, 2});
}

TEST_CASE("selection can be pinned") {
  const Isa before = active().isa;
  set_isa(Isa::scalar);
  CHECK(active().isa == Isa::scalar);
  set_isa(Isa::avx2);
  CHECK(active().isa == (cpu_has_avx2() ? Isa::avx2 : Isa::scalar));
  set_isa(before);
  CHECK(isa_name(Isa::scalar) == "scalar");
}

}  // TEST_SUITE
