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

#include "ffprime/kernels.hpp"

#include <immintrin.h>

#include <bit>

#ifndef __AVX2__
#error kernels_avx2.cpp must be compiled with -mavx2
#endif

namespace ffprime::kernels::avx2 {

namespace {

// Reduction mod p of 8 int32 lanes holding values in [0, p^2 + p).
// p < 2048 keeps every value below 2^23, exact in float; the quotient
// estimate is then off by at most one in either direction.
struct ModP {
  __m256i p;
  __m256 inv_p;

  explicit ModP(std::uint32_t prime)
      : p(_mm256_set1_epi32(static_cast<int>(prime))), inv_p(_mm256_set1_ps(1.0f / static_cast<float>(prime))) {}

  __m256i reduce(__m256i v) const {
    const __m256 qf = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(v), inv_p));
    __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(_mm256_cvttps_epi32(qf), p));
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), p));
    r = _mm256_sub_epi32(r, _mm256_andnot_si256(_mm256_cmpgt_epi32(p, r), p));
    return r;
  }
};

__m256i horner(std::span<const std::uint32_t> coeffs, __m256i x, const ModP& m) {
  __m256i r = _mm256_setzero_si256();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const __m256i c = _mm256_set1_epi32(static_cast<int>(coeffs[i]));
    r = m.reduce(_mm256_add_epi32(_mm256_mullo_epi32(r, x), c));
  }
  return r;
}

}  // namespace

void eval_many(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
               std::span<std::uint32_t> out, std::uint32_t p) {
  if (p >= kAvx2MaxPrime) return scalar::eval_many(coeffs, xs, out, p);
  const ModP m(p);
  std::size_t j = 0;
  for (; j + 8 <= xs.size(); j += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs.data() + j));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + j), horner(coeffs, x, m));
  }
  if (j < xs.size()) scalar::eval_many(coeffs, xs.subspan(j), out.subspan(j), p);
}

void axpy(std::uint32_t c, std::span<const std::uint32_t> b, std::span<std::uint32_t> acc, std::uint32_t p) {
  if (p >= kAvx2MaxPrime) return scalar::axpy(c, b, acc, p);
  const ModP m(p);
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= b.size(); i += 8) {
    const __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    __m256i* dst = reinterpret_cast<__m256i*>(acc.data() + i);
    const __m256i av = _mm256_loadu_si256(dst);
    _mm256_storeu_si256(dst, m.reduce(_mm256_add_epi32(av, _mm256_mullo_epi32(cv, bv))));
  }
  if (i < b.size()) scalar::axpy(c, b.subspan(i), acc.subspan(i), p);
}

std::uint32_t count_roots(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  if (p >= kAvx2MaxPrime) return scalar::count_roots(coeffs, p);
  const ModP m(p);
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i limit = _mm256_set1_epi32(static_cast<int>(p));
  std::uint32_t n = 0;
  for (std::uint32_t base = 0; base < p; base += 8) {
    const __m256i x = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(base)), lane);
    const __m256i valid = _mm256_cmpgt_epi32(limit, x);
    const __m256i zero = _mm256_cmpeq_epi32(horner(coeffs, x, m), _mm256_setzero_si256());
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_and_si256(zero, valid)));
    n += static_cast<std::uint32_t>(std::popcount(static_cast<unsigned>(mask)));
  }
  return n;
}

}  // namespace ffprime::kernels::avx2
