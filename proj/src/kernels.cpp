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

#include <atomic>
#include <cstdlib>
#include <string>

namespace ffprime::kernels {

namespace scalar {

void eval_many(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
               std::span<std::uint32_t> out, std::uint32_t p) {
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const std::uint64_t x = xs[j];
    std::uint64_t r = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) r = (r * x + coeffs[i]) % p;
    out[j] = static_cast<std::uint32_t>(r);
  }
}

void axpy(std::uint32_t c, std::span<const std::uint32_t> b, std::span<std::uint32_t> acc, std::uint32_t p) {
  for (std::size_t i = 0; i < b.size(); ++i)
    acc[i] = static_cast<std::uint32_t>((acc[i] + std::uint64_t{c} * b[i]) % p);
}

std::uint32_t count_roots(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  std::uint32_t n = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t r = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) r = (r * x + coeffs[i]) % p;
    n += r == 0;
  }
  return n;
}

}  // namespace scalar

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool cpu_has_avx2() {
#if defined(FFPRIME_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

constexpr PrimeKernels kScalar{Isa::scalar, &scalar::eval_many, &scalar::axpy, &scalar::count_roots};
#if defined(FFPRIME_HAVE_AVX2)
constexpr PrimeKernels kAvx2{Isa::avx2, &avx2::eval_many, &avx2::axpy, &avx2::count_roots};
#endif

Isa detect() {
  if (const char* env = std::getenv("FFPRIME_ISA")) {
    std::string v(env);
    if (v == "scalar") return Isa::scalar;
    if (v == "avx2" && cpu_has_avx2()) return Isa::avx2;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<const PrimeKernels*>& selected() {
  static std::atomic<const PrimeKernels*> ptr{&kernels_for(detect())};
  return ptr;
}

}  // namespace

const PrimeKernels& kernels_for(Isa isa) {
#if defined(FFPRIME_HAVE_AVX2)
  if (isa == Isa::avx2 && cpu_has_avx2()) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

const PrimeKernels& active() { return *selected().load(std::memory_order_relaxed); }

void set_isa(Isa isa) { selected().store(&kernels_for(isa), std::memory_order_relaxed); }

}  // namespace ffprime::kernels
