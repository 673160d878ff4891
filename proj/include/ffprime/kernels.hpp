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

// Batch kernels over prime fields GF(p).
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2 variant. The variant is chosen once at runtime from CPUID; it can be
// pinned with the FFPRIME_ISA environment variable ("scalar" or "avx2") or
// with set_isa(). All variants must produce bit-identical results.
//
// Inputs are canonical residues in [0, p). The AVX2 path reduces through
// single-precision floats and therefore only handles p < kAvx2MaxPrime;
// larger primes fall back to the scalar code inside the AVX2 entry points.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace ffprime::kernels {

enum class Isa { scalar, avx2 };

inline constexpr std::uint32_t kAvx2MaxPrime = 2048;

std::string_view isa_name(Isa isa);

struct PrimeKernels {
  Isa isa;

  // out[j] = f(xs[j]) mod p by Horner; coeffs ascending by degree.
  void (*eval_many)(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
                    std::span<std::uint32_t> out, std::uint32_t p);

  // acc[i] = (acc[i] + c * b[i]) mod p for i < b.size().
  void (*axpy)(std::uint32_t c, std::span<const std::uint32_t> b, std::span<std::uint32_t> acc,
               std::uint32_t p);

  // Number of x in [0, p) with f(x) = 0.
  std::uint32_t (*count_roots)(std::span<const std::uint32_t> coeffs, std::uint32_t p);
};

bool cpu_has_avx2();

/// Kernel table for a specific ISA. Requesting avx2 on a machine without it
/// returns the scalar table.
const PrimeKernels& kernels_for(Isa isa);

/// The table selected for this process.
const PrimeKernels& active();

/// Pins the process-wide selection (tests, benchmarking).
void set_isa(Isa isa);

namespace scalar {
void eval_many(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
               std::span<std::uint32_t> out, std::uint32_t p);
void axpy(std::uint32_t c, std::span<const std::uint32_t> b, std::span<std::uint32_t> acc, std::uint32_t p);
std::uint32_t count_roots(std::span<const std::uint32_t> coeffs, std::uint32_t p);
}  // namespace scalar

#if defined(FFPRIME_HAVE_AVX2)
namespace avx2 {
void eval_many(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> xs,
               std::span<std::uint32_t> out, std::uint32_t p);
void axpy(std::uint32_t c, std::span<const std::uint32_t> b, std::span<std::uint32_t> acc, std::uint32_t p);
std::uint32_t count_roots(std::span<const std::uint32_t> coeffs, std::uint32_t p);
}  // namespace avx2
#endif

}  // namespace ffprime::kernels
