// Copyright 2026 The orthostep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORTHOSTEP_SIMD_KERNELS_HPP_
#define ORTHOSTEP_SIMD_KERNELS_HPP_

// Data-parallel inner loops over int64 coefficient arrays.
//
// Every kernel has a scalar reference implementation; an AVX2 variant is
// compiled when the toolchain targets x86-64 and picked at runtime when the
// CPU reports AVX2. All variants detect signed overflow and throw
// OverflowError, and must agree bit-for-bit with the scalar reference.

#include <cstddef>
#include <span>
#include <string_view>

#include "orthostep/errors.hpp"

namespace orthostep::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

struct SignSummary {
  bool has_negative = false;
  bool has_zero = false;
  bool has_positive = false;

  friend bool operator==(const SignSummary&, const SignSummary&) = default;
};

struct KernelTable {
  Isa isa;

  // out[i] = in[i] - in[i - shift] (terms outside `in` read as 0).
  // out.size() must be in.size() + shift: multiplication by (1 - x^shift).
  void (*mul_binomial)(std::span<const Int> in, std::size_t shift, std::span<Int> out);

  // Quotient recurrence for division by (1 - x^shift):
  //   quot[i] = num[i] + quot[i - shift],  quot.size() == num.size() - shift.
  // Returns false if the remainder is nonzero. Requires num.size() > shift.
  bool (*div_binomial)(std::span<const Int> num, std::size_t shift, std::span<Int> quot);

  // out[r] = sum of coeffs[k] over k = r (mod out.size()).
  void (*residue_sums)(std::span<const Int> coeffs, std::span<Int> out);

  SignSummary (*sign_scan)(std::span<const Int> values);

  bool (*is_palindrome)(std::span<const Int> values);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// Table chosen once per process: AVX2 when available, scalar otherwise.
const KernelTable& active_kernels();

}  // namespace orthostep::simd

#endif  // ORTHOSTEP_SIMD_KERNELS_HPP_
