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

#ifndef ORTHOSTEP_SRC_SIMD_KERNELS_INTERNAL_HPP_
#define ORTHOSTEP_SRC_SIMD_KERNELS_INTERNAL_HPP_

#include "orthostep/simd/kernels.hpp"

namespace orthostep::simd {

namespace scalar {
void mul_binomial(std::span<const Int> in, std::size_t shift, std::span<Int> out);
bool div_binomial(std::span<const Int> num, std::size_t shift, std::span<Int> quot);
void residue_sums(std::span<const Int> coeffs, std::span<Int> out);
SignSummary sign_scan(std::span<const Int> values);
bool is_palindrome(std::span<const Int> values);
}  // namespace scalar

#if defined(ORTHOSTEP_HAVE_AVX2)
// Defined in kernels_avx2.cpp, the only TU built with -mavx2.
const KernelTable& avx2_table();
#endif

}  // namespace orthostep::simd

#endif  // ORTHOSTEP_SRC_SIMD_KERNELS_INTERNAL_HPP_
