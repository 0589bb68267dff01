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

#include <algorithm>

#include "orthostep/simd/kernels.hpp"
#include "simd/kernels_internal.hpp"

namespace orthostep::simd {
namespace scalar {

void mul_binomial(std::span<const Int> in, std::size_t shift, std::span<Int> out) {
  const std::size_t n = in.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Int hi = i < n ? in[i] : 0;
    const Int lo = (i >= shift && i - shift < n) ? in[i - shift] : 0;
    out[i] = checked::sub(hi, lo);
  }
}

bool div_binomial(std::span<const Int> num, std::size_t shift, std::span<Int> quot) {
  const std::size_t len = quot.size();
  for (std::size_t i = 0; i < len; ++i) {
    quot[i] = i >= shift ? checked::add(num[i], quot[i - shift]) : num[i];
  }
  for (std::size_t i = len; i < num.size(); ++i) {
    const Int carried = i >= shift && i - shift < len ? quot[i - shift] : 0;
    if (checked::add(num[i], carried) != 0) return false;
  }
  return true;
}

void residue_sums(std::span<const Int> coeffs, std::span<Int> out) {
  std::fill(out.begin(), out.end(), Int{0});
  const std::size_t m = out.size();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out[k % m] = checked::add(out[k % m], coeffs[k]);
  }
}

SignSummary sign_scan(std::span<const Int> values) {
  SignSummary s;
  for (Int v : values) {
    s.has_negative |= v < 0;
    s.has_zero |= v == 0;
    s.has_positive |= v > 0;
  }
  return s;
}

bool is_palindrome(std::span<const Int> values) {
  return std::equal(values.begin(), values.begin() + values.size() / 2, values.rbegin());
}

}  // namespace scalar

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::kScalar,        scalar::mul_binomial, scalar::div_binomial,
                                 scalar::residue_sums, scalar::sign_scan,    scalar::is_palindrome};
  return table;
}

}  // namespace orthostep::simd
