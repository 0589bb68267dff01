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

// Built with -mavx2. Nothing here may run before avx2_kernels() has
// confirmed CPU support.

#include <immintrin.h>

#include <algorithm>

#include "orthostep/simd/kernels.hpp"
#include "simd/kernels_internal.hpp"

namespace orthostep::simd {
namespace avx2 {
namespace {

constexpr std::size_t kLanes = 4;

inline __m256i load(const Int* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Int* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Sign bit of each lane set where a + b (resp. a - b) wrapped.
inline __m256i add_overflow(__m256i a, __m256i b, __m256i r) {
  return _mm256_andnot_si256(_mm256_xor_si256(a, b), _mm256_xor_si256(a, r));
}
inline __m256i sub_overflow(__m256i a, __m256i b, __m256i r) {
  return _mm256_and_si256(_mm256_xor_si256(a, b), _mm256_xor_si256(a, r));
}

inline bool any_sign(__m256i v) { return _mm256_movemask_pd(_mm256_castsi256_pd(v)) != 0; }

[[noreturn]] void overflow() { throw OverflowError("integer overflow in AVX2 kernel"); }

}  // namespace

void mul_binomial(std::span<const Int> in, std::size_t shift, std::span<Int> out) {
  const std::size_t n = in.size();
  const std::size_t head = std::min(shift, n);
  std::copy_n(in.begin(), head, out.begin());
  for (std::size_t i = head; i < shift; ++i) out[i] = 0;

  // Overlap region: both operands are real loads.
  std::size_t i = shift;
  __m256i ov = _mm256_setzero_si256();
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i a = load(&in[i]);
    const __m256i b = load(&in[i - shift]);
    const __m256i r = _mm256_sub_epi64(a, b);
    ov = _mm256_or_si256(ov, sub_overflow(a, b, r));
    store(&out[i], r);
  }
  if (any_sign(ov)) overflow();
  for (; i < n; ++i) out[i] = checked::sub(in[i], in[i - shift]);
  for (i = std::max(n, shift); i < out.size(); ++i) out[i] = checked::sub(0, in[i - shift]);
}

bool div_binomial(std::span<const Int> num, std::size_t shift, std::span<Int> quot) {
  if (shift < kLanes) return scalar::div_binomial(num, shift, quot);
  const std::size_t len = quot.size();
  const std::size_t head = std::min(shift, len);
  std::copy_n(num.begin(), head, quot.begin());

  // shift >= 4, so every lane of quot[i - shift .. i - shift + 3] is final.
  std::size_t i = head;
  __m256i ov = _mm256_setzero_si256();
  for (; i + kLanes <= len; i += kLanes) {
    const __m256i a = load(&num[i]);
    const __m256i b = load(&quot[i - shift]);
    const __m256i r = _mm256_add_epi64(a, b);
    ov = _mm256_or_si256(ov, add_overflow(a, b, r));
    store(&quot[i], r);
  }
  if (any_sign(ov)) overflow();
  for (; i < len; ++i) quot[i] = checked::add(num[i], quot[i - shift]);

  for (i = len; i < num.size(); ++i) {
    const Int carried = i >= shift && i - shift < len ? quot[i - shift] : 0;
    if (checked::add(num[i], carried) != 0) return false;
  }
  return true;
}

void residue_sums(std::span<const Int> coeffs, std::span<Int> out) {
  const std::size_t m = out.size();
  if (m < kLanes) {
    scalar::residue_sums(coeffs, out);
    return;
  }
  std::fill(out.begin(), out.end(), Int{0});
  __m256i ov = _mm256_setzero_si256();
  std::size_t base = 0;
  for (; base + m <= coeffs.size(); base += m) {
    std::size_t r = 0;
    for (; r + kLanes <= m; r += kLanes) {
      const __m256i a = load(&out[r]);
      const __m256i b = load(&coeffs[base + r]);
      const __m256i s = _mm256_add_epi64(a, b);
      ov = _mm256_or_si256(ov, add_overflow(a, b, s));
      store(&out[r], s);
    }
    for (; r < m; ++r) out[r] = checked::add(out[r], coeffs[base + r]);
  }
  if (any_sign(ov)) overflow();
  for (std::size_t k = base; k < coeffs.size(); ++k) out[k - base] = checked::add(out[k - base], coeffs[k]);
}

SignSummary sign_scan(std::span<const Int> values) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i neg = zero, pos = zero, nul = zero;
  std::size_t i = 0;
  for (; i + kLanes <= values.size(); i += kLanes) {
    const __m256i v = load(&values[i]);
    neg = _mm256_or_si256(neg, _mm256_cmpgt_epi64(zero, v));
    pos = _mm256_or_si256(pos, _mm256_cmpgt_epi64(v, zero));
    nul = _mm256_or_si256(nul, _mm256_cmpeq_epi64(v, zero));
  }
  SignSummary s{any_sign(neg), any_sign(nul), any_sign(pos)};
  const SignSummary tail = scalar::sign_scan(values.subspan(i));
  s.has_negative |= tail.has_negative;
  s.has_zero |= tail.has_zero;
  s.has_positive |= tail.has_positive;
  return s;
}

bool is_palindrome(std::span<const Int> values) {
  const std::size_t n = values.size();
  std::size_t i = 0;
  for (; i + kLanes <= n / 2; i += kLanes) {
    const __m256i front = load(&values[i]);
    const __m256i back = _mm256_permute4x64_epi64(load(&values[n - i - kLanes]), _MM_SHUFFLE(0, 1, 2, 3));
    const __m256i eq = _mm256_cmpeq_epi64(front, back);
    if (_mm256_movemask_pd(_mm256_castsi256_pd(eq)) != 0xF) return false;
  }
  for (; i < n / 2; ++i) {
    if (values[i] != values[n - 1 - i]) return false;
  }
  return true;
}

}  // namespace avx2

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::kAvx2,        avx2::mul_binomial, avx2::div_binomial,
                                 avx2::residue_sums, avx2::sign_scan,    avx2::is_palindrome};
  return table;
}

}  // namespace orthostep::simd
