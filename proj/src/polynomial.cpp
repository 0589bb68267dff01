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

#include "orthostep/polynomial.hpp"

#include <algorithm>
#include <string>

#include "orthostep/simd/kernels.hpp"

namespace orthostep {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { trim(); }

IntPolynomial IntPolynomial::constant(Int c) { return IntPolynomial(std::vector<Int>{c}); }

IntPolynomial IntPolynomial::monomial(Int c, std::size_t exponent) {
  std::vector<Int> v(exponent + 1, 0);
  v[exponent] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial(std::size_t k) {
  std::vector<Int> v(k + 1, 0);
  v[0] = 1;
  v[k] -= 1;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Int IntPolynomial::value_at_one() const {
  Int s = 0;
  for (Int c : coeffs_) s = checked::add(s, c);
  return s;
}

IntPolynomial& IntPolynomial::mul_binomial(std::size_t k) {
  if (is_zero()) return *this;
  std::vector<Int> out(coeffs_.size() + k);
  simd::active_kernels().mul_binomial(coeffs_, k, out);
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::div_binomial(std::size_t k) {
  if (k == 0) throw UsageError("division by 1 - x^0 = 0");
  if (is_zero()) return *this;
  if (coeffs_.size() <= k) {
    throw DivisibilityError("polynomial of degree " + std::to_string(coeffs_.size() - 1) +
                            " is not divisible by 1 - x^" + std::to_string(k));
  }
  std::vector<Int> quot(coeffs_.size() - k);
  if (!simd::active_kernels().div_binomial(coeffs_, k, quot)) {
    throw DivisibilityError("nonzero remainder dividing by 1 - x^" + std::to_string(k));
  }
  coeffs_ = std::move(quot);
  trim();
  return *this;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked::add(a[i], b[i]);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked::sub(a[i], b[i]);
  return IntPolynomial(std::move(v));
}

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Int> v(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      v[i + j] = checked::add(v[i + j], checked::mul(ac[i], bc[j]));
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw UsageError("exact_div: zero divisor");
  if (num.is_zero()) return {};
  if (num.size() < den.size()) throw DivisibilityError("exact_div: divisor has larger degree than dividend");

  std::vector<Int> rem(num.coeffs().begin(), num.coeffs().end());
  const auto d = den.coeffs();
  const std::size_t dn = d.size();
  const Int lead = d.back();
  std::vector<Int> quot(rem.size() - dn + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Int top = rem[k + dn - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw DivisibilityError("exact_div: leading coefficient does not divide");
    const Int c = top / lead;
    quot[k] = c;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] = checked::sub(rem[k + j], checked::mul(c, d[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](Int c) { return c != 0; })) {
    throw DivisibilityError("exact_div: nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial geometric_quotient(Int a, Int b) {
  if (a < 1 || b < 1) throw UsageError("geometric_quotient: a and b must be positive");
  std::vector<Int> v(static_cast<std::size_t>((a - 1) * b + 1), 0);
  for (Int k = 0; k < a; ++k) v[static_cast<std::size_t>(k * b)] = 1;
  return IntPolynomial(std::move(v));
}

std::vector<Int> residue_class_sums(std::span<const Int> coeffs, Int m) {
  if (m < 1) throw UsageError("residue_class_sums: modulus must be positive");
  std::vector<Int> out(static_cast<std::size_t>(m), 0);
  simd::active_kernels().residue_sums(coeffs, out);
  return out;
}

}  // namespace orthostep
