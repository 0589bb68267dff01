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

#ifndef ORTHOSTEP_POLYNOMIAL_HPP_
#define ORTHOSTEP_POLYNOMIAL_HPP_

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "orthostep/errors.hpp"

namespace orthostep {

/// Dense polynomial with exact 64-bit integer coefficients.
///
/// Coefficient i multiplies x^i. The stored sequence never ends in a zero,
/// so the zero polynomial is the empty sequence and `degree()` is empty for it.
/// Arithmetic is overflow-checked; a result that does not fit throws
/// OverflowError rather than wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<Int> coeffs);

  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Int c, std::size_t exponent);
  /// 1 - x^k.
  static IntPolynomial binomial(std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Int> coeffs() const { return coeffs_; }
  Int operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  /// Value at x = 1, i.e. the sum of all coefficients.
  Int value_at_one() const;

  /// In-place multiplication by (1 - x^k).
  IntPolynomial& mul_binomial(std::size_t k);
  /// In-place exact division by (1 - x^k); throws DivisibilityError otherwise.
  IntPolynomial& div_binomial(std::size_t k);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<Int> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);

/// Schoolbook product.
IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b);
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) { return mul(a, b); }

/// Integer long division that must be exact. Throws UsageError for a zero
/// divisor and DivisibilityError if a remainder is left or a leading
/// coefficient does not divide.
IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den);

/// (1 - x^{ab}) / (1 - x^b) = sum_{k=0}^{a-1} x^{kb}.
IntPolynomial geometric_quotient(Int a, Int b);

/// S_r = sum of c_k over k = r (mod m), for r = 0..m-1.
std::vector<Int> residue_class_sums(std::span<const Int> coeffs, Int m);
inline std::vector<Int> residue_class_sums(const IntPolynomial& p, Int m) {
  return residue_class_sums(p.coeffs(), m);
}

}  // namespace orthostep

#endif  // ORTHOSTEP_POLYNOMIAL_HPP_
