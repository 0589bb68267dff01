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

#ifndef ORTHOSTEP_BUILDER_HPP_
#define ORTHOSTEP_BUILDER_HPP_

#include <span>
#include <vector>

#include "orthostep/periods.hpp"
#include "orthostep/polynomial.hpp"

namespace orthostep {

/// The orthogonal function h_n as a step function: values[j] on
/// [j * step_width, (j + 1) * step_width) in original time units.
struct StepProfile {
  Int step_width = 1;
  std::vector<Int> values;
  PeriodSet periods;

  /// Support length in original units.
  Int length() const { return step_width * static_cast<Int>(values.size()); }

  /// The same function sampled on unit-width steps (each value repeated
  /// step_width times).
  std::vector<Int> expand_to_unit() const;
};

/// Coefficients a_0..a_{pqr-q-r+1} with h_3(t) = sum_j a_j h_2(t - j).
struct CoeffSequence {
  std::vector<Int> a;
  PqrDecomposition decomposition;
};

/// Run-length block `value^count`.
struct Block {
  Int value = 0;
  Int count = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Inclusion-exclusion product over normalized periods (1 <= n <= 4):
///
///   prod_{|S| odd} (1 - x^{g_S}) / ( (1 - x) prod_{|S| even} (1 - x^{g_S}) )
///
/// where g_S is the gcd of the subset S. For n = 1, 2, 3, 4 this is P_1, the
/// symmetric form of P_2 and P_3, and P_4 = P_3-numerator * Q_4 / denominators.
/// Computed with binomial multiply / exact divide; throws DivisibilityError if
/// a division is not exact.
IntPolynomial orthogonal_polynomial(std::span<const Int> normalized);

/// P_4 for four normalized periods; used to define the n = 4 critical length.
IntPolynomial h4_polynomial(std::span<const Int> normalized);

/// P_2 = (1 - x^{T2}) / (1 - x^{g12}) * (1 - x^{T1}) / (1 - x) as a product of
/// geometric quotients. T1, T2 are taken as given (not rescaled).
IntPolynomial h2_polynomial(Int t1, Int t2);

/// Characteristic function of [0, T1): T1 unit steps of value 1.
StepProfile build_h1(Int t1);
StepProfile build_h2(Int t1, Int t2);
StepProfile build_h3(Int t1, Int t2, Int t3);
StepProfile build_h4(Int t1, Int t2, Int t3, Int t4);
/// Dispatch on arity (1..4).
StepProfile build_hn(std::span<const Int> periods);

/// h_3 through the asymmetric chain Q(x) * P_2(x), with the period at
/// `distinguished_index` in the role of T_3. Must equal build_h3.
StepProfile build_h3_chain(Int t1, Int t2, Int t3, std::size_t distinguished_index = 2);

/// Q(x) = (1 - x)(1 - x^{pqr}) / ((1 - x^q)(1 - x^r)) by long division.
CoeffSequence coeff_by_division(const PqrDecomposition& dec);

/// The same coefficients from their closed form:
///   q = 1:        a_j = [r | j],          0 <= j <= pr - r
///   r = 1:        a_j = [q | j],          0 <= j <= pq - q
///   q, r >= 2:    a_j = N(j) - N(j - 1),  0 <= j <= pqr - q - r + 1
/// with N(k) the number of (l, m) >= 0 such that lq + mr = k.
CoeffSequence coeff_closed_form(const PqrDecomposition& dec);

/// N(k) = #{(l, m) in Z_{>=0}^2 : l q + m r = k}; 0 for k < 0.
Int representation_count(Int k, Int q, Int r);

/// h_2 as blocks 1^d 2^d ... (m-1)^d m^{T1-T2+d} (m-1)^d ... 1^d on unit
/// steps, d = gcd(T1, T2), m = T2 / d. Requires gcd(T1,T2) < T2 < T1 and
/// throws PreconditionError naming the inequality that fails.
std::vector<Block> h2_block_profile(Int t1, Int t2);

std::vector<Int> expand_blocks(std::span<const Block> blocks);

}  // namespace orthostep

#endif  // ORTHOSTEP_BUILDER_HPP_
