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

#ifndef ORTHOSTEP_PERIODS_HPP_
#define ORTHOSTEP_PERIODS_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "orthostep/errors.hpp"

namespace orthostep {

inline constexpr std::size_t kMaxArity = 4;

/// gcd of a nonempty list of positive integers.
Int gcd_all(std::span<const Int> values);

/// A tuple of 1..4 positive integer periods, kept in caller order, together
/// with its common gcd (the scale) and the periods divided by it.
///
/// Pairwise and triple gcds refer to the normalized periods. The critical
/// length is in normalized units; multiply by scale() for original units.
class PeriodSet {
 public:
  /// Throws UnsupportedArity for n = 0 or n > 4 and UsageError for a
  /// period < 1.
  static PeriodSet normalize(std::span<const Int> periods);
  static PeriodSet normalize(std::initializer_list<Int> periods) {
    return normalize(std::span<const Int>(periods.begin(), periods.size()));
  }

  std::size_t arity() const { return original_.size(); }
  std::span<const Int> original() const { return original_; }
  std::span<const Int> normalized() const { return normalized_; }
  Int scale() const { return scale_; }

  Int pair_gcd(std::size_t i, std::size_t j) const;
  /// Only defined for n >= 3.
  Int triple_gcd(std::size_t i, std::size_t j, std::size_t k) const;

  /// n=1: 1. n=2: T1+T2-g12. n=3: the inclusion-exclusion formula.
  /// n=4: deg P4 + 1 from the product construction.
  Int critical_length() const { return critical_length_; }

  /// The original periods, recovered as scale * normalized.
  std::vector<Int> rescaled() const;

 private:
  PeriodSet() = default;

  std::vector<Int> original_;
  std::vector<Int> normalized_;
  Int scale_ = 1;
  std::array<std::array<Int, kMaxArity>, kMaxArity> pair_{};
  std::array<Int, kMaxArity> triple_{};  // indexed by the omitted period
  Int critical_length_ = 0;
};

/// T1 + T2 + T3 - g12 - g23 - g13 + 1 for a normalized triple.
Int critical_length_3(Int t1, Int t2, Int t3);

/// T1 + T2 - g12 for a normalized pair.
Int critical_length_2(Int t1, Int t2);

/// Arithmetic data for a triple with one period in the distinguished
/// role: q = gcd(other1, T), r = gcd(other2, T), T = p q r,
/// other1 = alpha q, other2 = beta r.
struct PqrDecomposition {
  std::size_t distinguished_index = 2;
  Int p = 1;
  Int q = 1;
  Int r = 1;
  Int alpha = 1;
  Int beta = 1;

  /// Degree of Q(x), pqr - q - r + 1.
  Int coeff_degree() const { return p * q * r - q - r + 1; }

  friend bool operator==(const PqrDecomposition&, const PqrDecomposition&) = default;
};

/// Requires a PeriodSet with n = 3. The remaining two periods keep their
/// stored order in the alpha and beta roles. Throws ConsistencyError if the
/// coprimality relations gcd(q,r) = gcd(alpha,pr) = gcd(beta,pq) = 1 fail.
PqrDecomposition pqr_decompose(const PeriodSet& pset, std::size_t distinguished_index = 2);

}  // namespace orthostep

#endif  // ORTHOSTEP_PERIODS_HPP_
