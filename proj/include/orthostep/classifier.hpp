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

#ifndef ORTHOSTEP_CLASSIFIER_HPP_
#define ORTHOSTEP_CLASSIFIER_HPP_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "orthostep/builder.hpp"

namespace orthostep {

/// Sign pattern of a profile after flipping it so its first value is positive.
enum class SignClass { kStrictlyPositive, kNonnegativeWithZeros, kMixedSign };

/// "strictly_positive", "nonnegative_with_zeros" or "mixed_sign".
std::string_view to_string(SignClass c);

/// Throws UsageError for an empty or all-zero profile.
SignClass classify(std::span<const Int> values);
inline SignClass classify(const StepProfile& profile) { return classify(profile.values); }

bool is_palindrome(std::span<const Int> values);
inline bool is_palindrome(const StepProfile& profile) { return is_palindrome(profile.values); }

/// How a pair of normalized periods relates to the zero criterion
/// 1 < gcd < min.
enum class PairClause { kCoprime, kGcdIsMin, kStrictlyBetween };

std::string_view to_string(PairClause c);

struct PairCondition {
  std::size_t i = 0;
  std::size_t j = 0;
  Int gcd = 1;
  PairClause clause = PairClause::kCoprime;
};

struct SignPrediction {
  SignClass predicted = SignClass::kStrictlyPositive;
  std::array<PairCondition, 3> pairs{};
  /// First pair that forces strict positivity, if any.
  std::optional<std::size_t> witness;
};

/// Zeros occur iff 1 < gcd(Ti, Tj) < min(Ti, Tj) for every pair of the
/// normalized triple; otherwise h_3 is strictly positive. Never mixed.
SignPrediction predict_h3_sign(Int t1, Int t2, Int t3);

/// Indices into the period tuple.
struct Prop71Witness {
  std::array<std::size_t, 3> triple_a{};
  std::array<std::size_t, 2> pair_a{};
  std::array<std::size_t, 3> triple_b{};
  std::array<std::size_t, 2> pair_b{};
};

/// Two distinct 3-subsets whose gcds equal the gcds of two distinct
/// 2-subsets. Returns the first match found in lexicographic subset order.
std::optional<Prop71Witness> prop71_hypothesis(Int t1, Int t2, Int t3, Int t4);

/// (abc, abd, acd, bcd) for 1 < a < b < c < d pairwise coprime. Throws
/// PreconditionError naming the ordering or the non-coprime pair.
std::array<Int, 4> prop72_family(Int a, Int b, Int c, Int d);

}  // namespace orthostep

#endif  // ORTHOSTEP_CLASSIFIER_HPP_
