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

#include "orthostep/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "orthostep/simd/kernels.hpp"

namespace orthostep {

std::string_view to_string(SignClass c) {
  switch (c) {
    case SignClass::kStrictlyPositive:
      return "strictly_positive";
    case SignClass::kNonnegativeWithZeros:
      return "nonnegative_with_zeros";
    case SignClass::kMixedSign:
      return "mixed_sign";
  }
  return "unknown";
}

std::string_view to_string(PairClause c) {
  switch (c) {
    case PairClause::kCoprime:
      return "coprime";
    case PairClause::kGcdIsMin:
      return "gcd_is_min";
    case PairClause::kStrictlyBetween:
      return "strictly_between";
  }
  return "unknown";
}

SignClass classify(std::span<const Int> values) {
  const auto first = std::find_if(values.begin(), values.end(), [](Int v) { return v != 0; });
  if (first == values.end()) throw UsageError("classify: profile is empty or identically zero");

  simd::SignSummary s = simd::active_kernels().sign_scan(values);
  if (*first < 0) std::swap(s.has_negative, s.has_positive);
  if (s.has_negative && s.has_positive) return SignClass::kMixedSign;
  // A profile whose first value is zero counts as having zeros.
  if (s.has_zero) return SignClass::kNonnegativeWithZeros;
  return SignClass::kStrictlyPositive;
}

bool is_palindrome(std::span<const Int> values) { return simd::active_kernels().is_palindrome(values); }

SignPrediction predict_h3_sign(Int t1, Int t2, Int t3) {
  const PeriodSet pset = PeriodSet::normalize({t1, t2, t3});
  const auto t = pset.normalized();
  SignPrediction out;
  constexpr std::array<std::array<std::size_t, 2>, 3> kPairs{{{0, 1}, {1, 2}, {0, 2}}};
  bool all_between = true;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [i, j] = kPairs[k];
    PairCondition& pc = out.pairs[k];
    pc.i = i;
    pc.j = j;
    pc.gcd = pset.pair_gcd(i, j);
    if (pc.gcd == 1) {
      pc.clause = PairClause::kCoprime;
    } else if (pc.gcd == std::min(t[i], t[j])) {
      pc.clause = PairClause::kGcdIsMin;
    } else {
      pc.clause = PairClause::kStrictlyBetween;
    }
    if (pc.clause != PairClause::kStrictlyBetween) {
      all_between = false;
      if (!out.witness) out.witness = k;
    }
  }
  out.predicted = all_between ? SignClass::kNonnegativeWithZeros : SignClass::kStrictlyPositive;
  return out;
}

std::optional<Prop71Witness> prop71_hypothesis(Int t1, Int t2, Int t3, Int t4) {
  const std::array<Int, 4> t{t1, t2, t3, t4};
  for (Int v : t) {
    if (v < 1) throw UsageError("prop71_hypothesis: periods must be positive");
  }
  std::vector<std::array<std::size_t, 3>> triples;
  std::vector<std::array<std::size_t, 2>> pairs;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      pairs.push_back({i, j});
      for (std::size_t k = j + 1; k < 4; ++k) triples.push_back({i, j, k});
    }
  }
  auto tg = [&](const std::array<std::size_t, 3>& s) { return std::gcd(std::gcd(t[s[0]], t[s[1]]), t[s[2]]); };
  auto pg = [&](const std::array<std::size_t, 2>& s) { return std::gcd(t[s[0]], t[s[1]]); };

  for (std::size_t ta = 0; ta < triples.size(); ++ta) {
    for (std::size_t tb = 0; tb < triples.size(); ++tb) {
      if (ta == tb) continue;
      for (std::size_t pa = 0; pa < pairs.size(); ++pa) {
        if (tg(triples[ta]) != pg(pairs[pa])) continue;
        for (std::size_t pb = 0; pb < pairs.size(); ++pb) {
          if (pa == pb || tg(triples[tb]) != pg(pairs[pb])) continue;
          return Prop71Witness{triples[ta], pairs[pa], triples[tb], pairs[pb]};
        }
      }
    }
  }
  return std::nullopt;
}

std::array<Int, 4> prop72_family(Int a, Int b, Int c, Int d) {
  if (!(1 < a && a < b && b < c && c < d)) {
    throw PreconditionError("family parameters must satisfy 1 < a < b < c < d, got (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + ")");
  }
  const std::array<Int, 4> v{a, b, c, d};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (const Int g = std::gcd(v[i], v[j]); g != 1) {
        throw PreconditionError("family parameters must be pairwise coprime, but gcd(" + std::to_string(v[i]) + "," +
                                std::to_string(v[j]) + ") = " + std::to_string(g));
      }
    }
  }
  return {checked::mul(checked::mul(a, b), c), checked::mul(checked::mul(a, b), d),
          checked::mul(checked::mul(a, c), d), checked::mul(checked::mul(b, c), d)};
}

}  // namespace orthostep
