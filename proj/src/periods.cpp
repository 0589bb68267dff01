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

#include "orthostep/periods.hpp"

#include <numeric>
#include <string>

#include "orthostep/builder.hpp"

namespace orthostep {

Int gcd_all(std::span<const Int> values) {
  if (values.empty()) throw UsageError("gcd_all: empty list");
  Int g = 0;
  for (Int v : values) {
    if (v < 1) throw UsageError("gcd_all: values must be positive, got " + std::to_string(v));
    g = std::gcd(g, v);
  }
  return g;
}

Int critical_length_2(Int t1, Int t2) { return t1 + t2 - std::gcd(t1, t2); }

Int critical_length_3(Int t1, Int t2, Int t3) {
  return t1 + t2 + t3 - std::gcd(t1, t2) - std::gcd(t2, t3) - std::gcd(t1, t3) + 1;
}

PeriodSet PeriodSet::normalize(std::span<const Int> periods) {
  if (periods.empty() || periods.size() > kMaxArity) {
    throw UnsupportedArity("between 1 and 4 periods are supported, got " + std::to_string(periods.size()));
  }
  for (Int t : periods) {
    if (t < 1) throw UsageError("periods must be positive integers, got " + std::to_string(t));
  }
  PeriodSet s;
  s.original_.assign(periods.begin(), periods.end());
  s.scale_ = gcd_all(periods);
  for (Int t : periods) s.normalized_.push_back(t / s.scale_);

  const std::size_t n = s.arity();
  const auto& t = s.normalized_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.pair_[i][j] = std::gcd(t[i], t[j]);
  }
  if (n >= 3) {
    for (std::size_t omit = 0; omit < n; ++omit) {
      Int g = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != omit) g = std::gcd(g, t[i]);
      }
      s.triple_[omit] = g;  // for n == 3 only omit = 3 is meaningful; see triple_gcd
    }
  }

  switch (n) {
    case 1:
      s.critical_length_ = 1;
      break;
    case 2:
      s.critical_length_ = critical_length_2(t[0], t[1]);
      break;
    case 3:
      s.critical_length_ = critical_length_3(t[0], t[1], t[2]);
      break;
    default:
      s.critical_length_ = static_cast<Int>(h4_polynomial(t).size());
      break;
  }
  return s;
}

Int PeriodSet::pair_gcd(std::size_t i, std::size_t j) const {
  if (i >= arity() || j >= arity()) throw UsageError("pair_gcd: index out of range");
  return pair_[i][j];
}

Int PeriodSet::triple_gcd(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= arity() || j >= arity() || k >= arity() || i == j || j == k || i == k) {
    throw UsageError("triple_gcd: need three distinct indices in range");
  }
  if (arity() == 3) return 1;
  // n == 4: the subset is identified by the missing index.
  return triple_[6 - i - j - k];
}

std::vector<Int> PeriodSet::rescaled() const {
  std::vector<Int> out;
  for (Int t : normalized_) out.push_back(t * scale_);
  return out;
}

PqrDecomposition pqr_decompose(const PeriodSet& pset, std::size_t distinguished_index) {
  if (pset.arity() != 3) throw UnsupportedArity("pqr_decompose needs exactly three periods");
  if (distinguished_index > 2) throw UsageError("pqr_decompose: distinguished index must be 0, 1 or 2");

  const auto t = pset.normalized();
  std::array<std::size_t, 2> others{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != distinguished_index) others[k++] = i;
  }
  const Int t1 = t[others[0]];
  const Int t2 = t[others[1]];
  const Int t3 = t[distinguished_index];

  PqrDecomposition d;
  d.distinguished_index = distinguished_index;
  d.q = std::gcd(t1, t3);
  d.r = std::gcd(t2, t3);
  if (t3 % (d.q * d.r) != 0) throw ConsistencyError("pqr_decompose: q*r does not divide the distinguished period");
  d.p = t3 / (d.q * d.r);
  d.alpha = t1 / d.q;
  d.beta = t2 / d.r;

  if (std::gcd(d.q, d.r) != 1 || std::gcd(d.alpha, d.p * d.r) != 1 || std::gcd(d.beta, d.p * d.q) != 1) {
    throw ConsistencyError("pqr_decompose: coprimality relations violated");
  }
  return d;
}

}  // namespace orthostep
