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

#include "orthostep/builder.hpp"

#include <array>
#include <bit>
#include <numeric>
#include <string>

namespace orthostep {
namespace {

std::size_t as_size(Int v) { return static_cast<std::size_t>(v); }

StepProfile make_profile(const PeriodSet& pset, const IntPolynomial& p) {
  StepProfile out{pset.scale(), std::vector<Int>(p.coeffs().begin(), p.coeffs().end()), pset};
  if (out.values.empty() || out.values.front() == 0) {
    throw ConsistencyError("constructed profile does not start with a nonzero value");
  }
  return out;
}

}  // namespace

std::vector<Int> StepProfile::expand_to_unit() const {
  std::vector<Int> out;
  out.reserve(values.size() * as_size(step_width));
  for (Int v : values) out.insert(out.end(), as_size(step_width), v);
  return out;
}

IntPolynomial orthogonal_polynomial(std::span<const Int> normalized) {
  const std::size_t n = normalized.size();
  if (n == 0 || n > kMaxArity) throw UnsupportedArity("orthogonal_polynomial supports 1..4 periods");

  std::vector<Int> numerator_exps;
  std::vector<Int> denominator_exps{1};
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) g = std::gcd(g, normalized[i]);
    }
    (std::popcount(mask) % 2 == 1 ? numerator_exps : denominator_exps).push_back(g);
  }

  IntPolynomial p = IntPolynomial::constant(1);
  for (Int e : numerator_exps) p.mul_binomial(as_size(e));
  for (Int e : denominator_exps) p.div_binomial(as_size(e));
  return p;
}

IntPolynomial h4_polynomial(std::span<const Int> normalized) {
  if (normalized.size() != 4) throw UnsupportedArity("h4_polynomial needs four periods");
  return orthogonal_polynomial(normalized);
}

IntPolynomial h2_polynomial(Int t1, Int t2) {
  const Int g = std::gcd(t1, t2);
  return mul(geometric_quotient(t2 / g, g), geometric_quotient(t1, 1));
}

StepProfile build_h1(Int t1) {
  const PeriodSet pset = PeriodSet::normalize({t1});
  return StepProfile{1, std::vector<Int>(as_size(t1), 1), pset};
}

StepProfile build_h2(Int t1, Int t2) {
  const PeriodSet pset = PeriodSet::normalize({t1, t2});
  const auto t = pset.normalized();
  return make_profile(pset, h2_polynomial(t[0], t[1]));
}

StepProfile build_h3(Int t1, Int t2, Int t3) {
  const PeriodSet pset = PeriodSet::normalize({t1, t2, t3});
  StepProfile out = make_profile(pset, orthogonal_polynomial(pset.normalized()));
  if (static_cast<Int>(out.values.size()) != pset.critical_length()) {
    throw ConsistencyError("h3 support does not match the critical length");
  }
  return out;
}

StepProfile build_h3_chain(Int t1, Int t2, Int t3, std::size_t distinguished_index) {
  const PeriodSet pset = PeriodSet::normalize({t1, t2, t3});
  const PqrDecomposition dec = pqr_decompose(pset, distinguished_index);
  const auto t = pset.normalized();
  std::array<Int, 2> others{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != distinguished_index) others[k++] = t[i];
  }
  const CoeffSequence q = coeff_by_division(dec);
  return make_profile(pset, mul(IntPolynomial(q.a), h2_polynomial(others[0], others[1])));
}

StepProfile build_h4(Int t1, Int t2, Int t3, Int t4) {
  const PeriodSet pset = PeriodSet::normalize({t1, t2, t3, t4});
  return make_profile(pset, h4_polynomial(pset.normalized()));
}

StepProfile build_hn(std::span<const Int> periods) {
  switch (periods.size()) {
    case 1:
      return build_h1(periods[0]);
    case 2:
      return build_h2(periods[0], periods[1]);
    case 3:
      return build_h3(periods[0], periods[1], periods[2]);
    case 4:
      return build_h4(periods[0], periods[1], periods[2], periods[3]);
    default:
      throw UnsupportedArity("between 1 and 4 periods are supported, got " + std::to_string(periods.size()));
  }
}

CoeffSequence coeff_by_division(const PqrDecomposition& dec) {
  if (std::gcd(dec.q, dec.r) != 1) throw PreconditionError("coeff_by_division: q and r must be coprime");
  const Int pqr = dec.p * dec.q * dec.r;
  const IntPolynomial num = mul(IntPolynomial::binomial(1), IntPolynomial::binomial(as_size(pqr)));
  const IntPolynomial den = mul(IntPolynomial::binomial(as_size(dec.q)), IntPolynomial::binomial(as_size(dec.r)));
  IntPolynomial quotient = exact_div(num, den);
  if (quotient.size() != as_size(dec.coeff_degree() + 1)) {
    throw ConsistencyError("coeff_by_division: quotient degree differs from pqr - q - r + 1");
  }
  return CoeffSequence{std::vector<Int>(quotient.coeffs().begin(), quotient.coeffs().end()), dec};
}

Int representation_count(Int k, Int q, Int r) {
  if (k < 0) return 0;
  Int count = 0;
  for (Int m = 0; m * r <= k; ++m) {
    if ((k - m * r) % q == 0) ++count;
  }
  return count;
}

CoeffSequence coeff_closed_form(const PqrDecomposition& dec) {
  if (std::gcd(dec.q, dec.r) != 1) throw PreconditionError("coeff_closed_form: q and r must be coprime");
  const Int last = dec.coeff_degree();
  std::vector<Int> a(as_size(last + 1), 0);
  if (dec.q == 1 || dec.r == 1) {
    const Int step = dec.q == 1 ? dec.r : dec.q;
    for (Int j = 0; j <= last; j += step) a[as_size(j)] = 1;
  } else {
    Int prev = 0;
    for (Int j = 0; j <= last; ++j) {
      const Int cur = representation_count(j, dec.q, dec.r);
      a[as_size(j)] = cur - prev;
      prev = cur;
    }
  }
  return CoeffSequence{std::move(a), dec};
}

std::vector<Block> h2_block_profile(Int t1, Int t2) {
  if (t1 < 1 || t2 < 1) throw UsageError("h2_block_profile: periods must be positive");
  const Int d = std::gcd(t1, t2);
  if (!(d < t2)) {
    throw PreconditionError("h2_block_profile: requires gcd(T1,T2) < T2, but gcd = " + std::to_string(d) +
                            " and T2 = " + std::to_string(t2));
  }
  if (!(t2 < t1)) {
    throw PreconditionError("h2_block_profile: requires T2 < T1, got T1 = " + std::to_string(t1) +
                            ", T2 = " + std::to_string(t2));
  }
  const Int m = t2 / d;
  std::vector<Block> blocks;
  for (Int v = 1; v < m; ++v) blocks.push_back({v, d});
  blocks.push_back({m, t1 - t2 + d});
  for (Int v = m - 1; v >= 1; --v) blocks.push_back({v, d});
  return blocks;
}

std::vector<Int> expand_blocks(std::span<const Block> blocks) {
  std::vector<Int> out;
  for (const Block& b : blocks) out.insert(out.end(), as_size(b.count), b.value);
  return out;
}

}  // namespace orthostep
