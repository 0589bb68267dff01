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

#include <gtest/gtest.h>

#include <limits>
#include <numeric>
#include <random>

namespace orthostep {
namespace {

using P = IntPolynomial;

TEST(IntPolynomial, TrimsTrailingZeros) {
  const P p{1, 2, 0, 0};
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_TRUE((P{0, 0}.is_zero()));
  EXPECT_FALSE(P{}.degree().has_value());
}

TEST(Mul, Examples) {
  EXPECT_EQ(mul(P{1, 1}, P{1, 1, 1}), (P{1, 2, 2, 1}));
  const P p{3, -1, 4};
  EXPECT_EQ(mul(p, P{1}), p);
  EXPECT_TRUE(mul(p, P{}).is_zero());
}

TEST(Mul, DetectsOverflow) {
  const Int big = std::numeric_limits<Int>::max() / 2 + 1;
  EXPECT_THROW(mul(P{big}, P{2}), OverflowError);
}

TEST(ExactDiv, Examples) {
  EXPECT_EQ(exact_div(P::binomial(6), P::binomial(3)), (P{1, 0, 0, 1}));
  EXPECT_EQ(exact_div(mul(P::binomial(1), P::binomial(6)), mul(P::binomial(2), P::binomial(3))), (P{1, -1, 1}));
  EXPECT_EQ(exact_div(P{1, 1}, P{1, 1}), P{1});
}

TEST(ExactDiv, Errors) {
  EXPECT_THROW(exact_div(P{1, 1}, P{}), UsageError);
  EXPECT_THROW(exact_div(P::binomial(5), P::binomial(3)), DivisibilityError);
  EXPECT_THROW(exact_div(P{1, 1}, P{1, 2}), DivisibilityError);
  EXPECT_THROW(exact_div(P{1}, P{1, 1}), DivisibilityError);
}

TEST(BinomialOps, MatchGenericOps) {
  P p{1, 2, 3, 4, 5, 6, 7, 8, 9};
  P q = p;
  q.mul_binomial(5);
  EXPECT_EQ(q, mul(p, P::binomial(5)));
  q.div_binomial(5);
  EXPECT_EQ(q, p);
  EXPECT_THROW(P(p).div_binomial(4), DivisibilityError);
  EXPECT_THROW((P{1, 1}.div_binomial(3)), DivisibilityError);
}

TEST(GeometricQuotient, Examples) {
  EXPECT_EQ(geometric_quotient(3, 2), (P{1, 0, 1, 0, 1}));
  EXPECT_EQ(geometric_quotient(1, 7), P{1});
  EXPECT_EQ(geometric_quotient(4, 1), (P{1, 1, 1, 1}));
  EXPECT_THROW(geometric_quotient(0, 1), UsageError);
}

TEST(ResidueClassSums, Examples) {
  const P p{1, 2, 2, 1};
  EXPECT_EQ(residue_class_sums(p, 2), (std::vector<Int>{3, 3}));
  EXPECT_EQ(residue_class_sums(p, 3), (std::vector<Int>{2, 2, 2}));
  EXPECT_EQ(residue_class_sums(P{1}, 4), (std::vector<Int>{1, 0, 0, 0}));
  EXPECT_THROW(residue_class_sums(p, 0), UsageError);
}

class PolynomialProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{7};
  P random_poly(std::size_t max_len, Int mag) {
    const auto len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
    std::vector<Int> c(len);
    for (auto& v : c) v = std::uniform_int_distribution<Int>(-mag, mag)(rng);
    c.back() = c.back() == 0 ? 1 : c.back();
    return P(std::move(c));
  }
};

TEST_F(PolynomialProperties, DivisionUndoesMultiplication) {
  for (int i = 0; i < 300; ++i) {
    const P a = random_poly(40, 50);
    P b = random_poly(12, 50);
    // Monic up to sign so that integer long division applies.
    std::vector<Int> bc(b.coeffs().begin(), b.coeffs().end());
    bc.back() = (i % 2) ? 1 : -1;
    b = P(bc);
    EXPECT_EQ(exact_div(mul(a, b), b), a);
  }
}

TEST_F(PolynomialProperties, GeometricQuotientIdentity) {
  for (int i = 0; i < 200; ++i) {
    const Int a = std::uniform_int_distribution<Int>(1, 30)(rng);
    const Int b = std::uniform_int_distribution<Int>(1, 30)(rng);
    const P g = geometric_quotient(a, b);
    EXPECT_EQ(mul(g, P::binomial(static_cast<std::size_t>(b))), P::binomial(static_cast<std::size_t>(a * b)));
    EXPECT_EQ(g.degree(), static_cast<std::size_t>((a - 1) * b));
    for (Int c : g.coeffs()) EXPECT_TRUE(c == 0 || c == 1);
  }
}

TEST_F(PolynomialProperties, ResidueSumsTotalValueAtOne) {
  for (int i = 0; i < 300; ++i) {
    const P p = random_poly(80, 1000);
    EXPECT_EQ(residue_class_sums(p, 1), std::vector<Int>{p.value_at_one()});
    const Int m = std::uniform_int_distribution<Int>(1, 25)(rng);
    const auto s = residue_class_sums(p, m);
    EXPECT_EQ(std::accumulate(s.begin(), s.end(), Int{0}), p.value_at_one());
  }
}

}  // namespace
}  // namespace orthostep
