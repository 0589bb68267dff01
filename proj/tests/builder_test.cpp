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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "orthostep/classifier.hpp"
#include "orthostep/oracle.hpp"

namespace orthostep {
namespace {

using Values = std::vector<Int>;

// Brute force: sum_{j in shifts} f(t - j) on unit steps.
Values shifted_sum(const Values& f, const Values& shifts) {
  const Int last = *std::max_element(shifts.begin(), shifts.end());
  Values out(f.size() + static_cast<std::size_t>(last), 0);
  for (Int s : shifts) {
    for (std::size_t i = 0; i < f.size(); ++i) out[i + static_cast<std::size_t>(s)] += f[i];
  }
  return out;
}

Values iota_shifts(Int count, Int step) {
  Values v;
  for (Int j = 0; j < count; ++j) v.push_back(j * step);
  return v;
}

const Values kGolden_35_21_15{1, 0, 0, 1, 0, 1, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 2, 3, 2, 3, 3, 2, 3, 3, 3, 3, 3, 3, 3,
                              3, 3, 3, 3, 3, 3, 2, 3, 3, 2, 3, 2, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1, 0, 1, 0, 0, 1};

TEST(BuildH1, Examples) {
  EXPECT_EQ(build_h1(7).values, Values(7, 1));
  EXPECT_EQ(build_h1(1).values, Values{1});
  EXPECT_EQ(build_h1(3).values, (Values{1, 1, 1}));
  EXPECT_EQ(build_h1(3).step_width, 1);
}

TEST(BuildH2, Examples) {
  EXPECT_EQ(build_h2(7, 4).values, (Values{1, 2, 3, 4, 4, 4, 4, 3, 2, 1}));
  EXPECT_EQ(build_h2(3, 2).values, (Values{1, 2, 2, 1}));
  const StepProfile p = build_h2(8, 4);
  EXPECT_EQ(p.step_width, 4);
  EXPECT_EQ(p.expand_to_unit(), Values(8, 1));
}

TEST(BuildH2, MatchesShiftedCharacteristicFunctions) {
  for (Int t1 = 1; t1 <= 18; ++t1) {
    for (Int t2 = 1; t2 <= 18; ++t2) {
      const Int d = std::gcd(t1, t2);
      const StepProfile p = build_h2(t1, t2);
      EXPECT_EQ(p.expand_to_unit(), shifted_sum(Values(static_cast<std::size_t>(t1), 1), iota_shifts(t2 / d, d)))
          << t1 << "," << t2;
      EXPECT_EQ(classify(p), SignClass::kStrictlyPositive);
    }
  }
}

TEST(CoeffByDivision, Examples) {
  EXPECT_EQ(coeff_by_division({2, 1, 2, 3, 1, 1}).a, (Values{1, -1, 1}));
  EXPECT_EQ(coeff_by_division({2, 2, 1, 3, 1, 1}).a, (Values{1, 0, 0, 1}));
  EXPECT_EQ(coeff_by_division({2, 1, 1, 1, 1, 1}).a, Values{1});
  EXPECT_THROW(coeff_by_division({2, 1, 2, 4, 1, 1}), PreconditionError);
}

TEST(CoeffClosedForm, Examples) {
  EXPECT_EQ(coeff_closed_form({2, 1, 2, 3, 1, 1}).a, (Values{1, -1, 1}));
  EXPECT_EQ(coeff_closed_form({2, 13, 1, 1, 1, 1}).a, Values(13, 1));
  const auto a = coeff_closed_form({2, 1, 2, 5, 1, 1}).a;
  EXPECT_EQ(a[4], 1);
  EXPECT_EQ(representation_count(4, 2, 3), 1);
  EXPECT_EQ(representation_count(1, 2, 3), 0);
  EXPECT_EQ(representation_count(6, 2, 3), 2);
  EXPECT_EQ(representation_count(-1, 2, 3), 0);
}

TEST(CoeffSequences, AgreeForSmallParameters) {
  for (Int p = 1; p <= 8; ++p) {
    for (Int q = 1; q <= 8; ++q) {
      for (Int r = 1; r <= 8; ++r) {
        if (std::gcd(q, r) != 1) continue;
        const PqrDecomposition d{2, p, q, r, 1, 1};
        const Values a = coeff_closed_form(d).a;
        ASSERT_EQ(a, coeff_by_division(d).a) << p << "," << q << "," << r;
        const auto qr = q * r;
        EXPECT_EQ(a.front(), 1);
        EXPECT_EQ(a.back(), 1);
        // Product identity (1 - x^q)(1 - x^r) Q = (1 - x)(1 - x^{pqr}).
        const IntPolynomial lhs = IntPolynomial::binomial(static_cast<std::size_t>(q)) *
                                  IntPolynomial::binomial(static_cast<std::size_t>(r)) * IntPolynomial(a);
        EXPECT_EQ(lhs, IntPolynomial::binomial(1) * IntPolynomial::binomial(static_cast<std::size_t>(p * qr)));
        if (q >= 2 && r >= 2) {
          for (std::size_t j = 0; j < a.size(); ++j) {
            EXPECT_TRUE(a[j] >= -1 && a[j] <= 1);
            if (j + static_cast<std::size_t>(qr) < a.size()) EXPECT_EQ(a[j], a[j + static_cast<std::size_t>(qr)]);
            const auto jj = static_cast<Int>(j);
            if ((q - 1) * (r - 1) < jj && jj < qr) EXPECT_EQ(a[j], 0);
          }
          EXPECT_EQ(a[static_cast<std::size_t>((q - 1) * (r - 1))], 1);
        } else {
          for (Int v : a) EXPECT_TRUE(v == 0 || v == 1);
        }
      }
    }
  }
}

TEST(BuildH3, GoldenThirtyFiveTwentyOneFifteen) {
  const StepProfile p = build_h3(35, 21, 15);
  EXPECT_EQ(p.values, kGolden_35_21_15);
  EXPECT_EQ(p.step_width, 1);
  EXPECT_TRUE(is_palindrome(p));
}

TEST(BuildH3, EightFourThirteenIsRampPlateauRamp) {
  // q = r = 1: h3 = sum_{j=0}^{12} h2(t - j) with h2 = 1^8.
  const Values expected = shifted_sum(Values(8, 1), iota_shifts(13, 1));
  const StepProfile p = build_h3(8, 4, 13);
  EXPECT_EQ(p.values, expected);
  EXPECT_EQ(p.values.size(), 20u);
  EXPECT_EQ(*std::max_element(p.values.begin(), p.values.end()), 8);
  EXPECT_EQ(build_h3(4, 8, 13).values, expected);
}

TEST(BuildH3, ScaledInput) {
  const StepProfile p = build_h3(70, 42, 30);
  EXPECT_EQ(p.step_width, 2);
  EXPECT_EQ(p.values, kGolden_35_21_15);
  EXPECT_EQ(p.length(), 114);
}

TEST(BuildH4, PaperTuples) {
  const StepProfile a = build_h4(105, 70, 42, 30);
  EXPECT_EQ(a.values.size(), 162u);
  EXPECT_EQ(classify(a), SignClass::kMixedSign);
  EXPECT_EQ(classify(build_h4(66, 21, 12, 10)), SignClass::kStrictlyPositive);
  EXPECT_NE(classify(build_h4(12, 18, 39, 42)), SignClass::kMixedSign);
}

TEST(BuildHn, Dispatch) {
  EXPECT_EQ(build_hn(Values{7, 4}).values, build_h2(7, 4).values);
  EXPECT_THROW(build_hn(Values{}), UnsupportedArity);
  EXPECT_THROW(build_hn(Values{1, 2, 3, 4, 5}), UnsupportedArity);
}

TEST(H2BlockProfile, Examples) {
  EXPECT_EQ(h2_block_profile(7, 4), (std::vector<Block>{{1, 1}, {2, 1}, {3, 1}, {4, 4}, {3, 1}, {2, 1}, {1, 1}}));
  EXPECT_EQ(h2_block_profile(6, 4), (std::vector<Block>{{1, 2}, {2, 4}, {1, 2}}));
  EXPECT_THROW(h2_block_profile(4, 8), PreconditionError);
  EXPECT_THROW(h2_block_profile(8, 4), PreconditionError);  // gcd = T2
}

class BuilderProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{99};
  Int draw(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }
};

TEST_F(BuilderProperties, ChainEqualsSymmetricProduct) {
  for (int i = 0; i < 300; ++i) {
    const Int t1 = draw(1, 45), t2 = draw(1, 45), t3 = draw(1, 45);
    const Values ref = build_h3(t1, t2, t3).values;
    for (std::size_t k = 0; k < 3; ++k) {
      ASSERT_EQ(build_h3_chain(t1, t2, t3, k).values, ref) << t1 << "," << t2 << "," << t3 << " k=" << k;
    }
  }
}

TEST_F(BuilderProperties, ThreeGeometricFactors) {
  for (int i = 0; i < 300; ++i) {
    const PeriodSet s = PeriodSet::normalize({draw(1, 45), draw(1, 45), draw(1, 45)});
    const auto t = s.normalized();
    const auto d = pqr_decompose(s);
    const Int g12 = s.pair_gcd(0, 1);
    const IntPolynomial f1 = geometric_quotient(d.p * d.r, d.q);
    const IntPolynomial f2 = geometric_quotient(t[1] / d.r, d.r);
    const IntPolynomial f3 = geometric_quotient(t[0] / g12, g12);
    const StepProfile h3 = build_h3(t[0], t[1], t[2]);
    const IntPolynomial p3 = f1 * f2 * f3;
    for (Int c : f1.coeffs()) EXPECT_TRUE(c == 0 || c == 1);
    EXPECT_EQ(Values(p3.coeffs().begin(), p3.coeffs().end()), h3.values);
  }
}

TEST_F(BuilderProperties, H3Structure) {
  for (int i = 0; i < 400; ++i) {
    std::array<Int, 3> t{draw(1, 40), draw(1, 40), draw(1, 40)};
    const StepProfile p = build_h3(t[0], t[1], t[2]);
    const auto n = p.periods.normalized();

    EXPECT_EQ(static_cast<Int>(p.values.size()), critical_length_3(n[0], n[1], n[2]));
    EXPECT_NE(p.values.front(), 0);
    EXPECT_NE(p.values.back(), 0);
    EXPECT_TRUE(is_palindrome(p));
    EXPECT_TRUE(std::all_of(p.values.begin(), p.values.end(), [](Int v) { return v >= 0; }));

    const Int total = std::accumulate(p.values.begin(), p.values.end(), Int{0});
    EXPECT_EQ(total, n[0] * n[1] * n[2] / (p.periods.pair_gcd(0, 1) * p.periods.pair_gcd(1, 2) *
                                           p.periods.pair_gcd(0, 2)));

    EXPECT_TRUE(verify_orthogonality(p).all_pass());

    std::sort(t.begin(), t.end());
    do {
      EXPECT_EQ(build_h3(t[0], t[1], t[2]).values, p.values);
    } while (std::next_permutation(t.begin(), t.end()));
  }
}

TEST_F(BuilderProperties, OrthogonalityOfH2AndH4) {
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(verify_orthogonality(build_h2(draw(1, 60), draw(1, 60))).all_pass());
    const StepProfile h4 = build_h4(draw(1, 30), draw(1, 30), draw(1, 30), draw(1, 30));
    EXPECT_TRUE(verify_orthogonality(h4).all_pass());
    EXPECT_EQ(static_cast<Int>(h4.values.size()), h4.periods.critical_length());
    EXPECT_GE(h4.periods.critical_length(),
              *std::min_element(h4.periods.normalized().begin(), h4.periods.normalized().end()));
  }
  EXPECT_TRUE(verify_orthogonality(build_h1(9)).all_pass());
}

TEST_F(BuilderProperties, H4CriticalLengthVersusInclusionExclusion) {
  // Alternating sum of the gcds of all nonempty subsets.
  for (int i = 0; i < 200; ++i) {
    const PeriodSet s = PeriodSet::normalize({draw(1, 30), draw(1, 30), draw(1, 30), draw(1, 30)});
    const auto t = s.normalized();
    Int alt = 0;
    for (unsigned mask = 1; mask < 16; ++mask) {
      Int g = 0;
      for (unsigned b = 0; b < 4; ++b) {
        if (mask & (1u << b)) g = std::gcd(g, t[b]);
      }
      alt += (std::popcount(mask) % 2 == 1) ? g : -g;
    }
    EXPECT_EQ(s.critical_length(), alt);
  }
}

}  // namespace
}  // namespace orthostep
