// Copyright 2026 The Taitfoam Authors.
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

#include "taitfoam/laurent.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "taitfoam/rational.hpp"

namespace taitfoam {
namespace {

using Monomials = std::map<Exponent, int>;

Monomials as_map(const LaurentPoly& p) {
  Monomials m;
  for (const auto& t : p.terms()) m[t] = 1;
  return m;
}

// Schoolbook product with integer coefficients reduced mod 2 at the end.
LaurentPoly convolve(const LaurentPoly& a, const LaurentPoly& b) {
  Monomials acc;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) acc[x + y] += 1;
  std::vector<Exponent> odd;
  for (const auto& [e, c] : acc)
    if (c % 2) odd.push_back(e);
  return LaurentPoly::from_terms(odd);
}

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> count(0, max_terms);
  std::vector<Exponent> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) terms.push_back({{exp(rng), exp(rng), exp(rng)}});
  return LaurentPoly::from_terms(terms);
}

// Binomial coefficient mod 2 of (1+e)^a at e^k, for any integer a, from
// the recurrence over rows of Pascal's triangle extended to negative rows.
bool binom_mod2(int a, int k) {
  // (1+e)^a for a < 0 is sum_k C(-a+k-1, k) e^k up to sign, which is 1 in
  // char 2.
  int n = a >= 0 ? a : -a + k - 1;
  if (k > n) return false;
  std::vector<int> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] ^= row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(k)] == 1;
}

// Lowest total degree of p(1+e1, 1+e2, 1+e3) computed up to degree cap.
std::optional<unsigned> epsilon_order(const LaurentPoly& p, int cap) {
  std::map<std::array<int, 3>, int> coeffs;
  for (const auto& t : p.terms())
    for (int i = 0; i <= cap; ++i)
      for (int j = 0; i + j <= cap; ++j)
        for (int k = 0; i + j + k <= cap; ++k)
          if (binom_mod2(t.e[0], i) && binom_mod2(t.e[1], j) &&
              binom_mod2(t.e[2], k))
            coeffs[{i, j, k}] ^= 1;
  std::optional<unsigned> best;
  for (const auto& [e, c] : coeffs)
    if (c) {
      const unsigned d = static_cast<unsigned>(e[0] + e[1] + e[2]);
      if (!best || d < *best) best = d;
    }
  return best;
}

TEST(LaurentPoly, DistinguishedElementText) {
  EXPECT_EQ(LaurentPoly::distinguished().to_string(),
            "T1*T2*T3 + T1*T2^-1*T3^-1 + T1^-1*T2*T3^-1 + T1^-1*T2^-1*T3");
  EXPECT_EQ(LaurentPoly::zero().to_string(), "0");
  EXPECT_EQ(LaurentPoly::one().to_string(), "1");
}

TEST(LaurentPoly, InstantonContributionsSumToP) {
  LaurentPoly sum;
  for (const auto& m : instanton_contributions()) {
    EXPECT_TRUE(m.is_monomial());
    sum += m;
  }
  EXPECT_EQ(sum, LaurentPoly::distinguished());
}

TEST(LaurentPoly, SquareOfPHasFourTerms) {
  const LaurentPoly p = LaurentPoly::distinguished();
  const LaurentPoly p2 = p * p;
  EXPECT_EQ(p2, convolve(p, p));
  // Cross terms pair up and cancel in characteristic two.
  EXPECT_EQ(p2.term_count(), 4u);
  EXPECT_EQ(p2, p.square());
  EXPECT_EQ(p2.to_string(),
            "T1^2*T2^2*T3^2 + T1^2*T2^-2*T3^-2 + T1^-2*T2^2*T3^-2 + "
            "T1^-2*T2^-2*T3^2");
}

TEST(LaurentPoly, ProductMatchesConvolution) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    EXPECT_EQ(a * b, convolve(a, b));
  }
}

TEST(LaurentPoly, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    const LaurentPoly c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a + a).is_zero());
    EXPECT_EQ(a * LaurentPoly::one(), a);
    EXPECT_EQ(a.square(), a * a);
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(LaurentPoly, FromTermsCancelsPairs) {
  const LaurentPoly p =
      LaurentPoly::from_terms({{{1, 0, 0}}, {{1, 0, 0}}, {{0, 1, 0}}});
  EXPECT_EQ(p, LaurentPoly::variable(1));
}

TEST(LaurentPoly, UnitsAreMonomials) {
  const LaurentPoly m = LaurentPoly::monomial(2, -1, 3);
  ASSERT_TRUE(m.inverse());
  EXPECT_TRUE((m * *m.inverse()).is_one());
  EXPECT_FALSE(LaurentPoly::distinguished().inverse());
  EXPECT_FALSE(LaurentPoly::zero().inverse());
}

TEST(LaurentPoly, ExactDivision) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    if (b.is_zero()) continue;
    auto q = (a * b).divide_exact(b);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, a);
  }
  EXPECT_FALSE(LaurentPoly::one().divide_exact(LaurentPoly::distinguished()));
}

TEST(LaurentPoly, EvaluationAtOnes) {
  EXPECT_FALSE(LaurentPoly::distinguished().eval_at_ones());
  EXPECT_TRUE(LaurentPoly::monomial(3, -2, 1).eval_at_ones());
}

TEST(LaurentPoly, ParseRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng);
    EXPECT_EQ(LaurentPoly::parse(a.to_string()), a);
  }
  EXPECT_EQ(LaurentPoly::parse(" T1 * T1 + T1^2 + 1 "), LaurentPoly::one());
  EXPECT_EQ(LaurentPoly::parse("T3^-4"), LaurentPoly::monomial(0, 0, -4));
}

TEST(LaurentPoly, ParseErrorsCarryOffsets) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  for (const Case& c : {Case{"", 0}, Case{"T4", 1}, Case{"T1 +", 4},
                        Case{"T1^x", 3}, Case{"2", 0}, Case{"T1 T2", 3},
                        Case{"0 + T1", 2}}) {
    try {
      LaurentPoly::parse(c.text);
      ADD_FAILURE() << "accepted '" << c.text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.offset) << c.text;
    }
  }
}

TEST(MAdicOrder, DistinguishedElementHasOrderFour) {
  EXPECT_EQ(m_adic_order(LaurentPoly::distinguished()), 4u);
  EXPECT_EQ(epsilon_order(LaurentPoly::distinguished(), 8), 4u);
}

TEST(MAdicOrder, SmallCases) {
  EXPECT_EQ(m_adic_order(LaurentPoly::one()), 0u);
  EXPECT_EQ(m_adic_order(LaurentPoly::zero()), std::nullopt);
  // T1 + 1 = e1.
  EXPECT_EQ(m_adic_order(LaurentPoly::variable(0) + LaurentPoly::one()), 1u);
  // T1^2 + 1 = e1^2 in char 2.
  EXPECT_EQ(m_adic_order(LaurentPoly::monomial(2, 0, 0) + LaurentPoly::one()),
            2u);
}

TEST(MAdicOrder, AgreesWithEpsilonExpansion) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(rng, 4);
    if (a.is_zero()) continue;
    const auto order = m_adic_order(a);
    ASSERT_TRUE(order);
    if (*order > 10) continue;
    EXPECT_EQ(epsilon_order(a, static_cast<int>(*order) + 1), order)
        << a.to_string();
  }
}

TEST(MAdicOrder, IsAdditiveOnProducts) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = random_poly(rng, 3);
    const LaurentPoly b = random_poly(rng, 3);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(*m_adic_order(a * b), *m_adic_order(a) + *m_adic_order(b));
  }
}

TEST(RationalFunction, FieldOperations) {
  const LaurentPoly p = LaurentPoly::distinguished();
  const RationalFunction x(LaurentPoly::one(), p);
  EXPECT_TRUE(x.in_localization());
  EXPECT_TRUE((x * RationalFunction(p)).is_polynomial());
  EXPECT_EQ(x * RationalFunction(p), RationalFunction(LaurentPoly::one()));
  const RationalFunction y(LaurentPoly::variable(0),
                           LaurentPoly::variable(1) + LaurentPoly::one());
  EXPECT_FALSE(y.in_localization());
  EXPECT_EQ(y * y.inverse(), RationalFunction(LaurentPoly::one()));
  EXPECT_EQ((x + y) + y, x);
  EXPECT_EQ(x / y * y, x);
  EXPECT_THROW(RationalFunction(p, LaurentPoly::zero()), std::domain_error);
}

TEST(RationalFunction, SimplifiesExactQuotients) {
  const LaurentPoly p = LaurentPoly::distinguished();
  const RationalFunction r(p * p * LaurentPoly::variable(2), p);
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r.numerator(), p * LaurentPoly::variable(2));
}

}  // namespace
}  // namespace taitfoam
