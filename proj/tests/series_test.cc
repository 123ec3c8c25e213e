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

#include "taitfoam/series.hpp"

#include <gtest/gtest.h>

#include <random>

#include "taitfoam/gf2_poly.hpp"

namespace taitfoam {
namespace {

Gf2Poly from_bits(std::uint64_t bits) {
  Gf2Poly p;
  for (unsigned i = 0; i < 64; ++i)
    if (bits >> i & 1u) p += Gf2Poly::monomial(i);
  return p;
}

Gf2Poly naive_product(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out;
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      if (a.coefficient(static_cast<unsigned>(i)) &&
          b.coefficient(static_cast<unsigned>(j)))
        out += Gf2Poly::monomial(static_cast<unsigned>(i + j));
  return out;
}

// First n + 1 coefficients of num / den as a power series in t.
std::vector<bool> expand(const UnivariateRational& r, unsigned n) {
  std::vector<bool> out(n + 1, false);
  std::vector<bool> rem(n + 1, false);
  for (unsigned k = 0; k <= n; ++k) rem[k] = r.numerator().coefficient(k);
  // Long division by a denominator with constant term 1.
  for (unsigned k = 0; k <= n; ++k) {
    out[k] = rem[k];
    if (!out[k]) continue;
    for (unsigned j = 0; k + j <= n; ++j)
      if (r.denominator().coefficient(j)) rem[k + j] = !rem[k + j];
  }
  return out;
}

// Coefficient polynomial in z evaluated at z = c over F2.
bool eval_at(const LaurentPoly& coeff, const std::array<int, 3>& c) {
  bool v = false;
  for (const auto& t : coeff.terms()) {
    bool term = true;
    for (int i = 0; i < 3; ++i)
      if (t.e[i] != 0 && c[i] == 0) term = false;
    v = v != term;
  }
  return v;
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<int> count(1, 5);
  std::vector<Exponent> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) terms.push_back({{exp(rng), exp(rng), exp(rng)}});
  return LaurentPoly::from_terms(terms);
}

TEST(Gf2Poly, ProductMatchesSchoolbook) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Gf2Poly a = from_bits(rng() >> (rng() % 64));
    const Gf2Poly b = from_bits(rng() >> (rng() % 64));
    EXPECT_EQ(a * b, naive_product(a, b));
  }
  // Crosses a word boundary.
  const Gf2Poly big = Gf2Poly::monomial(100) + Gf2Poly::one();
  EXPECT_EQ((big * big).to_string(), "t^200 + 1");
}

TEST(Gf2Poly, DivisionAndGcd) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Gf2Poly a = from_bits(rng() >> 20);
    const Gf2Poly b = from_bits((rng() >> 40) | 1u);
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    const Gf2Poly c = from_bits(rng() >> 50);
    const Gf2Poly g = Gf2Poly::gcd(a * c, b * c);
    if (!c.is_zero()) EXPECT_TRUE(g.divmod(c).second.is_zero());
  }
}

TEST(Gf2Poly, BinomialPowersFollowLucas) {
  Gf2Poly acc = Gf2Poly::one();
  for (unsigned n = 0; n < 70; ++n) {
    EXPECT_EQ(Gf2Poly::one_plus_t_pow(n), acc) << n;
    acc *= Gf2Poly::one_plus_t_pow(1);
  }
  EXPECT_EQ(Gf2Poly::one_plus_t_pow(4).to_string(), "t^4 + 1");
}

TEST(Gf2Poly, Valuation) {
  EXPECT_EQ(Gf2Poly::zero().valuation(), std::nullopt);
  EXPECT_EQ((Gf2Poly::monomial(70) + Gf2Poly::monomial(65)).valuation(), 65u);
  EXPECT_EQ(Gf2Poly::monomial(5).shifted_down(3), Gf2Poly::monomial(2));
}

TEST(UnivariateRational, ReducesAndRejectsNonUnits) {
  const Gf2Poly t = Gf2Poly::monomial(1);
  const Gf2Poly one_t = Gf2Poly::one_plus_t_pow(1);
  const UnivariateRational r(t * one_t, one_t * one_t);
  EXPECT_EQ(r.numerator(), t);
  EXPECT_EQ(r.denominator(), one_t);
  EXPECT_THROW(UnivariateRational(one_t, t), std::domain_error);
}

TEST(LineSubstitution, DistinguishedElementOnBothLines) {
  const LaurentPoly p = LaurentPoly::distinguished();
  const Gf2Poly t4 = Gf2Poly::monomial(4);
  const UnivariateRational diag = substitute_line(p, Direction::kOneOneOne);
  EXPECT_EQ(diag, UnivariateRational(t4, Gf2Poly::one_plus_t_pow(1)));
  EXPECT_EQ(diag.valuation(), 4u);
  EXPECT_EQ(diag.to_string(), "t^4/(t + 1)");
  const UnivariateRational flat = substitute_line(p, Direction::kOneOneZero);
  EXPECT_EQ(flat, UnivariateRational(t4, Gf2Poly::one_plus_t_pow(2)));
  EXPECT_EQ(flat.valuation(), 4u);
}

TEST(LineSubstitution, SymbolicSeriesOfP) {
  // T1 T2 T3 P = T1^2 T2^2 T3^2 + T1^2 + T2^2 + T3^2, so after T_i = 1 + z_i t
  // the product is e2(z^2) t^4 + (z1 z2 z3)^2 t^6 exactly.
  const unsigned order = 9;
  TruncatedSeries lhs = substitute_line(LaurentPoly::distinguished(), order);
  for (int i = 0; i < 3; ++i)
    lhs = lhs * TruncatedSeries::line_coordinate(i, order);
  std::vector<LaurentPoly> want(order + 1);
  want[4] = LaurentPoly::from_terms({{{2, 2, 0}}, {{2, 0, 2}}, {{0, 2, 2}}});
  want[6] = LaurentPoly::monomial(2, 2, 2);
  EXPECT_EQ(lhs, TruncatedSeries(order, want));
}

TEST(LineSubstitution, LeadingForm) {
  const auto [degree, coeff] =
      leading_form(LaurentPoly::distinguished(), kDefaultSeriesOrder);
  EXPECT_EQ(degree, 4u);
  EXPECT_EQ(coeff, LaurentPoly::from_terms({{{2, 2, 0}}, {{2, 0, 2}}, {{0, 2, 2}}}));
  EXPECT_THROW(leading_form(LaurentPoly::distinguished(), 3),
               std::invalid_argument);
}

TEST(LineSubstitution, SymbolicSeriesSpecializesToConcreteLines) {
  std::mt19937_64 rng(4);
  const unsigned order = 8;
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly f = random_poly(rng);
    const TruncatedSeries sym = substitute_line(f, order);
    for (Direction d : {Direction::kOneOneOne, Direction::kOneOneZero}) {
      const auto c = direction_vector(d);
      const std::vector<bool> concrete = expand(substitute_line(f, d), order);
      for (unsigned k = 0; k <= order; ++k)
        EXPECT_EQ(eval_at(sym.coefficient(k), c), concrete[k])
            << f.to_string() << " k=" << k;
    }
  }
}

TEST(LineSubstitution, IsARingMap) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    for (Direction d : {Direction::kOneOneOne, Direction::kOneOneZero}) {
      const UnivariateRational sa = substitute_line(a, d);
      const UnivariateRational sb = substitute_line(b, d);
      const UnivariateRational prod = substitute_line(a * b, d);
      EXPECT_EQ(prod, UnivariateRational(sa.numerator() * sb.numerator(),
                                         sa.denominator() * sb.denominator()));
    }
  }
}

TEST(TruncatedSeries, InverseAndPowers) {
  const unsigned order = 6;
  const TruncatedSeries x = TruncatedSeries::line_coordinate(0, order);
  EXPECT_EQ(x * x.inverse(), TruncatedSeries::one(order));
  EXPECT_EQ(x.pow(3), x * x * x);
  EXPECT_THROW(TruncatedSeries(order).inverse(), std::domain_error);
}

TEST(Direction, Parsing) {
  EXPECT_EQ(parse_direction("1,1,1"), Direction::kOneOneOne);
  EXPECT_EQ(parse_direction("1,1,0"), Direction::kOneOneZero);
  EXPECT_EQ(parse_direction("1,0,1"), std::nullopt);
  EXPECT_EQ(direction_name(Direction::kOneOneZero), "1,1,0");
}

}  // namespace
}  // namespace taitfoam
