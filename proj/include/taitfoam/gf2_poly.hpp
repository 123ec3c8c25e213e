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

#ifndef TAITFOAM_GF2_POLY_HPP_
#define TAITFOAM_GF2_POLY_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace taitfoam {

// Univariate polynomial over F2 in the variable t, packed 64 coefficients
// per word. Bit i of the packed vector is the coefficient of t^i.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  static Gf2Poly zero() { return {}; }
  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly monomial(unsigned degree);
  // (1 + t)^n, expanded with Lucas' theorem.
  static Gf2Poly one_plus_t_pow(unsigned n);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  // -1 for the zero polynomial.
  int degree() const;
  // Largest k with t^k dividing the polynomial; nullopt for zero.
  std::optional<unsigned> valuation() const;
  bool coefficient(unsigned i) const;
  bool constant_term() const { return coefficient(0); }

  Gf2Poly& operator+=(const Gf2Poly& o);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator-(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  Gf2Poly& operator*=(const Gf2Poly& o) { return *this = *this * o; }
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

  Gf2Poly shifted_up(unsigned k) const;  // multiply by t^k
  Gf2Poly shifted_down(unsigned k) const;  // exact division by t^k
  // Quotient and remainder.
  std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& d) const;
  static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

  // Descending powers, e.g. "t^4 + t + 1".
  std::string to_string() const;

 private:
  void trim();
  void flip(unsigned i);

  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const Gf2Poly& p);

// An element f/g of the local ring F2[t] localized at (t), i.e. g(0) = 1.
class UnivariateRational {
 public:
  UnivariateRational() : num_(), den_(Gf2Poly::one()) {}
  UnivariateRational(Gf2Poly num, Gf2Poly den);

  const Gf2Poly& numerator() const { return num_; }
  const Gf2Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // t-adic valuation; nullopt (+infinity) for zero.
  std::optional<unsigned> valuation() const { return num_.valuation(); }

  friend bool operator==(const UnivariateRational& a,
                         const UnivariateRational& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  std::string to_string() const;

 private:
  Gf2Poly num_;
  Gf2Poly den_;
};

std::ostream& operator<<(std::ostream& os, const UnivariateRational& r);

}  // namespace taitfoam

#endif  // TAITFOAM_GF2_POLY_HPP_
