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

#ifndef TAITFOAM_LAURENT_HPP_
#define TAITFOAM_LAURENT_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taitfoam {

// Exponent vector (e1, e2, e3) of a Laurent monomial T1^e1 T2^e2 T3^e3.
struct Exponent {
  std::array<std::int32_t, 3> e{0, 0, 0};

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  Exponent operator+(const Exponent& o) const {
    return {{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}};
  }
  Exponent operator-(const Exponent& o) const {
    return {{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}};
  }
  Exponent operator-() const { return {{-e[0], -e[1], -e[2]}}; }
  std::int64_t total_degree() const {
    return std::int64_t{e[0]} + e[1] + e[2];
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An element of R = F2[T1^±1, T2^±1, T3^±1].
//
// Stored as the set of exponents carrying coefficient 1, sorted in
// descending lexicographic order. Two values are equal iff their term sets
// are equal.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial({}); }
  static LaurentPoly monomial(Exponent e);
  static LaurentPoly monomial(std::int32_t e1, std::int32_t e2,
                              std::int32_t e3) {
    return monomial(Exponent{{e1, e2, e3}});
  }
  // T_{index+1}, index in {0, 1, 2}.
  static LaurentPoly variable(int index);
  // Builds a polynomial from an arbitrary list of exponents; repeated
  // exponents cancel in pairs.
  static LaurentPoly from_terms(std::vector<Exponent> terms);
  // The distinguished element P = T1T2T3 + T1T2^-1T3^-1 + T1^-1T2T3^-1 +
  // T1^-1T2^-1T3.
  static LaurentPoly distinguished();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  std::span<const Exponent> terms() const { return terms_; }

  // Componentwise minimum / maximum over all terms. Undefined for zero.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += o; }
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Multiplication by the monomial T^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  // Frobenius: squares every exponent.
  LaurentPoly square() const;
  LaurentPoly pow(unsigned n) const;

  // Exact quotient *this / d in R, or nullopt if d does not divide.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;
  // Inverse in R; only monomials are units.
  std::optional<LaurentPoly> inverse() const;

  // Image under T1 = T2 = T3 = 1, an element of F2.
  bool eval_at_ones() const { return terms_.size() % 2 == 1; }

  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  explicit LaurentPoly(std::vector<Exponent> sorted_terms)
      : terms_(std::move(sorted_terms)) {}

  std::vector<Exponent> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// The four single-instanton monomials whose sum is P. Returned in a fixed
// but otherwise meaningless order.
std::array<LaurentPoly, 4> instanton_contributions();

// Order of vanishing of p at T = (1, 1, 1): the least total degree of a
// term of p(1 + eps1, 1 + eps2, 1 + eps3). nullopt stands for +infinity
// (p = 0).
std::optional<unsigned> m_adic_order(const LaurentPoly& p);

}  // namespace taitfoam

#endif  // TAITFOAM_LAURENT_HPP_
