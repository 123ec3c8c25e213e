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

#ifndef TAITFOAM_SERIES_HPP_
#define TAITFOAM_SERIES_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taitfoam/gf2_poly.hpp"
#include "taitfoam/laurent.hpp"

namespace taitfoam {

// Power series in t truncated at t^order, with coefficients polynomials
// over F2 in auxiliary variables z1, z2, z3. The coefficient polynomials
// reuse LaurentPoly with exponents read as powers of z1, z2, z3.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order)
      : order_(order), coeffs_(order + 1) {}
  TruncatedSeries(unsigned order, std::vector<LaurentPoly> coeffs);

  static TruncatedSeries one(unsigned order);
  // 1 + z_{index+1} t
  static TruncatedSeries line_coordinate(int index, unsigned order);

  unsigned order() const { return order_; }
  const LaurentPoly& coefficient(unsigned k) const { return coeffs_.at(k); }
  const std::vector<LaurentPoly>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a,
                                   const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

  // Requires constant term 1.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(unsigned n) const;

  // Lowest k with nonzero coefficient, with that coefficient; nullopt if
  // every coefficient up to the truncation order vanishes.
  std::optional<std::pair<unsigned, LaurentPoly>> leading_term() const;

 private:
  unsigned order_;
  std::vector<LaurentPoly> coeffs_;
};

// The two concrete lines through (1,1,1) used for specialization:
// T -> (1+t, 1+t, 1+t) and T -> (1+t, 1+t, 1).
enum class Direction { kOneOneOne, kOneOneZero };

std::array<int, 3> direction_vector(Direction d);
std::string direction_name(Direction d);  // "1,1,1" or "1,1,0"
std::optional<Direction> parse_direction(std::string_view text);

inline constexpr unsigned kDefaultSeriesOrder = 6;

// Image of p under T_i -> 1 + z_i t, exact modulo t^(order+1).
TruncatedSeries substitute_line(const LaurentPoly& p,
                                unsigned order = kDefaultSeriesOrder);
// Exact image of p under the concrete line, in F2[t] localized at t = 0.
UnivariateRational substitute_line(const LaurentPoly& p, Direction d);

// Leading t-power and its z-coefficient of the symbolic substitution.
// Throws std::invalid_argument when the truncation order is too small to
// see a nonzero coefficient (including for p = 0).
std::pair<unsigned, LaurentPoly> leading_form(const LaurentPoly& p,
                                              unsigned order);

}  // namespace taitfoam

#endif  // TAITFOAM_SERIES_HPP_
