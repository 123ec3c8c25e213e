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

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace taitfoam {

TruncatedSeries::TruncatedSeries(unsigned order,
                                 std::vector<LaurentPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order_ + 1);
}

TruncatedSeries TruncatedSeries::one(unsigned order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = LaurentPoly::one();
  return s;
}

TruncatedSeries TruncatedSeries::line_coordinate(int index, unsigned order) {
  TruncatedSeries s = one(order);
  if (order >= 1) s.coeffs_[1] = LaurentPoly::variable(index);
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const LaurentPoly& c) { return c.is_zero(); });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order_ != order_)
    throw std::invalid_argument("series truncation orders differ");
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order_ != b.order_)
    throw std::invalid_argument("series truncation orders differ");
  TruncatedSeries out(a.order_);
  for (unsigned i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= a.order_; ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (!coeffs_[0].is_one())
    throw std::domain_error("series inverse needs constant term 1");
  // b_0 = 1, b_k = sum_{j=1..k} a_j b_{k-j}  (signs vanish in char 2).
  TruncatedSeries b(order_);
  b.coeffs_[0] = LaurentPoly::one();
  for (unsigned k = 1; k <= order_; ++k) {
    LaurentPoly acc;
    for (unsigned j = 1; j <= k; ++j) acc += coeffs_[j] * b.coeffs_[k - j];
    b.coeffs_[k] = std::move(acc);
  }
  return b;
}

TruncatedSeries TruncatedSeries::pow(unsigned n) const {
  TruncatedSeries result = one(order_);
  TruncatedSeries base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::optional<std::pair<unsigned, LaurentPoly>> TruncatedSeries::leading_term()
    const {
  for (unsigned k = 0; k <= order_; ++k)
    if (!coeffs_[k].is_zero()) return std::make_pair(k, coeffs_[k]);
  return std::nullopt;
}

std::array<int, 3> direction_vector(Direction d) {
  switch (d) {
    case Direction::kOneOneOne:
      return {1, 1, 1};
    case Direction::kOneOneZero:
      return {1, 1, 0};
  }
  throw std::logic_error("unknown direction");
}

std::string direction_name(Direction d) {
  return d == Direction::kOneOneOne ? "1,1,1" : "1,1,0";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "1,1,1") return Direction::kOneOneOne;
  if (text == "1,1,0") return Direction::kOneOneZero;
  return std::nullopt;
}

TruncatedSeries substitute_line(const LaurentPoly& p, unsigned order) {
  std::array<TruncatedSeries, 3> forward{
      TruncatedSeries::line_coordinate(0, order),
      TruncatedSeries::line_coordinate(1, order),
      TruncatedSeries::line_coordinate(2, order)};
  std::array<TruncatedSeries, 3> backward{
      forward[0].inverse(), forward[1].inverse(), forward[2].inverse()};
  std::array<std::map<int, TruncatedSeries>, 3> cache;
  auto power = [&](int var, int e) -> const TruncatedSeries& {
    auto it = cache[var].find(e);
    if (it != cache[var].end()) return it->second;
    const TruncatedSeries& base = e >= 0 ? forward[var] : backward[var];
    return cache[var]
        .emplace(e, base.pow(static_cast<unsigned>(std::abs(e))))
        .first->second;
  };
  TruncatedSeries out(order);
  for (const auto& t : p.terms())
    out += power(0, t.e[0]) * power(1, t.e[1]) * power(2, t.e[2]);
  return out;
}

UnivariateRational substitute_line(const LaurentPoly& p, Direction d) {
  if (p.is_zero()) return {};
  const auto c = direction_vector(d);
  Exponent shift = p.min_exponent();
  for (auto& s : shift.e) s = std::min(s, 0);
  // T_i -> 1 + c_i t; with c_i = 0 the variable maps to 1.
  auto image = [&](const Exponent& e) {
    unsigned n = 0;
    for (int k = 0; k < 3; ++k)
      if (c[k] != 0) n += static_cast<unsigned>(e.e[k]);
    return Gf2Poly::one_plus_t_pow(n);
  };
  Gf2Poly num;
  for (const auto& t : p.terms()) num += image(t - shift);
  const Gf2Poly den = image(-shift);
  return UnivariateRational(std::move(num), den);
}

std::pair<unsigned, LaurentPoly> leading_form(const LaurentPoly& p,
                                              unsigned order) {
  auto lead = substitute_line(p, order).leading_term();
  if (!lead)
    throw std::invalid_argument(
        "truncation order " + std::to_string(order) +
        " too small to certify a nonzero leading term");
  return *lead;
}

}  // namespace taitfoam
