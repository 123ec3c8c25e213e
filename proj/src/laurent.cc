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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <sstream>

namespace taitfoam {
namespace {

// Sorts descending and cancels equal exponents in pairs.
void canonicalize(std::vector<Exponent>& terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>());
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) terms[out++] = terms[i];
    i = j;
  }
  terms.resize(out);
}

// Symmetric difference of two descending-sorted term lists.
std::vector<Exponent> merge_xor(std::span<const Exponent> a,
                                std::span<const Exponent> b) {
  std::vector<Exponent> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] > b[j]) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

bool nonnegative(const Exponent& e) {
  return e.e[0] >= 0 && e.e[1] >= 0 && e.e[2] >= 0;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(Exponent e) {
  return LaurentPoly(std::vector<Exponent>{e});
}

LaurentPoly LaurentPoly::variable(int index) {
  if (index < 0 || index > 2) throw std::out_of_range("variable index");
  Exponent e;
  e.e[index] = 1;
  return monomial(e);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Exponent> terms) {
  canonicalize(terms);
  return LaurentPoly(std::move(terms));
}

LaurentPoly LaurentPoly::distinguished() {
  return from_terms({{{1, 1, 1}}, {{1, -1, -1}}, {{-1, 1, -1}}, {{-1, -1, 1}}});
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0] == Exponent{};
}

Exponent LaurentPoly::min_exponent() const {
  Exponent m = terms_.front();
  for (const auto& t : terms_)
    for (int k = 0; k < 3; ++k) m.e[k] = std::min(m.e[k], t.e[k]);
  return m;
}

Exponent LaurentPoly::max_exponent() const {
  Exponent m = terms_.front();
  for (const auto& t : terms_)
    for (int k = 0; k < 3; ++k) m.e[k] = std::max(m.e[k], t.e[k]);
  return m;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_xor(terms_, o.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.shifted(a.terms_[0]);
  if (b.is_monomial()) return a.shifted(b.terms_[0]);
  std::vector<Exponent> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back(x + y);
  canonicalize(out);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  std::vector<Exponent> out(terms_);
  for (auto& t : out) t = t + shift;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::square() const {
  std::vector<Exponent> out(terms_);
  for (auto& t : out)
    for (auto& c : t.e) c *= 2;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = one();
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base = base.square();
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(
    const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly{};
  if (d.is_monomial()) return shifted(-d.terms_[0]);
  // Move both into F2[T1,T2,T3] with no monomial factor, then divide there
  // with respect to lex order. A Laurent quotient exists iff the shifted
  // divisor divides the shifted dividend as ordinary polynomials.
  const Exponent num_shift = min_exponent();
  const Exponent den_shift = d.min_exponent();
  std::vector<Exponent> rem = shifted(-num_shift).terms_;
  const LaurentPoly divisor = d.shifted(-den_shift);
  const Exponent lead = divisor.terms_.front();
  std::vector<Exponent> quotient;
  while (!rem.empty()) {
    const Exponent q = rem.front() - lead;
    if (!nonnegative(q)) return std::nullopt;
    quotient.push_back(q);
    rem = merge_xor(rem, divisor.shifted(q).terms_);
  }
  // Quotient terms were produced in strictly descending order.
  return LaurentPoly(std::move(quotient)).shifted(num_shift - den_shift);
}

std::optional<LaurentPoly> LaurentPoly::inverse() const {
  if (!is_monomial()) return std::nullopt;
  return monomial(-terms_[0]);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& t : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    bool first_factor = true;
    for (int k = 0; k < 3; ++k) {
      if (t.e[k] == 0) continue;
      if (!first_factor) os << '*';
      first_factor = false;
      os << 'T' << (k + 1);
      if (t.e[k] != 1) os << '^' << t.e[k];
    }
    if (first_factor) os << '1';
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    std::vector<Exponent> terms;
    if (peek() == '0') {
      ++pos_;
      skip_space();
      if (!at_end()) fail("unexpected input after '0'");
      return LaurentPoly::zero();
    }
    terms.push_back(parse_term());
    skip_space();
    while (!at_end()) {
      expect('+');
      skip_space();
      terms.push_back(parse_term());
      skip_space();
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  Exponent parse_term() {
    if (!at_end() && peek() == '1') {
      ++pos_;
      return {};
    }
    Exponent e;
    parse_factor(e);
    skip_space();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      parse_factor(e);
      skip_space();
    }
    return e;
  }

  void parse_factor(Exponent& e) {
    expect('T');
    if (at_end() || peek() < '1' || peek() > '3')
      fail("expected variable index 1, 2 or 3");
    const int var = peek() - '1';
    ++pos_;
    std::int64_t power = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      power = parse_int();
    }
    const std::int64_t sum = e.e[var] + power;
    if (sum > std::numeric_limits<std::int32_t>::max() ||
        sum < std::numeric_limits<std::int32_t>::min())
      fail("exponent out of range");
    e.e[var] = static_cast<std::int32_t>(sum);
  }

  std::int64_t parse_int() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    std::int32_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected integer exponent");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at offset " +
                         std::to_string(pos_) + ": " + msg,
                     pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  return PolyParser(text).parse();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

std::array<LaurentPoly, 4> instanton_contributions() {
  return {LaurentPoly::monomial(1, 1, 1), LaurentPoly::monomial(1, -1, -1),
          LaurentPoly::monomial(-1, 1, -1), LaurentPoly::monomial(-1, -1, 1)};
}

std::optional<unsigned> m_adic_order(const LaurentPoly& p) {
  if (p.is_zero()) return std::nullopt;
  // Multiplying by a monomial (a unit at (1,1,1)) leaves the order alone,
  // so shift into the polynomial ring and expand (1 + eps)^a exactly. Over
  // F2, binom(a, k) is odd iff the bits of k are a subset of those of a.
  const LaurentPoly poly = p.shifted(-p.min_exponent());
  std::vector<Exponent> expanded;
  for (const auto& t : poly.terms()) {
    const std::uint32_t a0 = static_cast<std::uint32_t>(t.e[0]);
    const std::uint32_t a1 = static_cast<std::uint32_t>(t.e[1]);
    const std::uint32_t a2 = static_cast<std::uint32_t>(t.e[2]);
    for (std::uint32_t k0 = a0;; k0 = (k0 - 1) & a0) {
      for (std::uint32_t k1 = a1;; k1 = (k1 - 1) & a1) {
        for (std::uint32_t k2 = a2;; k2 = (k2 - 1) & a2) {
          expanded.push_back({{static_cast<std::int32_t>(k0),
                               static_cast<std::int32_t>(k1),
                               static_cast<std::int32_t>(k2)}});
          if (k2 == 0) break;
        }
        if (k1 == 0) break;
      }
      if (k0 == 0) break;
    }
  }
  const LaurentPoly eps = LaurentPoly::from_terms(std::move(expanded));
  if (eps.is_zero()) return std::nullopt;  // unreachable for p != 0
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& t : eps.terms()) best = std::min(best, t.total_degree());
  return static_cast<unsigned>(best);
}

}  // namespace taitfoam
