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

#include "taitfoam/gf2_poly.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace taitfoam {

Gf2Poly Gf2Poly::monomial(unsigned degree) {
  Gf2Poly p;
  p.flip(degree);
  return p;
}

Gf2Poly Gf2Poly::one_plus_t_pow(unsigned n) {
  Gf2Poly p;
  for (unsigned k = n;; k = (k - 1) & n) {
    p.flip(k);
    if (k == 0) break;
  }
  return p;
}

void Gf2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void Gf2Poly::flip(unsigned i) {
  const std::size_t w = i / 64;
  if (words_.size() <= w) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (i % 64);
  trim();
}

int Gf2Poly::degree() const {
  if (words_.empty()) return -1;
  return static_cast<int>(64 * (words_.size() - 1)) + 63 -
         std::countl_zero(words_.back());
}

std::optional<unsigned> Gf2Poly::valuation() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return static_cast<unsigned>(64 * w + std::countr_zero(words_[w]));
  return std::nullopt;
}

bool Gf2Poly::coefficient(unsigned i) const {
  const std::size_t w = i / 64;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % 64)) & 1u;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
  if (words_.size() < o.words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
  trim();
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Gf2Poly out;
  out.words_.assign(a.words_.size() + b.words_.size(), 0);
  // Shift-and-add over the set bits of a.
  for (std::size_t wa = 0; wa < a.words_.size(); ++wa) {
    std::uint64_t bits = a.words_[wa];
    while (bits != 0) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(bits));
      bits &= bits - 1;
      const unsigned shift = bit;
      for (std::size_t wb = 0; wb < b.words_.size(); ++wb) {
        const std::uint64_t x = b.words_[wb];
        out.words_[wa + wb] ^= x << shift;
        if (shift != 0) out.words_[wa + wb + 1] ^= x >> (64 - shift);
      }
    }
  }
  out.trim();
  return out;
}

Gf2Poly Gf2Poly::shifted_up(unsigned k) const {
  if (is_zero()) return {};
  Gf2Poly out;
  const std::size_t words = k / 64;
  const unsigned bits = k % 64;
  out.words_.assign(words_.size() + words + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + words] ^= words_[i] << bits;
    if (bits != 0) out.words_[i + words + 1] ^= words_[i] >> (64 - bits);
  }
  out.trim();
  return out;
}

Gf2Poly Gf2Poly::shifted_down(unsigned k) const {
  Gf2Poly out;
  const int deg = degree();
  for (int i = static_cast<int>(k); i <= deg; ++i)
    if (coefficient(static_cast<unsigned>(i)))
      out.flip(static_cast<unsigned>(i) - k);
  return out;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Gf2Poly q;
  Gf2Poly r = *this;
  const int dd = d.degree();
  for (int rd = r.degree(); rd >= dd; rd = r.degree()) {
    const unsigned shift = static_cast<unsigned>(rd - dd);
    q.flip(shift);
    r += d.shifted_up(shift);
  }
  return {std::move(q), std::move(r)};
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string Gf2Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (!coefficient(static_cast<unsigned>(i))) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0)
      os << '1';
    else if (i == 1)
      os << 't';
    else
      os << "t^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Gf2Poly& p) {
  return os << p.to_string();
}

UnivariateRational::UnivariateRational(Gf2Poly num, Gf2Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!den_.constant_term())
    throw std::domain_error(
        "denominator must be a unit of the local ring at t = 0");
  if (num_.is_zero()) {
    den_ = Gf2Poly::one();
    return;
  }
  Gf2Poly g = Gf2Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
}

std::string UnivariateRational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Gf2Poly& p) {
    const std::string s = p.to_string();
    return s.find('+') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const UnivariateRational& r) {
  return os << r.to_string();
}

}  // namespace taitfoam
