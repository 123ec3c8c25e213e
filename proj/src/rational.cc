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

#include "taitfoam/rational.hpp"

#include <stdexcept>

namespace taitfoam {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::domain_error("rational function with zero denominator");
  simplify();
}

void RationalFunction::simplify() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  if (den_.is_one()) return;
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly::one();
    return;
  }
  if (auto q = den_.divide_exact(num_)) {
    num_ = LaurentPoly::one();
    den_ = std::move(*q);
  }
  // Pull monomial content of the denominator into the numerator.
  const Exponent shift = den_.min_exponent();
  if (shift != Exponent{}) {
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
  }
}

bool RationalFunction::in_localization() const {
  LaurentPoly d = den_;
  const LaurentPoly p = LaurentPoly::distinguished();
  while (!d.is_monomial()) {
    auto q = d.divide_exact(p);
    if (!q) return false;
    d = std::move(*q);
  }
  return true;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  simplify();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  simplify();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero");
  return RationalFunction(den_, num_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
  return os << r.to_string();
}

}  // namespace taitfoam
