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

#ifndef TAITFOAM_RATIONAL_HPP_
#define TAITFOAM_RATIONAL_HPP_

#include <ostream>
#include <string>

#include "taitfoam/laurent.hpp"

namespace taitfoam {

// An element of Frac(R). Not kept in lowest terms; equality is decided by
// cross-multiplication. Cheap cancellations (monomial denominators, exact
// quotients) are applied after each operation to limit growth.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(LaurentPoly::one()) {}
  RationalFunction(LaurentPoly num)  // NOLINT: implicit embedding R -> Frac
      : num_(std::move(num)), den_(LaurentPoly::one()) {}
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // True when the value lies in R (denominator reduced to 1).
  bool is_polynomial() const { return den_.is_one(); }
  // True when the denominator is a power of P up to a unit, i.e. the value
  // lies in R' = R[1/P].
  bool in_localization() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a,
                                    const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a,
                                    const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator*(RationalFunction a,
                                    const RationalFunction& b) {
    return a *= b;
  }
  friend RationalFunction operator/(RationalFunction a,
                                    const RationalFunction& b) {
    return a /= b;
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  RationalFunction inverse() const;
  std::string to_string() const;

 private:
  void simplify();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

}  // namespace taitfoam

#endif  // TAITFOAM_RATIONAL_HPP_
