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

#include "taitfoam/foam.hpp"

#include <algorithm>
#include <functional>

namespace taitfoam {

LaurentPoly eval_sphere(unsigned dots) {
  // <S(0)> = <S(1)> = 0, <S(2)> = 1, <S(m)> = P <S(m-2)>.
  if (dots % 2 == 1 || dots == 0) return LaurentPoly::zero();
  return LaurentPoly::distinguished().pow(dots / 2 - 1);
}

LaurentPoly eval_theta(unsigned m1, unsigned m2, unsigned m3) {
  DotTriple m{m1, m2, m3};
  std::sort(m.begin(), m.end(), std::greater<>());
  unsigned p_power = 0;
  for (;;) {
    const unsigned sum = m[0] + m[1] + m[2];
    // Vanishing rules first; each reduction keeps the parity of the sum
    // and lowers it by two, so this loop terminates.
    if (m[2] > 0 || sum % 2 == 0 || sum < 3) return LaurentPoly::zero();
    if (m == DotTriple{2, 1, 0}) break;
    m[0] -= 2;  // largest entry is >= 3 here
    ++p_power;
    std::sort(m.begin(), m.end(), std::greater<>());
  }
  return LaurentPoly::distinguished().pow(p_power);
}

PolyMatrix pairing_matrix(const std::vector<DotTriple>& left,
                          const std::vector<DotTriple>& right) {
  PolyMatrix m(left.size(), right.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      m(i, j) = eval_theta(left[i][0] + right[j][0], left[i][1] + right[j][1],
                           left[i][2] + right[j][2]);
  return m;
}

std::vector<DotTriple> theta_basis_dots() {
  std::vector<DotTriple> out;
  for (unsigned m = 0; m < 2; ++m)
    for (unsigned n = 0; n < 3; ++n) out.push_back({0, m, n});
  return out;
}

std::string dots_label(const DotTriple& m) {
  return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
         std::to_string(m[2]) + ")";
}

}  // namespace taitfoam
