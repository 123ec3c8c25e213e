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

#ifndef TAITFOAM_FOAM_HPP_
#define TAITFOAM_FOAM_HPP_

#include <array>
#include <string>
#include <vector>

#include "taitfoam/laurent.hpp"
#include "taitfoam/matrix.hpp"

namespace taitfoam {

// Dot counts on the three disks of the theta foam.
using DotTriple = std::array<unsigned, 3>;

// Closed-foam evaluation of the 2-sphere carrying m dots.
LaurentPoly eval_sphere(unsigned dots);

// Closed-foam evaluation of the theta foam with the given dots on its three
// disks. Symmetric in its arguments.
LaurentPoly eval_theta(unsigned m1, unsigned m2, unsigned m3);
inline LaurentPoly eval_theta(const DotTriple& m) {
  return eval_theta(m[0], m[1], m[2]);
}

// (i, j) entry: eval_theta(left[i] + right[j]).
PolyMatrix pairing_matrix(const std::vector<DotTriple>& left,
                          const std::vector<DotTriple>& right);

// The six dot-triples (0, m, n), m in {0,1}, n in {0,1,2}, in the order
// (0,0,0) (0,0,1) (0,0,2) (0,1,0) (0,1,1) (0,1,2).
std::vector<DotTriple> theta_basis_dots();

std::string dots_label(const DotTriple& m);  // "(0,1,2)"

}  // namespace taitfoam

#endif  // TAITFOAM_FOAM_HPP_
