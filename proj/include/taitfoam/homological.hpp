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

#ifndef TAITFOAM_HOMOLOGICAL_HPP_
#define TAITFOAM_HOMOLOGICAL_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "taitfoam/gf2_poly.hpp"
#include "taitfoam/linalg.hpp"
#include "taitfoam/matrix.hpp"
#include "taitfoam/series.hpp"

namespace taitfoam {

class NotSquareZeroError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A free R-module with a square-zero endomorphism (an ungraded chain
// complex). Two-term complexes A: R^a -> R^b embed as mapping cones.
class DifferentialModule {
 public:
  // Throws NotSquareZeroError unless d is square with d * d = 0.
  explicit DifferentialModule(PolyMatrix d);

  // Differential [[0, 0], [A, 0]] on R^a (+) R^b for A of shape b x a.
  static DifferentialModule cone(const PolyMatrix& a);

  std::size_t rank() const { return d_.rows(); }
  const PolyMatrix& differential() const { return d_; }
  // The map A when built by cone().
  const std::optional<PolyMatrix>& two_term_map() const { return map_; }

 private:
  PolyMatrix d_;
  std::optional<PolyMatrix> map_;
};

DifferentialModule parse_complex_json(std::string_view text);
DifferentialModule load_complex(const std::string& path);
std::string complex_to_json(const DifferentialModule& c);

// n - 2 rank_{Frac R}(d).
std::size_t homology_frac_rank(const DifferentialModule& c);
std::size_t homology_frac_rank(const DifferentialModule& c,
                               std::mt19937_64& rng);
// n - 2 rank_{F2}(d at T = (1,1,1)).
std::size_t homology_f2_dim(const DifferentialModule& c);

// Nonzero diagonal of the Smith normal form over F2[t], in order. Every
// entry divides the next.
std::vector<Gf2Poly> smith_diagonal(Matrix<Gf2Poly> m);

// Image of d under the line, rows scaled by denominators (units at t = 0).
Matrix<Gf2Poly> specialize(const PolyMatrix& d, Direction direction);

struct SpecializationReport {
  Direction direction = Direction::kOneOneOne;
  std::size_t frac_rank = 0;   // homology rank over Frac(R)
  std::size_t f2_dim = 0;      // homology dimension after T = 1
  std::size_t free_rank = 0;   // r
  std::size_t torsion_count = 0;  // l
  std::vector<unsigned> torsion_exponents;  // ascending
};

// Smith/universal-coefficient analysis after substituting the line.
// Throws ConsistencyError if r differs from the rank over Frac(R) or if
// f2_dim != r + 2 l.
SpecializationReport bockstein_analysis(const DifferentialModule& c,
                                        Direction direction);
SpecializationReport bockstein_analysis(const DifferentialModule& c,
                                        Direction direction,
                                        std::mt19937_64& rng);

std::string report_to_json(const SpecializationReport& r);

struct CertificateFact {
  std::string name;
  std::string detail;
  bool passed = false;
};

// The order-four facts about P: m-adic order 4, valuation 4 along both
// concrete lines with (1+t) P(1+t,1+t,1+t) = t^4, and the symbolic leading
// coefficient sum_{i<j} z_i^2 z_j^2.
std::vector<CertificateFact> order_four_certificate();

// Mapping cone of multiplication by P on R^2, as the 4 x 4 differential
// with P in positions (0, 2) and (1, 3).
DifferentialModule cone_of_p();

struct HandcuffsModel {
  PolyMatrix map;  // u^2 + P I on the unknot module
  std::size_t kernel_rank = 0;
  std::size_t cokernel_rank = 0;
  DifferentialModule complex;
};

// Two-term complex R^3 -> R^3 given by u_e^2 + P on the unknot module.
HandcuffsModel linked_handcuffs_model();

// Random square-zero module of the given rank (<= 12): a conjugate
// Q N Q^-1 of a block nilpotent N whose entries stay nonzero on both
// concrete lines, by a random product Q of elementary matrices over R.
DifferentialModule random_complex(std::uint64_t seed, std::size_t size);

}  // namespace taitfoam

#endif  // TAITFOAM_HOMOLOGICAL_HPP_
