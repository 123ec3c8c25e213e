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

#ifndef TAITFOAM_LINALG_HPP_
#define TAITFOAM_LINALG_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "taitfoam/matrix.hpp"

namespace taitfoam {

// Internal-consistency failure: two independent computations that must
// agree did not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// GF(2^16) via log/antilog tables over x^16 + x^12 + x^3 + x + 1.
class Gf2_16 {
 public:
  using Element = std::uint16_t;
  static constexpr std::uint32_t kOrder = 65535;  // multiplicative group

  static Element mul(Element a, Element b);
  static Element inv(Element a);
  static Element exp(std::uint32_t k);
  static std::uint32_t log(Element a);  // a != 0
  // a^k for a != 0 and any integer k.
  static Element pow(Element a, std::int64_t k);
};

// Value of p at a point with nonzero coordinates.
Gf2_16::Element evaluate(const LaurentPoly& p,
                         const std::array<Gf2_16::Element, 3>& point);

// Rank over Frac(R) by fraction-free (Bareiss) elimination with exact
// division in R.
std::size_t exact_rank(const PolyMatrix& m);
std::size_t exact_rank(const RationalMatrix& m);

// Rank of the image of m at uniformly random points of (GF(2^16)^*)^3;
// the maximum over independent trials. Never exceeds the true rank.
std::size_t randomized_rank(const RationalMatrix& m, std::mt19937_64& rng,
                            int trials = 3);
std::size_t randomized_rank(const PolyMatrix& m, std::mt19937_64& rng,
                            int trials = 3);

struct RankReport {
  std::optional<std::size_t> exact;
  std::size_t randomized = 0;
  std::size_t rank = 0;
};

inline constexpr std::size_t kDefaultExactRankLimit = 12;

// Rank over Frac(R). Exact elimination runs when both dimensions are at
// most exact_limit; the randomized method always runs. Throws
// ConsistencyError if both run and disagree.
RankReport fraction_rank(const RationalMatrix& m, std::mt19937_64& rng,
                         std::size_t exact_limit = kDefaultExactRankLimit);
RankReport fraction_rank(const PolyMatrix& m, std::mt19937_64& rng,
                         std::size_t exact_limit = kDefaultExactRankLimit);
// Convenience overload with a fixed internal seed.
std::size_t fraction_rank(const PolyMatrix& m);

// A basis of the right kernel {x : m x = 0} over Frac(R), each vector
// scaled to have polynomial entries.
std::vector<std::vector<LaurentPoly>> kernel_basis(const PolyMatrix& m);

// True iff the two vectors are linearly dependent over Frac(R).
bool proportional(const std::vector<LaurentPoly>& a,
                  const std::vector<LaurentPoly>& b);

LaurentPoly determinant(const PolyMatrix& m);
PolyMatrix adjugate(const PolyMatrix& m);
// Inverse over R; nullopt unless the determinant is a unit (a monomial).
std::optional<PolyMatrix> inverse_over_ring(const PolyMatrix& m);

// Rank over F2 of the image of m under T1 = T2 = T3 = 1.
std::size_t rank_at_ones(const PolyMatrix& m);
// Rank over F2 of a 0/1 matrix given row-wise.
std::size_t f2_rank(std::vector<std::vector<bool>> rows);

}  // namespace taitfoam

#endif  // TAITFOAM_LINALG_HPP_
