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

#include "taitfoam/linalg.hpp"

#include <array>
#include <sstream>

namespace taitfoam {
namespace {

struct Gf2_16Tables {
  std::array<std::uint16_t, 2 * 65535> exp{};
  std::array<std::uint32_t, 65536> log{};

  Gf2_16Tables() {
    constexpr std::uint32_t kModulus = 0x1100B;  // x^16+x^12+x^3+x+1
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k < Gf2_16::kOrder; ++k) {
      exp[k] = static_cast<std::uint16_t>(x);
      exp[k + Gf2_16::kOrder] = static_cast<std::uint16_t>(x);
      log[x] = k;
      x <<= 1;
      if (x & 0x10000) x ^= kModulus;
    }
  }
};

const Gf2_16Tables& tables() {
  static const Gf2_16Tables t;
  return t;
}

}  // namespace

Gf2_16::Element Gf2_16::mul(Element a, Element b) {
  if (a == 0 || b == 0) return 0;
  const auto& t = tables();
  return t.exp[t.log[a] + t.log[b]];
}

Gf2_16::Element Gf2_16::inv(Element a) {
  if (a == 0) throw std::domain_error("inverse of zero in GF(2^16)");
  const auto& t = tables();
  return t.exp[(kOrder - t.log[a]) % kOrder];
}

Gf2_16::Element Gf2_16::exp(std::uint32_t k) {
  return tables().exp[k % kOrder];
}

std::uint32_t Gf2_16::log(Element a) { return tables().log[a]; }

Gf2_16::Element Gf2_16::pow(Element a, std::int64_t k) {
  if (a == 0) throw std::domain_error("power of zero in GF(2^16)");
  std::int64_t e = (static_cast<std::int64_t>(log(a)) * (k % kOrder)) % kOrder;
  if (e < 0) e += kOrder;
  return exp(static_cast<std::uint32_t>(e));
}

Gf2_16::Element evaluate(const LaurentPoly& p,
                         const std::array<Gf2_16::Element, 3>& point) {
  std::array<std::int64_t, 3> logs{};
  for (int k = 0; k < 3; ++k) {
    if (point[k] == 0) throw std::domain_error("evaluation point has zero");
    logs[k] = Gf2_16::log(point[k]);
  }
  Gf2_16::Element acc = 0;
  for (const auto& t : p.terms()) {
    std::int64_t e = 0;
    for (int k = 0; k < 3; ++k) e += logs[k] * t.e[k];
    e %= Gf2_16::kOrder;
    if (e < 0) e += Gf2_16::kOrder;
    acc ^= Gf2_16::exp(static_cast<std::uint32_t>(e));
  }
  return acc;
}

namespace {

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = a.divide_exact(b);
  if (!q)
    throw ConsistencyError("fraction-free elimination: inexact division");
  return std::move(*q);
}

// Bareiss elimination in place. Returns the rank; the last pivot is the
// determinant when the matrix is square and nonsingular.
std::size_t bareiss(PolyMatrix& a, LaurentPoly* last_pivot) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  LaurentPoly prev = LaurentPoly::one();
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t p = row;
    // Prefer the sparsest available pivot.
    std::size_t best_terms = 0;
    bool found = false;
    for (std::size_t i = row; i < r; ++i) {
      if (a(i, col).is_zero()) continue;
      if (!found || a(i, col).term_count() < best_terms) {
        p = i;
        best_terms = a(i, col).term_count();
        found = true;
      }
    }
    if (!found) continue;
    a.swap_rows(row, p);
    const LaurentPoly pivot = a(row, col);
    for (std::size_t i = row + 1; i < r; ++i) {
      const LaurentPoly factor = a(i, col);
      for (std::size_t j = col + 1; j < c; ++j) {
        LaurentPoly v = pivot * a(i, j);
        if (!factor.is_zero() && !a(row, j).is_zero()) v += factor * a(row, j);
        a(i, j) = prev.is_one() ? std::move(v) : exact_quotient(v, prev);
      }
      a(i, col) = LaurentPoly{};
    }
    prev = pivot;
    ++row;
  }
  if (last_pivot != nullptr) *last_pivot = prev;
  return row;
}

PolyMatrix clear_denominators(const RationalMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    // Row scaling by a nonzero element leaves the rank unchanged.
    LaurentPoly scale = LaurentPoly::one();
    std::vector<LaurentPoly> seen;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const LaurentPoly& d = m(i, j).denominator();
      if (d.is_one()) continue;
      if (std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
      seen.push_back(d);
      scale *= d;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RationalFunction& x = m(i, j);
      out(i, j) = exact_quotient(x.numerator() * scale, x.denominator());
    }
  }
  return out;
}

std::size_t gf_rank(std::vector<std::vector<Gf2_16::Element>> a,
                    std::size_t cols) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    const Gf2_16::Element inv = Gf2_16::inv(a[row][col]);
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      const Gf2_16::Element f = Gf2_16::mul(a[i][col], inv);
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] ^= Gf2_16::mul(f, a[row][j]);
    }
    ++row;
  }
  return row;
}

std::array<Gf2_16::Element, 3> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(1, 65535);
  return {static_cast<Gf2_16::Element>(dist(rng)),
          static_cast<Gf2_16::Element>(dist(rng)),
          static_cast<Gf2_16::Element>(dist(rng))};
}

}  // namespace

std::size_t exact_rank(const PolyMatrix& m) {
  PolyMatrix a = m;
  return bareiss(a, nullptr);
}

std::size_t exact_rank(const RationalMatrix& m) {
  return exact_rank(clear_denominators(m));
}

std::size_t randomized_rank(const RationalMatrix& m, std::mt19937_64& rng,
                            int trials) {
  std::size_t best = 0;
  for (int trial = 0; trial < trials; ++trial) {
    // Resample if some denominator vanishes at the point.
    for (int attempt = 0; attempt < 64; ++attempt) {
      const auto point = random_point(rng);
      std::vector<std::vector<Gf2_16::Element>> a(
          m.rows(), std::vector<Gf2_16::Element>(m.cols()));
      bool ok = true;
      for (std::size_t i = 0; i < m.rows() && ok; ++i)
        for (std::size_t j = 0; j < m.cols() && ok; ++j) {
          const Gf2_16::Element d = evaluate(m(i, j).denominator(), point);
          if (d == 0) {
            ok = false;
            break;
          }
          a[i][j] =
              Gf2_16::mul(evaluate(m(i, j).numerator(), point), Gf2_16::inv(d));
        }
      if (!ok) continue;
      best = std::max(best, gf_rank(std::move(a), m.cols()));
      break;
    }
  }
  return best;
}

std::size_t randomized_rank(const PolyMatrix& m, std::mt19937_64& rng,
                            int trials) {
  std::size_t best = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const auto point = random_point(rng);
    std::vector<std::vector<Gf2_16::Element>> a(
        m.rows(), std::vector<Gf2_16::Element>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        a[i][j] = evaluate(m(i, j), point);
    best = std::max(best, gf_rank(std::move(a), m.cols()));
  }
  return best;
}

namespace {

RankReport combine(std::optional<std::size_t> exact, std::size_t randomized) {
  RankReport report;
  report.exact = exact;
  report.randomized = randomized;
  report.rank = exact.value_or(randomized);
  if (exact && *exact != randomized) {
    std::ostringstream os;
    os << "rank disagreement: exact elimination gives " << *exact
       << ", randomized evaluation gives " << randomized;
    throw ConsistencyError(os.str());
  }
  return report;
}

}  // namespace

RankReport fraction_rank(const RationalMatrix& m, std::mt19937_64& rng,
                         std::size_t exact_limit) {
  std::optional<std::size_t> exact;
  if (m.rows() <= exact_limit && m.cols() <= exact_limit)
    exact = exact_rank(m);
  return combine(exact, randomized_rank(m, rng));
}

RankReport fraction_rank(const PolyMatrix& m, std::mt19937_64& rng,
                         std::size_t exact_limit) {
  std::optional<std::size_t> exact;
  if (m.rows() <= exact_limit && m.cols() <= exact_limit)
    exact = exact_rank(m);
  return combine(exact, randomized_rank(m, rng));
}

std::size_t fraction_rank(const PolyMatrix& m) {
  std::mt19937_64 rng(0x5eed5eedULL);
  return fraction_rank(m, rng).rank;
}

std::vector<std::vector<LaurentPoly>> kernel_basis(const PolyMatrix& m) {
  RationalMatrix a = to_rational(m);
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t p = row;
    while (p < r && a(p, col).is_zero()) ++p;
    if (p == r) continue;
    a.swap_rows(row, p);
    const RationalFunction inv = a(row, col).inverse();
    for (std::size_t j = col; j < c; ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const RationalFunction f = a(i, col);
      for (std::size_t j = col; j < c; ++j) a(i, j) += f * a(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<std::vector<LaurentPoly>> basis;
  std::vector<bool> is_pivot(c, false);
  for (auto pc : pivot_cols) is_pivot[pc] = true;
  for (std::size_t free = 0; free < c; ++free) {
    if (is_pivot[free]) continue;
    std::vector<RationalFunction> x(c);
    x[free] = RationalFunction(LaurentPoly::one());
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      x[pivot_cols[k]] = a(k, free);
    LaurentPoly scale = LaurentPoly::one();
    for (const auto& v : x)
      if (!v.is_polynomial()) scale *= v.denominator();
    std::vector<LaurentPoly> out(c);
    for (std::size_t j = 0; j < c; ++j)
      out[j] = exact_quotient(x[j].numerator() * scale, x[j].denominator());
    basis.push_back(std::move(out));
  }
  return basis;
}

bool proportional(const std::vector<LaurentPoly>& a,
                  const std::vector<LaurentPoly>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

LaurentPoly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square");
  if (m.rows() == 0) return LaurentPoly::one();
  PolyMatrix a = m;
  LaurentPoly last;
  const std::size_t rank = bareiss(a, &last);
  return rank == m.rows() ? last : LaurentPoly{};
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("adjugate of non-square");
  const std::size_t n = m.rows();
  PolyMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = LaurentPoly::one();
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      // Cofactor signs are all +1 in characteristic 2.
      adj(i, j) = determinant(minor);
    }
  return adj;
}

std::optional<PolyMatrix> inverse_over_ring(const PolyMatrix& m) {
  const LaurentPoly det = determinant(m);
  auto unit_inverse = det.inverse();
  if (!unit_inverse) return std::nullopt;
  return adjugate(m).scaled(*unit_inverse);
}

std::size_t f2_rank(std::vector<std::vector<bool>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> a(rows.size(),
                                            std::vector<std::uint64_t>(words));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rows[i][j]) a[i][j / 64] |= std::uint64_t{1} << (j % 64);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t p = row;
    while (p < a.size() && !(a[p][col / 64] & bit)) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    for (std::size_t i = row + 1; i < a.size(); ++i)
      if (a[i][col / 64] & bit)
        for (std::size_t w = 0; w < words; ++w) a[i][w] ^= a[row][w];
    ++row;
  }
  return row;
}

std::size_t rank_at_ones(const PolyMatrix& m) {
  std::vector<std::vector<bool>> rows(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows[i][j] = m(i, j).eval_at_ones();
  return f2_rank(std::move(rows));
}

RationalMatrix to_rational(const PolyMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = RationalFunction(m(i, j));
  return out;
}

std::string format_matrix(const PolyMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) os << " | ";
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace taitfoam
