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

#include "taitfoam/homological.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "taitfoam/operators.hpp"

namespace taitfoam {

using nlohmann::json;

DifferentialModule::DifferentialModule(PolyMatrix d) : d_(std::move(d)) {
  if (!d_.is_square())
    throw NotSquareZeroError("differential must be a square matrix");
  if (!(d_ * d_).is_zero())
    throw NotSquareZeroError("differential does not square to zero");
}

DifferentialModule DifferentialModule::cone(const PolyMatrix& a) {
  const std::size_t src = a.cols();
  const std::size_t dst = a.rows();
  PolyMatrix d(src + dst, src + dst);
  for (std::size_t i = 0; i < dst; ++i)
    for (std::size_t j = 0; j < src; ++j) d(src + i, j) = a(i, j);
  DifferentialModule out(std::move(d));
  out.map_ = a;
  return out;
}

DifferentialModule parse_complex_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) +
                         ": " + e.what(),
                     e.byte);
  }
  if (!doc.is_object()) throw ParseError("complex: expected a JSON object", 0);
  for (const auto& [key, value] : doc.items())
    if (key != "rank" && key != "differential")
      throw ParseError("complex: unknown field '" + key + "'", 0);
  if (!doc.contains("rank") || !doc["rank"].is_number_unsigned())
    throw ParseError("complex.rank: expected a nonnegative integer", 0);
  const std::size_t n = doc["rank"].get<std::size_t>();
  if (!doc.contains("differential") || !doc["differential"].is_array() ||
      doc["differential"].size() != n)
    throw ParseError("complex.differential: expected " + std::to_string(n) +
                         " rows",
                     0);
  PolyMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = doc["differential"][i];
    if (!row.is_array() || row.size() != n)
      throw ParseError("complex.differential[" + std::to_string(i) +
                           "]: expected " + std::to_string(n) + " entries",
                       0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where = "complex.differential[" + std::to_string(i) +
                                "][" + std::to_string(j) + "]";
      if (!row[j].is_string())
        throw ParseError(where + ": expected a polynomial string", 0);
      try {
        d(i, j) = LaurentPoly::parse(row[j].get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), e.position());
      }
    }
  }
  return DifferentialModule(std::move(d));
}

DifferentialModule load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex_json(buf.str());
}

std::string complex_to_json(const DifferentialModule& c) {
  json doc;
  doc["rank"] = c.rank();
  json rows = json::array();
  for (std::size_t i = 0; i < c.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < c.rank(); ++j)
      row.push_back(c.differential()(i, j).to_string());
    rows.push_back(std::move(row));
  }
  doc["differential"] = std::move(rows);
  return doc.dump();
}

std::size_t homology_frac_rank(const DifferentialModule& c,
                               std::mt19937_64& rng) {
  return c.rank() - 2 * fraction_rank(c.differential(), rng).rank;
}

std::size_t homology_frac_rank(const DifferentialModule& c) {
  return c.rank() - 2 * fraction_rank(c.differential());
}

std::size_t homology_f2_dim(const DifferentialModule& c) {
  return c.rank() - 2 * rank_at_ones(c.differential());
}

namespace {

void add_row_multiple(Matrix<Gf2Poly>& a, std::size_t target,
                      std::size_t source, const Gf2Poly& q) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!a(source, j).is_zero()) a(target, j) += q * a(source, j);
}

void add_col_multiple(Matrix<Gf2Poly>& a, std::size_t target,
                      std::size_t source, const Gf2Poly& q) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!a(i, source).is_zero()) a(i, target) += q * a(i, source);
}

}  // namespace

std::vector<Gf2Poly> smith_diagonal(Matrix<Gf2Poly> a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  std::vector<Gf2Poly> diag;
  for (std::size_t k = 0; k < std::min(r, c); ++k) {
    auto move_min_to_pivot = [&](bool whole_block) {
      int best = -1;
      std::size_t bi = k, bj = k;
      for (std::size_t i = k; i < r; ++i)
        for (std::size_t j = k; j < c; ++j) {
          if (!whole_block && i != k && j != k) continue;
          if (a(i, j).is_zero()) continue;
          if (best < 0 || a(i, j).degree() < best) {
            best = a(i, j).degree();
            bi = i;
            bj = j;
          }
        }
      if (best < 0) return false;
      a.swap_rows(k, bi);
      a.swap_cols(k, bj);
      return true;
    };
    if (!move_min_to_pivot(true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < r; ++i) {
        if (a(i, k).is_zero()) continue;
        add_row_multiple(a, i, k, a(i, k).divmod(a(k, k)).first);
        if (!a(i, k).is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < c; ++j) {
        if (a(k, j).is_zero()) continue;
        add_col_multiple(a, j, k, a(k, j).divmod(a(k, k)).first);
        if (!a(k, j).is_zero()) clean = false;
      }
      if (!clean) {
        move_min_to_pivot(false);
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = k + 1; i < r && divides; ++i)
        for (std::size_t j = k + 1; j < c; ++j)
          if (!a(i, j).is_zero() && !a(i, j).divmod(a(k, k)).second.is_zero()) {
            add_row_multiple(a, k, i, Gf2Poly::one());
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(a(k, k));
  }
  return diag;
}

Matrix<Gf2Poly> specialize(const PolyMatrix& d, Direction direction) {
  Matrix<Gf2Poly> out(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    std::vector<UnivariateRational> row;
    Gf2Poly lcm = Gf2Poly::one();
    for (std::size_t j = 0; j < d.cols(); ++j) {
      row.push_back(substitute_line(d(i, j), direction));
      const Gf2Poly& den = row.back().denominator();
      lcm = lcm * den.divmod(Gf2Poly::gcd(lcm, den)).first;
    }
    for (std::size_t j = 0; j < d.cols(); ++j)
      out(i, j) = row[j].numerator() *
                  lcm.divmod(row[j].denominator()).first;
  }
  return out;
}

SpecializationReport bockstein_analysis(const DifferentialModule& c,
                                        Direction direction,
                                        std::mt19937_64& rng) {
  const std::size_t n = c.rank();
  SpecializationReport report;
  report.direction = direction;
  const std::size_t frac_rank_d = fraction_rank(c.differential(), rng).rank;
  report.frac_rank = n - 2 * frac_rank_d;
  report.f2_dim = homology_f2_dim(c);
  const std::vector<Gf2Poly> diag =
      smith_diagonal(specialize(c.differential(), direction));
  if (diag.size() != frac_rank_d)
    throw ConsistencyError(
        "line " + direction_name(direction) + " drops the rank of the "
        "differential from " + std::to_string(frac_rank_d) + " to " +
        std::to_string(diag.size()));
  report.free_rank = n - 2 * diag.size();
  for (const auto& g : diag) {
    const unsigned v = *g.valuation();
    if (v > 0) report.torsion_exponents.push_back(v);
  }
  std::sort(report.torsion_exponents.begin(), report.torsion_exponents.end());
  report.torsion_count = report.torsion_exponents.size();
  if (report.f2_dim != report.free_rank + 2 * report.torsion_count)
    throw ConsistencyError("universal coefficient identity failed: dim " +
                           std::to_string(report.f2_dim) + " != " +
                           std::to_string(report.free_rank) + " + 2*" +
                           std::to_string(report.torsion_count));
  return report;
}

SpecializationReport bockstein_analysis(const DifferentialModule& c,
                                        Direction direction) {
  std::mt19937_64 rng(0x5eed5eedULL);
  return bockstein_analysis(c, direction, rng);
}

std::string report_to_json(const SpecializationReport& r) {
  json doc;
  doc["direction"] = direction_name(r.direction);
  doc["frac_rank"] = r.frac_rank;
  doc["f2_dim"] = r.f2_dim;
  doc["r"] = r.free_rank;
  doc["l"] = r.torsion_count;
  doc["torsion_exponents"] = r.torsion_exponents;
  return doc.dump();
}

std::vector<CertificateFact> order_four_certificate() {
  const LaurentPoly p = LaurentPoly::distinguished();
  std::vector<CertificateFact> facts;

  const auto order = m_adic_order(p);
  facts.push_back({"m-adic order of P",
                   "ord(P) at (1,1,1) = " +
                       (order ? std::to_string(*order) : std::string("inf")),
                   order == 4u});

  const auto [degree, coeff] = leading_form(p, kDefaultSeriesOrder);
  const LaurentPoly expected = LaurentPoly::from_terms(
      {{{2, 2, 0}}, {{2, 0, 2}}, {{0, 2, 2}}});
  std::string form = coeff.to_string();
  for (char& ch : form)
    if (ch == 'T') ch = 'z';
  facts.push_back({"symbolic leading form",
                   "P(1+z t) = (" + form + ") t^" + std::to_string(degree) +
                       " + O(t^" + std::to_string(degree + 1) + ")",
                   degree == 4 && coeff == expected});

  const UnivariateRational diag = substitute_line(p, Direction::kOneOneOne);
  const Gf2Poly t4 = Gf2Poly::monomial(4);
  const bool diag_exact =
      diag.numerator() * Gf2Poly::one_plus_t_pow(1) ==
      t4 * diag.denominator();
  facts.push_back({"line 1,1,1",
                   "P(1+t,1+t,1+t) = " + diag.to_string() + ", valuation " +
                       std::to_string(diag.valuation().value_or(0)),
                   diag_exact && diag.valuation() == 4u});

  const UnivariateRational flat = substitute_line(p, Direction::kOneOneZero);
  const bool flat_exact = flat == UnivariateRational(
                                      t4, Gf2Poly::one_plus_t_pow(2));
  facts.push_back({"line 1,1,0",
                   "P(1+t,1+t,1) = " + flat.to_string() + ", valuation " +
                       std::to_string(flat.valuation().value_or(0)),
                   flat_exact && flat.valuation() == 4u});
  return facts;
}

DifferentialModule cone_of_p() {
  const LaurentPoly p = LaurentPoly::distinguished();
  PolyMatrix d(4, 4);
  d(0, 2) = p;
  d(1, 3) = p;
  return DifferentialModule(std::move(d));
}

HandcuffsModel linked_handcuffs_model() {
  const PolyMatrix map = square_plus_p(unknot_module().op("e"));
  const std::size_t rank = fraction_rank(map);
  return HandcuffsModel{map, map.cols() - rank, map.rows() - rank,
                        DifferentialModule::cone(map)};
}

namespace {

LaurentPoly random_small_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-1, 1);
  std::uniform_int_distribution<int> terms(2, 3);
  std::vector<Exponent> t;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) t.push_back({{exp(rng), exp(rng), exp(rng)}});
  return LaurentPoly::from_terms(std::move(t));
}

LaurentPoly random_monomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-1, 1);
  return LaurentPoly::monomial(exp(rng), exp(rng), exp(rng));
}

bool survives_both_lines(const LaurentPoly& f) {
  return !substitute_line(f, Direction::kOneOneOne).is_zero() &&
         !substitute_line(f, Direction::kOneOneZero).is_zero();
}

// Nonzero entry whose image on both lines is nonzero: a unit, P, or a
// small random polynomial, possibly multiplied together.
LaurentPoly random_block_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  for (;;) {
    LaurentPoly f = random_monomial(rng);
    const int factors = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int i = 0; i < factors; ++i) {
      switch (kind(rng)) {
        case 0:
          break;
        case 1:
          f *= LaurentPoly::distinguished();
          break;
        default:
          f *= random_small_poly(rng);
          break;
      }
    }
    if (!f.is_zero() && survives_both_lines(f)) return f;
  }
}

// d <- E d E with E = I + m e_{ij}, which is its own inverse in char 2.
void conjugate_elementary(PolyMatrix& d, std::size_t i, std::size_t j,
                          const LaurentPoly& m) {
  for (std::size_t c = 0; c < d.cols(); ++c)
    if (!d(j, c).is_zero()) d(i, c) += m * d(j, c);
  for (std::size_t r = 0; r < d.rows(); ++r)
    if (!d(r, i).is_zero()) d(r, j) += m * d(r, i);
}

}  // namespace

DifferentialModule random_complex(std::uint64_t seed, std::size_t size) {
  if (size > 12) throw std::invalid_argument("random_complex: size <= 12");
  std::mt19937_64 rng(seed);
  PolyMatrix d(size, size);
  std::vector<std::size_t> perm(size);
  for (std::size_t i = 0; i < size; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  const std::size_t pairs =
      std::uniform_int_distribution<std::size_t>(0, size / 2)(rng);
  for (std::size_t k = 0; k < pairs; ++k)
    d(perm[2 * k + 1], perm[2 * k]) = random_block_entry(rng);
  if (size >= 2) {
    std::uniform_int_distribution<std::size_t> index(0, size - 1);
    std::uniform_int_distribution<int> coin(0, 3);
    for (std::size_t k = 0; k < size + size / 2; ++k) {
      const std::size_t i = index(rng);
      std::size_t j = index(rng);
      while (j == i) j = index(rng);
      LaurentPoly m = random_monomial(rng);
      if (coin(rng) == 0) m += random_monomial(rng);
      if (m.is_zero()) continue;
      conjugate_elementary(d, i, j, m);
    }
  }
  return DifferentialModule(std::move(d));
}

}  // namespace taitfoam
