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

#include "taitfoam/operators.hpp"

#include <algorithm>
#include <stdexcept>

#include "taitfoam/foam.hpp"

namespace taitfoam {

const PolyMatrix& OperatorModule::op(const std::string& edge) const {
  auto it = operators.find(edge);
  if (it == operators.end())
    throw std::invalid_argument("module " + name + " has no edge '" + edge + "'");
  return it->second;
}

std::vector<std::string> OperatorModule::edge_ids() const {
  std::vector<std::string> out;
  for (const auto& [id, m] : operators) out.push_back(id);
  return out;
}

PolyMatrix square_plus_p(const PolyMatrix& u) {
  return u * u + poly_identity(u.rows()).scaled(LaurentPoly::distinguished());
}

OperatorModule unknot_module() {
  const LaurentPoly o = LaurentPoly::zero();
  const LaurentPoly l = LaurentPoly::one();
  const LaurentPoly p = LaurentPoly::distinguished();
  OperatorModule m;
  m.name = "unknot";
  m.basis = {"v0", "v1", "v2"};
  m.operators.emplace("e", PolyMatrix{{o, o, o}, {l, o, p}, {o, l, o}});
  return m;
}

OperatorModule theta_module() {
  const std::vector<DotTriple> basis = theta_basis_dots();
  const PolyMatrix pairing = pairing_matrix(basis, basis);
  auto inverse = inverse_over_ring(pairing);
  if (!inverse)
    throw ConsistencyError("theta foam pairing is not unimodular");
  OperatorModule m;
  m.name = "theta";
  for (const auto& b : basis) m.basis.push_back("v" + dots_label(b));
  for (int edge = 0; edge < 3; ++edge) {
    // N(i, j) = a_i(u_edge v_j): one extra dot on the given disk.
    std::vector<DotTriple> shifted = basis;
    for (auto& d : shifted) ++d[static_cast<std::size_t>(edge)];
    const PolyMatrix images = pairing_matrix(basis, shifted);
    m.operators.emplace("e" + std::to_string(edge + 1), *inverse * images);
  }
  m.vertices = {{"e1", "e2", "e3"}, {"e1", "e2", "e3"}};
  return m;
}

bool RelationReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CheckEntry& e) { return e.passed; });
}

namespace {

bool satisfies_cubic(const PolyMatrix& u) {
  const PolyMatrix pu = u.scaled(LaurentPoly::distinguished());
  return (u * u * u + pu).is_zero();
}

}  // namespace

RelationReport check_module_relations(const OperatorModule& module) {
  RelationReport report;
  const auto ids = module.edge_ids();
  for (const auto& id : ids)
    report.entries.push_back({"u_" + id + "^3 + P u_" + id + " = 0",
                              satisfies_cubic(module.op(id))});
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const auto& a = module.op(ids[i]);
      const auto& b = module.op(ids[j]);
      report.entries.push_back(
          {"u_" + ids[i] + " u_" + ids[j] + " = u_" + ids[j] + " u_" + ids[i],
           a * b == b * a});
    }
  return report;
}

RelationReport check_vertex_relations(const OperatorModule& module,
                                      const VertexEdges& incident) {
  if (std::find(module.vertices.begin(), module.vertices.end(), incident) ==
      module.vertices.end())
    throw std::invalid_argument("edges " + incident[0] + ", " + incident[1] +
                                ", " + incident[2] +
                                " do not meet at a vertex of module " +
                                module.name);
  const PolyMatrix& u1 = module.op(incident[0]);
  const PolyMatrix& u2 = module.op(incident[1]);
  const PolyMatrix& u3 = module.op(incident[2]);
  const PolyMatrix pid =
      poly_identity(module.rank()).scaled(LaurentPoly::distinguished());
  RelationReport report;
  report.entries.push_back({"u1 + u2 + u3 = 0", (u1 + u2 + u3).is_zero()});
  report.entries.push_back(
      {"u2 u3 + u3 u1 + u1 u2 = P", u2 * u3 + u3 * u1 + u1 * u2 == pid});
  report.entries.push_back({"u1 u2 u3 = 0", (u1 * u2 * u3).is_zero()});
  report.entries.push_back({"u^3 + P u = 0 for u1, u2, u3",
                            satisfies_cubic(u1) && satisfies_cubic(u2) &&
                                satisfies_cubic(u3)});
  return report;
}

namespace {

PolyMatrix stacked_conditions(const OperatorModule& module,
                              const std::vector<std::string>& ids,
                              std::uint64_t mask) {
  PolyMatrix stack(0, module.rank());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const PolyMatrix& u = module.op(ids[k]);
    stack = stack.stacked((mask >> k & 1u) ? u : square_plus_p(u));
  }
  return stack;
}

std::uint64_t mask_of(const std::vector<std::string>& ids,
                      const std::vector<std::string>& edges) {
  std::uint64_t mask = 0;
  for (const auto& e : edges) {
    auto it = std::find(ids.begin(), ids.end(), e);
    if (it == ids.end()) throw std::invalid_argument("unknown edge '" + e + "'");
    mask |= std::uint64_t{1} << (it - ids.begin());
  }
  return mask;
}

}  // namespace

EdgeDecomposition edge_decomposition(const OperatorModule& module) {
  const auto ids = module.edge_ids();
  if (ids.size() > 20) throw std::invalid_argument("too many edges");
  const std::size_t n = module.rank();
  EdgeDecomposition out;
  for (const auto& id : ids) {
    // im u = ker(u^2 + P): inclusion from u^3 + P u = 0, equality by ranks.
    const PolyMatrix& u = module.op(id);
    const PolyMatrix q = square_plus_p(u);
    const bool included = (q * u).is_zero();
    const bool ranks = fraction_rank(u) + fraction_rank(q) == n;
    out.image_checks.entries.push_back(
        {"im u_" + id + " = ker(u_" + id + "^2 + P)", included && ranks});
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size());
       ++mask) {
    DecompositionSummand s;
    for (std::size_t k = 0; k < ids.size(); ++k)
      if (mask >> k & 1u) s.edges.push_back(ids[k]);
    s.rank = n - fraction_rank(stacked_conditions(module, ids, mask));
    out.summands.push_back(std::move(s));
  }
  const LaurentPoly p = LaurentPoly::distinguished();
  const PolyMatrix pid = poly_identity(n).scaled(p);
  for (const auto& v : module.vertices) {
    // P pi_i = u_j u_k; identities checked after clearing the 1/P factors.
    const PolyMatrix& u1 = module.op(v[0]);
    const PolyMatrix& u2 = module.op(v[1]);
    const PolyMatrix& u3 = module.op(v[2]);
    const std::array<PolyMatrix, 3> ppi{u2 * u3, u3 * u1, u1 * u2};
    bool idempotent = true;
    bool orthogonal = true;
    for (int i = 0; i < 3; ++i) {
      idempotent = idempotent && ppi[i] * ppi[i] == ppi[i].scaled(p);
      for (int j = 0; j < 3; ++j)
        if (i != j) orthogonal = orthogonal && (ppi[i] * ppi[j]).is_zero();
    }
    const std::string at = " at (" + v[0] + "," + v[1] + "," + v[2] + ")";
    out.projection_checks.entries.push_back({"pi_i^2 = pi_i" + at, idempotent});
    out.projection_checks.entries.push_back(
        {"pi_i pi_j = 0 for i != j" + at, orthogonal});
    out.projection_checks.entries.push_back(
        {"pi_1 + pi_2 + pi_3 = 1" + at, ppi[0] + ppi[1] + ppi[2] == pid});
  }
  return out;
}

std::vector<std::vector<LaurentPoly>> summand_basis(
    const OperatorModule& module, const std::vector<std::string>& edges) {
  const auto ids = module.edge_ids();
  return kernel_basis(stacked_conditions(module, ids, mask_of(ids, edges)));
}

std::size_t EdgeDecomposition::total_rank() const {
  std::size_t total = 0;
  for (const auto& s : summands) total += s.rank;
  return total;
}

std::size_t EdgeDecomposition::rank_of(
    const std::vector<std::string>& edges) const {
  std::vector<std::string> key = edges;
  std::sort(key.begin(), key.end());
  for (const auto& s : summands) {
    std::vector<std::string> have = s.edges;
    std::sort(have.begin(), have.end());
    if (have == key) return s.rank;
  }
  throw std::invalid_argument("no such subset in decomposition");
}

}  // namespace taitfoam
