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

#ifndef TAITFOAM_OPERATORS_HPP_
#define TAITFOAM_OPERATORS_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "taitfoam/linalg.hpp"
#include "taitfoam/matrix.hpp"

namespace taitfoam {

using VertexEdges = std::array<std::string, 3>;

// A free R-module of finite rank with one endomorphism per edge. Matrices
// act on column vectors: column j is the image of basis vector j.
struct OperatorModule {
  std::string name;
  std::vector<std::string> basis;
  std::map<std::string, PolyMatrix> operators;  // keyed by edge id
  // Edge triples meeting at each vertex of the modelled web.
  std::vector<VertexEdges> vertices;

  std::size_t rank() const { return basis.size(); }
  const PolyMatrix& op(const std::string& edge) const;
  std::vector<std::string> edge_ids() const;
};

// Rank 3, basis v0 v1 v2, u_e = [[0,0,0],[1,0,P],[0,1,0]].
OperatorModule unknot_module();

// Rank 6 over the basis v(0,m,n); each u_i solves M U_i = N_i against the
// unimodular foam pairing M. Throws ConsistencyError if M is not
// unimodular.
OperatorModule theta_module();

struct CheckEntry {
  std::string name;
  bool passed = false;
};

struct RelationReport {
  std::vector<CheckEntry> entries;
  bool all_passed() const;
};

// u^3 + P u = 0 for every operator, plus pairwise commutation.
RelationReport check_module_relations(const OperatorModule& module);

// The three vertex identities and u^3 + P u = 0 for each incident operator.
// Throws std::invalid_argument unless the triple is a declared vertex of
// the module.
RelationReport check_vertex_relations(const OperatorModule& module,
                                      const VertexEdges& incident);

struct DecompositionSummand {
  std::vector<std::string> edges;  // the subset s
  std::size_t rank = 0;
};

struct EdgeDecomposition {
  std::vector<DecompositionSummand> summands;  // every subset, ordered by mask
  // Checks that im u_e = ker(u_e^2 + P) over Frac(R) for every edge.
  RelationReport image_checks;
  // Projection identities at every vertex (empty without vertices).
  RelationReport projection_checks;

  std::size_t total_rank() const;
  std::size_t rank_of(const std::vector<std::string>& edges) const;
};

// V(s) = (cap_{e in s} ker u_e) cap (cap_{e not in s} im u_e) over Frac(R),
// computed as the kernel of the stacked conditions u_e (e in s) and
// u_e^2 + P (e not in s).
EdgeDecomposition edge_decomposition(const OperatorModule& module);

// Basis of V(s) over Frac(R) with polynomial entries.
std::vector<std::vector<LaurentPoly>> summand_basis(
    const OperatorModule& module, const std::vector<std::string>& edges);

// u^2 + P I.
PolyMatrix square_plus_p(const PolyMatrix& u);

}  // namespace taitfoam

#endif  // TAITFOAM_OPERATORS_HPP_
