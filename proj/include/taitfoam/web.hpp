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

#ifndef TAITFOAM_WEB_HPP_
#define TAITFOAM_WEB_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taitfoam {

// Raised when a web fails trivalence. Names every offending vertex.
class TrivalenceError : public std::runtime_error {
 public:
  TrivalenceError(const std::string& what, std::vector<std::string> vertices)
      : std::runtime_error(what), vertices_(std::move(vertices)) {}
  const std::vector<std::string>& vertices() const { return vertices_; }

 private:
  std::vector<std::string> vertices_;
};

// Raised for structurally malformed web descriptions (unknown vertex,
// duplicate identifiers, bad JSON).
class WebFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EdgeKind { kRegular, kLoop, kCircle };

struct WebEdge {
  std::string id;
  EdgeKind kind = EdgeKind::kRegular;
  int u = -1;  // endpoint vertex index; the loop vertex for kLoop
  int v = -1;  // second endpoint; equals u for kLoop, -1 for kCircle
};

// An abstract web: a trivalent multigraph whose edges may be loops, plus
// free circles with no vertices. No spatial embedding is recorded; the
// planar flag is the caller's declaration.
class Web {
 public:
  Web() = default;

  // Building API. Vertex/edge ids must be unique.
  int add_vertex(std::string id);
  void add_edge(std::string id, int u, int v);
  void add_loop(std::string id, int vertex);
  void add_circle(std::string id);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  bool declared_planar() const { return planar_; }
  void set_declared_planar(bool planar) { planar_ = planar; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<WebEdge>& edges() const { return edges_; }
  std::size_t circle_count() const;
  int edge_index(std::string_view id) const;  // -1 if absent
  int vertex_index(std::string_view id) const;

  // Edge indices incident at vertex v, a loop listed twice.
  std::vector<int> incidence(int v) const;

 private:
  std::string name_;
  bool planar_ = false;
  std::vector<std::string> vertices_;
  std::vector<WebEdge> edges_;
};

// Throws TrivalenceError unless every vertex has incidence exactly 3.
const Web& validate(const Web& web);

Web parse_web_json(std::string_view text);
Web load_web(const std::string& path);
std::string web_to_json(const Web& web);

// Subset of the edges of a specific web, by edge index.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t edge_count) : members_(edge_count, false) {}
  EdgeSubset(std::size_t edge_count, const std::vector<int>& members);

  std::size_t universe_size() const { return members_.size(); }
  bool contains(int edge) const { return members_[static_cast<std::size_t>(edge)]; }
  void insert(int edge) { members_[static_cast<std::size_t>(edge)] = true; }
  void erase(int edge) { members_[static_cast<std::size_t>(edge)] = false; }
  std::vector<int> members() const;
  std::size_t size() const;
  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::vector<bool> members_;
};

// Number of subset members incident at each vertex, counted with
// multiplicity (a loop counts twice).
std::vector<int> incidence_counts(const Web& web, const EdgeSubset& s);
bool is_one_set(const Web& web, const EdgeSubset& s);
bool is_two_set(const Web& web, const EdgeSubset& s);
std::vector<std::string> edge_ids(const Web& web, const EdgeSubset& s);

struct CycleComponent {
  bool free_circle = false;
  std::vector<int> vertices;  // vertex indices on the component
  std::vector<int> edges;     // edge indices of the complement on it
};

struct CycleDecomposition {
  std::vector<CycleComponent> components;
  std::size_t count() const { return components.size(); }
};

// Calls visit for every 1-set of the web (smallest-choice-first
// backtracking over vertices, then every choice of free circles).
void for_each_one_set(const Web& web,
                      const std::function<void(const EdgeSubset&)>& visit);
std::vector<EdgeSubset> enumerate_one_sets(const Web& web);

// Components of the complementary 2-set. Throws std::invalid_argument if s
// is not a 1-set.
CycleDecomposition complement_cycles(const Web& web, const EdgeSubset& s);
// Every complementary component carries an even number of endpoints of
// s-edges. Throws std::invalid_argument if s is not a 1-set.
bool is_even(const Web& web, const EdgeSubset& s);

// Edge 3-colorings with distinct colors at every vertex.
std::uint64_t count_tait_backtracking(const Web& web);
// Sum over even 1-sets s of 2^n(s).
std::uint64_t count_tait_matching_formula(const Web& web);

// Planarity of the abstract multigraph (loops and parallel edges dropped).
bool is_abstractly_planar(const Web& web);

struct RankPrediction {
  std::uint64_t rank = 0;
  bool abstractly_planar = false;
  bool declared_planar = false;
  // Empty when the prediction is backed by the planar rank theorem.
  std::string warning;
};

RankPrediction predict_planar_rank(const Web& web);

// Vertex and edge ids are prefixed "a." and "b.".
Web disjoint_union(const Web& a, const Web& b);

// All connected cubic multigraphs (loops and multi-edges allowed, no free
// circles) with the given even number of vertices, one per isomorphism
// class.
std::vector<Web> connected_cubic_multigraphs(int vertices);

// Built-in webs: the same shapes as the shipped corpus files.
Web unknot_web();
Web theta_web();
Web handcuffs_web();
Web generalized_petersen_web(int n, int k, std::string name, bool planar);

}  // namespace taitfoam

#endif  // TAITFOAM_WEB_HPP_
