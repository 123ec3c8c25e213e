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

#include "taitfoam/web.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "json.hpp"

namespace taitfoam {

using nlohmann::json;

int Web::add_vertex(std::string id) {
  if (vertex_index(id) >= 0)
    throw WebFormatError("duplicate vertex id '" + id + "'");
  vertices_.push_back(std::move(id));
  return static_cast<int>(vertices_.size()) - 1;
}

namespace {

void check_new_edge_id(const Web& web, const std::string& id) {
  if (web.edge_index(id) >= 0)
    throw WebFormatError("duplicate edge id '" + id + "'");
}

void check_vertex(const Web& web, int v, const std::string& edge) {
  if (v < 0 || static_cast<std::size_t>(v) >= web.vertex_count())
    throw WebFormatError("edge '" + edge + "' names an unknown vertex");
}

}  // namespace

void Web::add_edge(std::string id, int u, int v) {
  check_new_edge_id(*this, id);
  check_vertex(*this, u, id);
  check_vertex(*this, v, id);
  if (u == v)
    throw WebFormatError("edge '" + id +
                         "' has equal endpoints; declare it as a loop");
  edges_.push_back({std::move(id), EdgeKind::kRegular, u, v});
}

void Web::add_loop(std::string id, int vertex) {
  check_new_edge_id(*this, id);
  check_vertex(*this, vertex, id);
  edges_.push_back({std::move(id), EdgeKind::kLoop, vertex, vertex});
}

void Web::add_circle(std::string id) {
  check_new_edge_id(*this, id);
  edges_.push_back({std::move(id), EdgeKind::kCircle, -1, -1});
}

std::size_t Web::circle_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const WebEdge& e) {
        return e.kind == EdgeKind::kCircle;
      }));
}

int Web::edge_index(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return static_cast<int>(i);
  return -1;
}

int Web::vertex_index(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return static_cast<int>(i);
  return -1;
}

std::vector<int> Web::incidence(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.kind == EdgeKind::kCircle) continue;
    if (e.u == v) out.push_back(static_cast<int>(i));
    if (e.v == v) out.push_back(static_cast<int>(i));
  }
  return out;
}

const Web& validate(const Web& web) {
  std::vector<int> degree(web.vertex_count(), 0);
  for (const auto& e : web.edges()) {
    if (e.kind == EdgeKind::kCircle) continue;
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  std::vector<std::string> bad;
  std::ostringstream os;
  for (std::size_t v = 0; v < degree.size(); ++v) {
    if (degree[v] == 3) continue;
    if (bad.empty())
      os << "trivalence violated:";
    else
      os << ',';
    os << " vertex '" << web.vertices()[v] << "' has incidence " << degree[v];
    bad.push_back(web.vertices()[v]);
  }
  if (!bad.empty()) throw TrivalenceError(os.str(), std::move(bad));
  return web;
}

namespace {

const json& require(const json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw WebFormatError(ctx + ": missing field '" + key + "'");
  return *it;
}

std::string require_string(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw WebFormatError(ctx + ": expected a string");
  return j.get<std::string>();
}

int lookup_vertex(const Web& web, const json& j, const std::string& ctx) {
  const std::string id = require_string(j, ctx);
  const int v = web.vertex_index(id);
  if (v < 0) throw WebFormatError(ctx + ": unknown vertex '" + id + "'");
  return v;
}

}  // namespace

Web parse_web_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw WebFormatError("malformed JSON at byte " + std::to_string(e.byte) +
                         ": " + e.what());
  }
  if (!doc.is_object()) throw WebFormatError("web: expected a JSON object");
  static const std::set<std::string> kTopKeys = {"name", "vertices", "edges",
                                                 "planar"};
  for (const auto& [key, value] : doc.items())
    if (!kTopKeys.count(key))
      throw WebFormatError("web: unknown field '" + key + "'");
  Web web;
  if (auto it = doc.find("name"); it != doc.end())
    web.set_name(require_string(*it, "web.name"));
  if (auto it = doc.find("planar"); it != doc.end()) {
    if (!it->is_boolean()) throw WebFormatError("web.planar: expected boolean");
    web.set_declared_planar(it->get<bool>());
  }
  const json& vertices = require(doc, "vertices", "web");
  if (!vertices.is_array())
    throw WebFormatError("web.vertices: expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    web.add_vertex(
        require_string(vertices[i], "web.vertices[" + std::to_string(i) + "]"));
  const json& edges = require(doc, "edges", "web");
  if (!edges.is_array()) throw WebFormatError("web.edges: expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string ctx = "web.edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_object()) throw WebFormatError(ctx + ": expected an object");
    for (const auto& [key, value] : e.items())
      if (key != "id" && key != "ends" && key != "loop" && key != "circle")
        throw WebFormatError(ctx + ": unknown field '" + key + "'");
    const std::string id = require_string(require(e, "id", ctx), ctx + ".id");
    const int kinds = static_cast<int>(e.contains("ends")) +
                      static_cast<int>(e.contains("loop")) +
                      static_cast<int>(e.contains("circle"));
    if (kinds != 1)
      throw WebFormatError(ctx + " ('" + id +
                           "'): exactly one of ends, loop, circle required");
    if (e.contains("ends")) {
      const json& ends = e["ends"];
      if (!ends.is_array() || ends.size() != 2)
        throw WebFormatError(ctx + ".ends: expected two vertex ids");
      web.add_edge(id, lookup_vertex(web, ends[0], ctx + ".ends[0]"),
                   lookup_vertex(web, ends[1], ctx + ".ends[1]"));
    } else if (e.contains("loop")) {
      web.add_loop(id, lookup_vertex(web, e["loop"], ctx + ".loop"));
    } else {
      if (!e["circle"].is_boolean() || !e["circle"].get<bool>())
        throw WebFormatError(ctx + ".circle: expected true");
      web.add_circle(id);
    }
  }
  return web;
}

Web load_web(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_web_json(buf.str());
}

std::string web_to_json(const Web& web) {
  json doc;
  doc["name"] = web.name();
  doc["vertices"] = web.vertices();
  json edges = json::array();
  for (const auto& e : web.edges()) {
    json je;
    je["id"] = e.id;
    switch (e.kind) {
      case EdgeKind::kRegular:
        je["ends"] = {web.vertices()[static_cast<std::size_t>(e.u)],
                      web.vertices()[static_cast<std::size_t>(e.v)]};
        break;
      case EdgeKind::kLoop:
        je["loop"] = web.vertices()[static_cast<std::size_t>(e.u)];
        break;
      case EdgeKind::kCircle:
        je["circle"] = true;
        break;
    }
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  doc["planar"] = web.declared_planar();
  return doc.dump(2);
}

EdgeSubset::EdgeSubset(std::size_t edge_count, const std::vector<int>& members)
    : members_(edge_count, false) {
  for (int e : members) members_.at(static_cast<std::size_t>(e)) = true;
}

std::vector<int> EdgeSubset::members() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::size_t EdgeSubset::size() const {
  return static_cast<std::size_t>(
      std::count(members_.begin(), members_.end(), true));
}

std::vector<int> incidence_counts(const Web& web, const EdgeSubset& s) {
  std::vector<int> counts(web.vertex_count(), 0);
  for (std::size_t i = 0; i < web.edge_count(); ++i) {
    const auto& e = web.edges()[i];
    if (e.kind == EdgeKind::kCircle || !s.contains(static_cast<int>(i)))
      continue;
    ++counts[static_cast<std::size_t>(e.u)];
    ++counts[static_cast<std::size_t>(e.v)];
  }
  return counts;
}

bool is_one_set(const Web& web, const EdgeSubset& s) {
  const auto c = incidence_counts(web, s);
  return std::all_of(c.begin(), c.end(), [](int k) { return k == 1; });
}

bool is_two_set(const Web& web, const EdgeSubset& s) {
  const auto c = incidence_counts(web, s);
  return std::all_of(c.begin(), c.end(), [](int k) { return k == 2; });
}

std::vector<std::string> edge_ids(const Web& web, const EdgeSubset& s) {
  std::vector<std::string> out;
  for (int e : s.members())
    out.push_back(web.edges()[static_cast<std::size_t>(e)].id);
  return out;
}

namespace {

struct MatchingSearch {
  const Web& web;
  std::vector<std::vector<int>> incident;  // per vertex, regular edges only
  std::vector<bool> covered;
  EdgeSubset chosen;
  const std::function<void(const EdgeSubset&)>& emit;

  int other_end(int edge, int v) const {
    const auto& e = web.edges()[static_cast<std::size_t>(edge)];
    return e.u == v ? e.v : e.u;
  }

  void run() {
    int best = -1;
    std::size_t best_choices = 0;
    for (std::size_t v = 0; v < covered.size(); ++v) {
      if (covered[v]) continue;
      std::size_t choices = 0;
      for (int e : incident[v])
        if (!covered[static_cast<std::size_t>(other_end(e, static_cast<int>(v)))])
          ++choices;
      if (best < 0 || choices < best_choices) {
        best = static_cast<int>(v);
        best_choices = choices;
      }
    }
    if (best < 0) {
      emit(chosen);
      return;
    }
    if (best_choices == 0) return;
    const int v = best;
    for (int e : incident[static_cast<std::size_t>(v)]) {
      const int w = other_end(e, v);
      if (covered[static_cast<std::size_t>(w)]) continue;
      covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(w)] = true;
      chosen.insert(e);
      run();
      chosen.erase(e);
      covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(w)] = false;
    }
  }
};

}  // namespace

void for_each_one_set(const Web& web,
                      const std::function<void(const EdgeSubset&)>& visit) {
  std::vector<int> circles;
  for (std::size_t i = 0; i < web.edge_count(); ++i)
    if (web.edges()[i].kind == EdgeKind::kCircle)
      circles.push_back(static_cast<int>(i));
  if (circles.size() >= 63)
    throw std::invalid_argument("too many free circles to enumerate");
  const std::function<void(const EdgeSubset&)> with_circles =
      [&](const EdgeSubset& matching) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << circles.size());
             ++mask) {
          EdgeSubset s = matching;
          for (std::size_t c = 0; c < circles.size(); ++c)
            if (mask >> c & 1u) s.insert(circles[c]);
          visit(s);
        }
      };
  MatchingSearch search{web, {}, std::vector<bool>(web.vertex_count(), false),
                        EdgeSubset(web.edge_count()), with_circles};
  search.incident.resize(web.vertex_count());
  // Loops are never eligible: they would contribute 2 at their vertex.
  for (std::size_t i = 0; i < web.edge_count(); ++i) {
    const auto& e = web.edges()[i];
    if (e.kind != EdgeKind::kRegular) continue;
    search.incident[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(i));
    search.incident[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(i));
  }
  search.run();
}

std::vector<EdgeSubset> enumerate_one_sets(const Web& web) {
  std::vector<EdgeSubset> out;
  for_each_one_set(web, [&](const EdgeSubset& s) { out.push_back(s); });
  return out;
}

CycleDecomposition complement_cycles(const Web& web, const EdgeSubset& s) {
  if (!is_one_set(web, s))
    throw std::invalid_argument("complement_cycles: subset is not a 1-set");
  CycleDecomposition out;
  const std::size_t n = web.vertex_count();
  // Complement incidences per vertex (two each, loops listed twice).
  std::vector<std::vector<int>> comp(n);
  for (std::size_t i = 0; i < web.edge_count(); ++i) {
    const auto& e = web.edges()[i];
    if (e.kind == EdgeKind::kCircle || s.contains(static_cast<int>(i))) continue;
    comp[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(i));
    comp[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(i));
  }
  std::vector<bool> seen_vertex(n, false);
  std::vector<bool> used_edge(web.edge_count(), false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen_vertex[start]) continue;
    CycleComponent c;
    int cur = static_cast<int>(start);
    seen_vertex[start] = true;
    c.vertices.push_back(cur);
    for (;;) {
      int next_edge = -1;
      for (int e : comp[static_cast<std::size_t>(cur)])
        if (!used_edge[static_cast<std::size_t>(e)]) {
          next_edge = e;
          break;
        }
      if (next_edge < 0) break;
      used_edge[static_cast<std::size_t>(next_edge)] = true;
      c.edges.push_back(next_edge);
      const auto& e = web.edges()[static_cast<std::size_t>(next_edge)];
      const int next = e.u == cur ? e.v : e.u;
      if (seen_vertex[static_cast<std::size_t>(next)]) {
        cur = next;
        continue;  // closing edge; the walk ends when no edge remains
      }
      seen_vertex[static_cast<std::size_t>(next)] = true;
      c.vertices.push_back(next);
      cur = next;
    }
    out.components.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < web.edge_count(); ++i) {
    const auto& e = web.edges()[i];
    if (e.kind != EdgeKind::kCircle || s.contains(static_cast<int>(i))) continue;
    CycleComponent c;
    c.free_circle = true;
    c.edges.push_back(static_cast<int>(i));
    out.components.push_back(std::move(c));
  }
  return out;
}

bool is_even(const Web& web, const EdgeSubset& s) {
  const CycleDecomposition cycles = complement_cycles(web, s);
  const std::vector<int> endpoints = incidence_counts(web, s);
  for (const auto& c : cycles.components) {
    int count = 0;
    for (int v : c.vertices) count += endpoints[static_cast<std::size_t>(v)];
    if (count % 2 != 0) return false;
  }
  return true;
}

namespace {

std::uint64_t pow3(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= 3;
  return r;
}

struct TaitSearch {
  std::vector<std::pair<int, int>> edges;  // regular edges only
  std::vector<unsigned> used;              // color mask per vertex
  std::vector<bool> colored;

  std::uint64_t run(std::size_t remaining) {
    if (remaining == 0) return 1;
    // Most constrained edge first.
    int best = -1;
    int best_used = -1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (colored[i]) continue;
      const unsigned mask = used[static_cast<std::size_t>(edges[i].first)] |
                            used[static_cast<std::size_t>(edges[i].second)];
      const int k = std::popcount(mask);
      if (k > best_used) {
        best = static_cast<int>(i);
        best_used = k;
        if (k == 3) break;
      }
    }
    const auto [u, v] = edges[static_cast<std::size_t>(best)];
    const unsigned options =
        ~(used[static_cast<std::size_t>(u)] | used[static_cast<std::size_t>(v)]) & 7u;
    std::uint64_t total = 0;
    colored[static_cast<std::size_t>(best)] = true;
    for (unsigned c = 1; c < 8; c <<= 1) {
      if (!(options & c)) continue;
      used[static_cast<std::size_t>(u)] |= c;
      used[static_cast<std::size_t>(v)] |= c;
      total += run(remaining - 1);
      used[static_cast<std::size_t>(u)] &= ~c;
      used[static_cast<std::size_t>(v)] &= ~c;
    }
    colored[static_cast<std::size_t>(best)] = false;
    return total;
  }
};

}  // namespace

std::uint64_t count_tait_backtracking(const Web& web) {
  TaitSearch search;
  for (const auto& e : web.edges()) {
    if (e.kind == EdgeKind::kLoop) return 0;  // both ends see one color
    if (e.kind == EdgeKind::kRegular) search.edges.emplace_back(e.u, e.v);
  }
  search.used.assign(web.vertex_count(), 0);
  search.colored.assign(search.edges.size(), false);
  return search.run(search.edges.size()) * pow3(web.circle_count());
}

std::uint64_t count_tait_matching_formula(const Web& web) {
  std::uint64_t total = 0;
  for_each_one_set(web, [&](const EdgeSubset& s) {
    if (!is_even(web, s)) return;
    total += std::uint64_t{1} << complement_cycles(web, s).count();
  });
  return total;
}

bool is_abstractly_planar(const Web& web) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(web.vertex_count());
  std::set<std::pair<int, int>> seen;
  for (const auto& e : web.edges()) {
    if (e.kind != EdgeKind::kRegular) continue;
    const auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) continue;
    boost::add_edge(static_cast<std::size_t>(key.first),
                    static_cast<std::size_t>(key.second), g);
  }
  return boost::boyer_myrvold_planarity_test(g);
}

RankPrediction predict_planar_rank(const Web& web) {
  RankPrediction p;
  p.rank = count_tait_matching_formula(web);
  p.declared_planar = web.declared_planar();
  p.abstractly_planar = is_abstractly_planar(web);
  if (!p.abstractly_planar)
    p.warning =
        "abstract graph is non-planar; the count is a heuristic with no "
        "rank theorem behind it";
  else if (!p.declared_planar)
    p.warning =
        "web not declared planar; the rank equals the count only for planar "
        "embeddings";
  return p;
}

Web disjoint_union(const Web& a, const Web& b) {
  Web out;
  out.set_name(a.name() + "+" + b.name());
  out.set_declared_planar(a.declared_planar() && b.declared_planar());
  auto append = [&out](const Web& w, const std::string& prefix) {
    const int base = static_cast<int>(out.vertex_count());
    for (const auto& v : w.vertices()) out.add_vertex(prefix + v);
    for (const auto& e : w.edges()) {
      switch (e.kind) {
        case EdgeKind::kRegular:
          out.add_edge(prefix + e.id, base + e.u, base + e.v);
          break;
        case EdgeKind::kLoop:
          out.add_loop(prefix + e.id, base + e.u);
          break;
        case EdgeKind::kCircle:
          out.add_circle(prefix + e.id);
          break;
      }
    }
  };
  append(a, "a.");
  append(b, "b.");
  return out;
}

Web unknot_web() {
  Web w;
  w.set_name("unknot");
  w.set_declared_planar(true);
  w.add_circle("e");
  return w;
}

Web theta_web() {
  Web w;
  w.set_name("theta");
  w.set_declared_planar(true);
  const int x = w.add_vertex("x");
  const int y = w.add_vertex("y");
  w.add_edge("e1", x, y);
  w.add_edge("e2", x, y);
  w.add_edge("e3", x, y);
  return w;
}

Web handcuffs_web() {
  Web w;
  w.set_name("handcuffs");
  w.set_declared_planar(true);
  const int x = w.add_vertex("x");
  const int y = w.add_vertex("y");
  w.add_edge("chain", x, y);
  w.add_loop("left", x);
  w.add_loop("right", y);
  return w;
}

Web generalized_petersen_web(int n, int k, std::string name, bool planar) {
  Web w;
  w.set_name(std::move(name));
  w.set_declared_planar(planar);
  for (int i = 0; i < n; ++i) w.add_vertex("u" + std::to_string(i));
  for (int i = 0; i < n; ++i) w.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    w.add_edge("outer" + std::to_string(i), i, (i + 1) % n);
    w.add_edge("spoke" + std::to_string(i), i, n + i);
    w.add_edge("inner" + std::to_string(i), n + i, n + (i + k) % n);
  }
  return w;
}

}  // namespace taitfoam
