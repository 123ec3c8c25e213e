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

// Isomorphism-free generation of connected cubic multigraphs.
//
// Every connected cubic multigraph on n >= 4 vertices reduces to one on
// n - 2 vertices, either by deleting a pendant looped vertex or by deleting
// a cycle edge and suppressing its two endpoints. The inverse operations
// (join two subdivision points by a new edge; hang a looped vertex off a
// subdivision point) therefore generate everything from the theta graph
// and the handcuffs. Duplicates are removed with a canonical form computed
// by partition refinement plus individualization.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "taitfoam/web.hpp"

namespace taitfoam {
namespace {

struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u == v is a loop
};

using Code = std::vector<std::uint8_t>;
using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

class Canonizer {
 public:
  explicit Canonizer(const Multigraph& g)
      : n_(g.n),
        mult_(static_cast<std::size_t>(g.n * g.n), 0),
        loops_(static_cast<std::size_t>(g.n), 0) {
    for (auto [u, v] : g.edges) {
      if (u == v) {
        ++loops_[static_cast<std::size_t>(u)];
      } else {
        ++mult_[static_cast<std::size_t>(u * n_ + v)];
        ++mult_[static_cast<std::size_t>(v * n_ + u)];
      }
    }
  }

  Code canonical_code() {
    Partition p{Cell{}};
    for (int v = 0; v < n_; ++v) p[0].push_back(v);
    best_.clear();
    search(std::move(p));
    return best_;
  }

 private:
  int mult(int u, int v) const { return mult_[static_cast<std::size_t>(u * n_ + v)]; }

  std::vector<int> signature(int v, const Partition& p) const {
    std::vector<int> sig{loops_[static_cast<std::size_t>(v)]};
    for (const auto& cell : p) {
      int by_mult[4] = {0, 0, 0, 0};
      for (int w : cell)
        if (w != v) ++by_mult[mult(v, w)];
      sig.insert(sig.end(), by_mult + 1, by_mult + 4);
    }
    return sig;
  }

  void refine(Partition& p) const {
    for (bool changed = true; changed;) {
      changed = false;
      Partition next;
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        for (int v : cell) keyed.emplace_back(signature(v, p), v);
        std::sort(keyed.begin(), keyed.end());
        Cell current{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(current));
            current.clear();
            changed = true;
          }
          current.push_back(keyed[i].second);
        }
        next.push_back(std::move(current));
      }
      p = std::move(next);
    }
  }

  void search(Partition p) {
    refine(p);
    auto target = std::find_if(p.begin(), p.end(),
                               [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      Code code = encode(p);
      if (best_.empty() || code < best_) best_ = std::move(code);
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(target - p.begin());
    for (int v : p[idx]) {
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != idx) {
          child.push_back(p[i]);
          continue;
        }
        child.push_back(Cell{v});
        Cell rest;
        for (int w : p[i])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  Code encode(const Partition& p) const {
    std::vector<int> order;
    for (const auto& c : p) order.push_back(c[0]);
    Code code;
    code.push_back(static_cast<std::uint8_t>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) {
        const int u = order[static_cast<std::size_t>(i)];
        const int v = order[static_cast<std::size_t>(j)];
        code.push_back(static_cast<std::uint8_t>(
            i == j ? loops_[static_cast<std::size_t>(u)] : mult(u, v)));
      }
    return code;
  }

  int n_;
  std::vector<int> mult_;
  std::vector<int> loops_;
  Code best_;
};

// Replaces edge index e by a path through the new vertex x.
void subdivide(Multigraph& g, std::size_t e, int x) {
  const auto [a, b] = g.edges[e];
  g.edges[e] = {a, x};
  g.edges.emplace_back(x, b);
}

Multigraph join_edges(const Multigraph& g, std::size_t i, std::size_t j) {
  Multigraph h = g;
  const int x = g.n;
  const int y = g.n + 1;
  h.n = g.n + 2;
  subdivide(h, i, x);
  if (i == j) {
    // x now sits on (a, x), (x, b); put y between x and b.
    subdivide(h, h.edges.size() - 1, y);
  } else {
    subdivide(h, j, y);
  }
  h.edges.emplace_back(x, y);
  return h;
}

Multigraph hang_loop(const Multigraph& g, std::size_t i) {
  Multigraph h = g;
  const int x = g.n;
  const int y = g.n + 1;
  h.n = g.n + 2;
  subdivide(h, i, x);
  h.edges.emplace_back(x, y);
  h.edges.emplace_back(y, y);
  return h;
}

Web to_web(const Multigraph& g, int index) {
  Web w;
  w.set_name("cubic" + std::to_string(g.n) + "_" + std::to_string(index));
  for (int v = 0; v < g.n; ++v) w.add_vertex("v" + std::to_string(v));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    if (u == v)
      w.add_loop("e" + std::to_string(e), u);
    else
      w.add_edge("e" + std::to_string(e), u, v);
  }
  w.set_declared_planar(is_abstractly_planar(w));
  return w;
}

}  // namespace

std::vector<Web> connected_cubic_multigraphs(int vertices) {
  if (vertices < 2 || vertices % 2 != 0)
    throw std::invalid_argument("cubic graphs need an even vertex count >= 2");
  std::map<Code, Multigraph> level;
  Multigraph theta{2, {{0, 1}, {0, 1}, {0, 1}}};
  Multigraph cuffs{2, {{0, 1}, {0, 0}, {1, 1}}};
  level.emplace(Canonizer(theta).canonical_code(), theta);
  level.emplace(Canonizer(cuffs).canonical_code(), cuffs);
  for (int n = 4; n <= vertices; n += 2) {
    std::map<Code, Multigraph> next;
    auto add = [&next](Multigraph h) {
      Code code = Canonizer(h).canonical_code();
      next.emplace(std::move(code), std::move(h));
    };
    for (const auto& [code, g] : level) {
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        for (std::size_t j = i; j < g.edges.size(); ++j) add(join_edges(g, i, j));
        add(hang_loop(g, i));
      }
    }
    level = std::move(next);
  }
  std::vector<Web> out;
  int index = 0;
  for (const auto& [code, g] : level) out.push_back(to_web(g, index++));
  return out;
}

}  // namespace taitfoam
