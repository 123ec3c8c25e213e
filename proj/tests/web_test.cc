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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace taitfoam {
namespace {

const std::string kCorpus = TAITFOAM_CORPUS_DIR;

Web corpus(const std::string& name) {
  return load_web(kCorpus + "/" + name + ".json");
}

// Tries all 3^E colorings.
std::uint64_t brute_force_tait(const Web& w) {
  const std::size_t e = w.edge_count();
  std::vector<int> color(e, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t v = 0; v < w.vertex_count() && ok; ++v) {
      int seen = 0;
      for (int edge : w.incidence(static_cast<int>(v))) {
        const int bit = 1 << color[static_cast<std::size_t>(edge)];
        if (seen & bit) ok = false;
        seen |= bit;
      }
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < e && color[k] == 2) color[k++] = 0;
    if (k == e) break;
    ++color[k];
  }
  return count;
}

std::set<std::vector<int>> brute_force_one_sets(const Web& w) {
  std::set<std::vector<int>> out;
  const std::size_t e = w.edge_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    EdgeSubset s(e);
    for (std::size_t k = 0; k < e; ++k)
      if (mask >> k & 1u) s.insert(static_cast<int>(k));
    if (is_one_set(w, s)) out.insert(s.members());
  }
  return out;
}

// Components of the complement by union-find: (vertex count per cycle,
// number of free circles in the complement).
std::pair<std::vector<int>, int> complement_shape(const Web& w,
                                                  const EdgeSubset& s) {
  std::vector<int> parent(w.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x
               ? x
               : parent[static_cast<std::size_t>(x)] =
                     find(parent[static_cast<std::size_t>(x)]);
  };
  int circles = 0;
  for (std::size_t k = 0; k < w.edge_count(); ++k) {
    if (s.contains(static_cast<int>(k))) continue;
    const WebEdge& e = w.edges()[k];
    if (e.kind == EdgeKind::kCircle)
      ++circles;
    else
      parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  }
  std::map<int, int> sizes;
  for (std::size_t v = 0; v < w.vertex_count(); ++v)
    ++sizes[find(static_cast<int>(v))];
  std::vector<int> out;
  for (const auto& [root, n] : sizes) out.push_back(n);
  return {out, circles};
}

Web k33() {
  Web w;
  w.set_name("k33");
  for (int i = 0; i < 6; ++i) w.add_vertex("v" + std::to_string(i));
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b)
      w.add_edge("e" + std::to_string(a) + std::to_string(b), a, b);
  return w;
}

// Canonical form by trying every vertex relabelling.
std::vector<std::pair<int, int>> brute_canonical(const Web& w) {
  std::vector<int> perm(w.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  do {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : w.edges()) {
      int a = perm[static_cast<std::size_t>(e.u)];
      int b = perm[static_cast<std::size_t>(e.v)];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    if (best.empty() || edges < best) best = edges;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TEST(WebCorpus, LoadsAndValidates) {
  for (const char* name : {"unknot", "theta", "handcuffs", "k4", "cube",
                           "petersen", "dodecahedron", "two_theta"}) {
    const Web w = corpus(name);
    EXPECT_NO_THROW(validate(w)) << name;
    EXPECT_EQ(w.name(), name);
  }
}

TEST(TaitCount, KnownValues) {
  EXPECT_EQ(count_tait_backtracking(corpus("dodecahedron")), 60u);
  EXPECT_EQ(count_tait_backtracking(corpus("petersen")), 0u);
  EXPECT_EQ(count_tait_backtracking(corpus("theta")), 6u);
  EXPECT_EQ(count_tait_backtracking(corpus("unknot")), 3u);
  EXPECT_EQ(count_tait_backtracking(corpus("handcuffs")), 0u);
  EXPECT_EQ(count_tait_backtracking(corpus("k4")), 6u);
  EXPECT_EQ(count_tait_backtracking(corpus("two_theta")), 36u);
}

TEST(TaitCount, BacktrackingMatchesBruteForce) {
  for (const char* name : {"unknot", "theta", "handcuffs", "k4", "cube",
                           "two_theta"}) {
    const Web w = corpus(name);
    EXPECT_EQ(count_tait_backtracking(w), brute_force_tait(w)) << name;
  }
  for (int n = 2; n <= 6; n += 2)
    for (const Web& w : connected_cubic_multigraphs(n))
      EXPECT_EQ(count_tait_backtracking(w), brute_force_tait(w)) << w.name();
}

TEST(TaitCount, MatchingFormulaOnCorpus) {
  for (const char* name : {"unknot", "theta", "handcuffs", "k4", "cube",
                           "petersen", "dodecahedron", "two_theta"}) {
    const Web w = corpus(name);
    EXPECT_EQ(count_tait_matching_formula(w), count_tait_backtracking(w))
        << name;
  }
  EXPECT_EQ(count_tait_matching_formula(corpus("dodecahedron")), 60u);
  EXPECT_EQ(count_tait_matching_formula(corpus("petersen")), 0u);
}

TEST(TaitCount, MultiplicativeUnderDisjointUnion) {
  const Web k4 = corpus("k4");
  const Web cube = corpus("cube");
  const Web both = disjoint_union(k4, cube);
  EXPECT_EQ(count_tait_backtracking(both),
            count_tait_backtracking(k4) * count_tait_backtracking(cube));
  EXPECT_EQ(count_tait_matching_formula(both), count_tait_backtracking(both));
}

TEST(OneSets, EnumerationMatchesExhaustiveSearch) {
  for (const char* name : {"unknot", "theta", "handcuffs", "k4", "cube",
                           "petersen", "two_theta"}) {
    const Web w = corpus(name);
    std::set<std::vector<int>> found;
    for (const auto& s : enumerate_one_sets(w)) {
      EXPECT_TRUE(is_one_set(w, s));
      EXPECT_TRUE(found.insert(s.members()).second) << "duplicate";
    }
    EXPECT_EQ(found, brute_force_one_sets(w)) << name;
  }
}

TEST(OneSets, CountsOnSmallWebs) {
  EXPECT_EQ(enumerate_one_sets(corpus("theta")).size(), 3u);
  EXPECT_EQ(enumerate_one_sets(corpus("unknot")).size(), 2u);
  EXPECT_EQ(enumerate_one_sets(corpus("k4")).size(), 3u);
  EXPECT_EQ(enumerate_one_sets(corpus("petersen")).size(), 6u);
  const Web cuffs = corpus("handcuffs");
  const auto sets = enumerate_one_sets(cuffs);
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(edge_ids(cuffs, sets[0]), std::vector<std::string>{"chain"});
  EXPECT_FALSE(is_even(cuffs, sets[0]));
}

TEST(ComplementCycles, MatchUnionFindOracle) {
  for (const char* name : {"unknot", "theta", "k4", "cube", "petersen",
                           "dodecahedron", "two_theta", "handcuffs"}) {
    const Web w = corpus(name);
    for (const auto& s : enumerate_one_sets(w)) {
      EXPECT_TRUE(is_two_set(w, [&] {
        EdgeSubset c(w.edge_count());
        for (std::size_t k = 0; k < w.edge_count(); ++k)
          if (!s.contains(static_cast<int>(k))) c.insert(static_cast<int>(k));
        return c;
      }()));
      const auto [sizes, circles] = complement_shape(w, s);
      const CycleDecomposition d = complement_cycles(w, s);
      EXPECT_EQ(d.count(), sizes.size() + static_cast<std::size_t>(circles));
      const bool even = std::all_of(sizes.begin(), sizes.end(),
                                    [](int n) { return n % 2 == 0; });
      EXPECT_EQ(is_even(w, s), even) << name;
    }
  }
}

TEST(ComplementCycles, RejectNonOneSets) {
  const Web w = corpus("theta");
  EXPECT_THROW(complement_cycles(w, EdgeSubset(3)), std::invalid_argument);
  EXPECT_THROW(is_even(w, EdgeSubset(3, {0, 1})), std::invalid_argument);
}

TEST(Planarity, AbstractTest) {
  EXPECT_TRUE(is_abstractly_planar(corpus("k4")));
  EXPECT_TRUE(is_abstractly_planar(corpus("cube")));
  EXPECT_TRUE(is_abstractly_planar(corpus("dodecahedron")));
  EXPECT_TRUE(is_abstractly_planar(corpus("handcuffs")));
  EXPECT_TRUE(is_abstractly_planar(corpus("unknot")));
  EXPECT_FALSE(is_abstractly_planar(corpus("petersen")));
  EXPECT_FALSE(is_abstractly_planar(k33()));
}

TEST(Planarity, PredictionWarnings) {
  const RankPrediction dodeca = predict_planar_rank(corpus("dodecahedron"));
  EXPECT_EQ(dodeca.rank, 60u);
  EXPECT_TRUE(dodeca.warning.empty());
  const RankPrediction petersen = predict_planar_rank(corpus("petersen"));
  EXPECT_EQ(petersen.rank, 0u);
  EXPECT_FALSE(petersen.abstractly_planar);
  EXPECT_FALSE(petersen.warning.empty());
  EXPECT_EQ(predict_planar_rank(corpus("handcuffs")).rank, 0u);
}

TEST(CubicGenerator, ClassCounts) {
  const std::map<int, std::size_t> expected = {
      {2, 2}, {4, 5}, {6, 17}, {8, 71}, {10, 388}};
  for (const auto& [n, count] : expected)
    EXPECT_EQ(connected_cubic_multigraphs(n).size(), count) << n;
}

TEST(CubicGenerator, GraphsAreCubicConnectedAndDistinct) {
  for (int n = 2; n <= 6; n += 2) {
    std::set<std::vector<std::pair<int, int>>> forms;
    for (const Web& w : connected_cubic_multigraphs(n)) {
      EXPECT_NO_THROW(validate(w));
      EXPECT_EQ(w.vertex_count(), static_cast<std::size_t>(n));
      const auto [sizes, circles] = complement_shape(w, EdgeSubset(w.edge_count()));
      EXPECT_EQ(sizes.size(), 1u) << w.name() << " is disconnected";
      EXPECT_TRUE(forms.insert(brute_canonical(w)).second)
          << w.name() << " duplicates an earlier graph";
    }
  }
}

TEST(WebJson, RoundTrip) {
  const Web w = corpus("handcuffs");
  const Web again = parse_web_json(web_to_json(w));
  EXPECT_EQ(web_to_json(again), web_to_json(w));
  EXPECT_EQ(again.edges()[1].kind, EdgeKind::kLoop);
}

TEST(WebJson, StrictErrors) {
  EXPECT_THROW(parse_web_json("{\"vertices\": [], \"edges\": [], \"x\": 1}"),
               WebFormatError);
  EXPECT_THROW(parse_web_json("{\"vertices\": [\"a\"], \"edges\": "
                              "[{\"id\": \"e\", \"loop\": \"a\", \"circle\": true}]}"),
               WebFormatError);
  EXPECT_THROW(parse_web_json("{\"vertices\": [\"a\"], \"edges\": "
                              "[{\"id\": \"e\", \"ends\": [\"a\", \"b\"]}]}"),
               WebFormatError);
  try {
    parse_web_json("{\"vertices\": [}");
    FAIL();
  } catch (const WebFormatError& e) {
    EXPECT_NE(std::string(e.what()).find("byte 15"), std::string::npos)
        << e.what();
  }
}

TEST(WebJson, TrivalenceViolationNamesVertex) {
  const Web w = parse_web_json(
      "{\"vertices\": [\"x\", \"y\"], \"edges\": [{\"id\": \"a\", \"ends\": "
      "[\"x\", \"y\"]}, {\"id\": \"b\", \"ends\": [\"x\", \"y\"]}]}");
  try {
    validate(w);
    FAIL();
  } catch (const TrivalenceError& e) {
    EXPECT_EQ(e.vertices(), (std::vector<std::string>{"x", "y"}));
    EXPECT_NE(std::string(e.what()).find("'x'"), std::string::npos);
  }
}

}  // namespace
}  // namespace taitfoam
