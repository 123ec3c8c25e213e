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

#include "taitfoam/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "taitfoam/foam.hpp"
#include "taitfoam/homological.hpp"
#include "taitfoam/operators.hpp"
#include "taitfoam/web.hpp"

#ifndef TAITFOAM_CORPUS_DIR
#define TAITFOAM_CORPUS_DIR "corpus"
#endif

namespace taitfoam {

std::string default_corpus_dir() { return TAITFOAM_CORPUS_DIR; }

namespace {

// Runs body, which fills passed/detail, and stamps timing and budget.
CriterionResult timed(std::string key, std::string title, double budget,
                      const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.key = std::move(key);
  r.title = std::move(title);
  r.budget_seconds = budget;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  r.within_budget = r.seconds <= r.budget_seconds;
  if (!r.within_budget) {
    std::ostringstream os;
    os << "; over budget (" << r.seconds << " s > " << r.budget_seconds
       << " s)";
    r.detail += os.str();
  }
  r.passed = r.passed && r.within_budget;
  return r;
}

void note(std::string& detail, const std::string& text) {
  if (!detail.empty()) detail += "; ";
  detail += text;
}

}  // namespace

CriterionResult run_tait_identity(const AcceptanceOptions& options) {
  return timed("c1-tait-identity", "Tait count equals matching formula", 60,
               [&](CriterionResult& r) {
    namespace fs = std::filesystem;
    const fs::path dir =
        options.corpus_dir.empty() ? default_corpus_dir() : options.corpus_dir;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<Web> webs;
    for (const auto& f : files) webs.push_back(load_web(f.string()));
    if (webs.empty()) throw std::runtime_error("empty corpus " + dir.string());
    // Pairwise unions of the small corpus webs.
    const std::size_t corpus_size = webs.size();
    for (std::size_t i = 0; i < corpus_size; ++i)
      for (std::size_t j = i; j < corpus_size; ++j)
        if (webs[i].vertex_count() + webs[j].vertex_count() <= 8)
          webs.push_back(disjoint_union(webs[i], webs[j]));

    std::size_t generated = 0;
    for (int n = 2; n <= options.max_cubic_vertices; n += 2)
      for (auto& w : connected_cubic_multigraphs(n)) {
        webs.push_back(std::move(w));
        ++generated;
      }

    r.passed = true;
    std::map<std::string, std::uint64_t> named;
    for (const auto& w : webs) {
      validate(w);
      const std::uint64_t a = count_tait_backtracking(w);
      const std::uint64_t b = count_tait_matching_formula(w);
      named[w.name()] = a;
      if (a != b) {
        r.passed = false;
        note(r.detail, w.name() + ": backtracking " + std::to_string(a) +
                           " != formula " + std::to_string(b));
      }
    }
    auto expect = [&](const std::string& name, std::uint64_t value) {
      auto it = named.find(name);
      if (it == named.end()) {
        r.passed = false;
        note(r.detail, "corpus lacks " + name);
      } else if (it->second != value) {
        r.passed = false;
        note(r.detail, name + " = " + std::to_string(it->second) +
                           ", expected " + std::to_string(value));
      }
    };
    expect("dodecahedron", 60);
    expect("petersen", 0);
    note(r.detail, std::to_string(corpus_size) + " corpus webs, " +
                       std::to_string(webs.size() - corpus_size -
                                      generated) +
                       " unions, " + std::to_string(generated) +
                       " generated cubic multigraphs; dodecahedron " +
                       std::to_string(named["dodecahedron"]));
  });
}

CriterionResult run_foam_table() {
  return timed("c2-foam-table", "Sphere and theta foam evaluations", 5,
               [](CriterionResult& r) {
    const LaurentPoly p = LaurentPoly::distinguished();
    const LaurentPoly o = LaurentPoly::zero();
    const std::vector<LaurentPoly> sphere = {
        o, o, LaurentPoly::one(), o, p, o, p.pow(2), o, p.pow(3)};
    r.passed = true;
    for (unsigned m = 0; m < sphere.size(); ++m)
      if (eval_sphere(m) != sphere[m]) {
        r.passed = false;
        note(r.detail, "sphere " + std::to_string(m));
      }
    if (!eval_theta(0, 1, 2).is_one()) {
      r.passed = false;
      note(r.detail, "theta(0,1,2) != 1");
    }
    std::size_t checked = 0;
    for (unsigned a = 0; a <= 8; ++a)
      for (unsigned b = 0; b <= 8; ++b)
        for (unsigned c = 0; c <= 8; ++c) {
          const DotTriple m{a, b, c};
          const LaurentPoly v = eval_theta(m);
          const std::string at = "theta" + dots_label(m);
          DotTriple perm = m;
          std::sort(perm.begin(), perm.end());
          do {
            if (eval_theta(perm) != v) {
              r.passed = false;
              note(r.detail, at + " not symmetric");
            }
          } while (std::next_permutation(perm.begin(), perm.end()));
          const unsigned sum = a + b + c;
          if ((a > 0 && b > 0 && c > 0) || sum % 2 == 0 || sum < 3) {
            if (!v.is_zero()) {
              r.passed = false;
              note(r.detail, at + " should vanish");
            }
          }
          // The recursion must hold whichever entry is reduced.
          for (std::size_t i = 0; i < 3; ++i) {
            if (m[i] < 3) continue;
            DotTriple reduced = m;
            reduced[i] -= 2;
            if (v != p * eval_theta(reduced)) {
              r.passed = false;
              note(r.detail, at + " recursion on entry " + std::to_string(i));
            }
          }
          ++checked;
        }
    note(r.detail, "sphere 0..8 and " + std::to_string(checked) +
                       " theta triples checked");
  });
}

CriterionResult run_unknot_model() {
  return timed("c3-unknot-model", "Unknot operator model", 1,
               [](CriterionResult& r) {
    const OperatorModule m = unknot_module();
    const PolyMatrix& u = m.op("e");
    const bool cubic = check_module_relations(m).all_passed();
    const std::size_t im = fraction_rank(u);
    const std::size_t ker = u.cols() - im;
    const auto basis = kernel_basis(u);
    const std::vector<LaurentPoly> expected = {
        LaurentPoly::distinguished(), LaurentPoly::zero(), LaurentPoly::one()};
    const bool generator = basis.size() == 1 && proportional(basis[0], expected);
    r.passed = cubic && ker == 1 && im == 2 && generator;
    r.detail = std::string("u^3 + P u = 0: ") + (cubic ? "yes" : "no") +
               ", ker rank " + std::to_string(ker) + ", im rank " +
               std::to_string(im) + ", kernel generator " +
               (generator ? "proportional to (P,0,1)" : "WRONG");
  });
}

CriterionResult run_theta_model() {
  return timed("c4-theta-model", "Theta operator model and decomposition", 10,
               [](CriterionResult& r) {
    const OperatorModule m = theta_module();
    r.passed = check_module_relations(m).all_passed();
    if (!r.passed) note(r.detail, "cubic/commutation relations fail");
    for (const auto& v : m.vertices) {
      const RelationReport rep = check_vertex_relations(m, v);
      for (const auto& e : rep.entries)
        if (!e.passed) {
          r.passed = false;
          note(r.detail, e.name + " fails");
        }
    }
    const EdgeDecomposition d = edge_decomposition(m);
    if (!d.image_checks.all_passed() || !d.projection_checks.all_passed()) {
      r.passed = false;
      note(r.detail, "image or projection identities fail");
    }
    for (const auto& s : d.summands) {
      const std::size_t want = s.edges.size() == 1 ? 2 : 0;
      if (s.rank != want) {
        r.passed = false;
        std::string name = "{";
        for (const auto& e : s.edges) name += (name.size() > 1 ? "," : "") + e;
        note(r.detail, "V" + name + "} rank " + std::to_string(s.rank));
      }
    }
    if (d.total_rank() != 6) {
      r.passed = false;
      note(r.detail, "total rank " + std::to_string(d.total_rank()));
    }
    note(r.detail, "singletons rank 2, total " + std::to_string(d.total_rank()));
  });
}

CriterionResult run_order_four() {
  return timed("c5-order-four", "Order-four certificate for P", 1,
               [](CriterionResult& r) {
    r.passed = true;
    for (const auto& f : order_four_certificate()) {
      r.passed = r.passed && f.passed;
      note(r.detail, (f.passed ? "" : "FAILED ") + f.detail);
    }
  });
}

CriterionResult run_handcuffs_pair() {
  return timed("c6-handcuffs-pair", "Handcuffs 1-set and linked model", 5,
               [](CriterionResult& r) {
    const Web w = handcuffs_web();
    const auto sets = enumerate_one_sets(w);
    const bool single = sets.size() == 1 &&
                        edge_ids(w, sets[0]) ==
                            std::vector<std::string>{"chain"};
    const bool odd = single && !is_even(w, sets[0]);
    const std::uint64_t predicted = predict_planar_rank(w).rank;
    r.passed = single && odd && predicted == 0;
    note(r.detail, std::to_string(sets.size()) + " one-set(s)" +
                       (odd ? ", odd" : "") + ", prediction " +
                       std::to_string(predicted));

    const HandcuffsModel model = linked_handcuffs_model();
    if (model.kernel_rank != 2 || model.cokernel_rank != 2) {
      r.passed = false;
      note(r.detail, "ker/coker ranks " + std::to_string(model.kernel_rank) +
                         "/" + std::to_string(model.cokernel_rank));
    }
    for (Direction dir : {Direction::kOneOneOne, Direction::kOneOneZero}) {
      const SpecializationReport rep = bockstein_analysis(model.complex, dir);
      const bool ok = rep.frac_rank == 4 && rep.free_rank == 4 &&
                      rep.torsion_exponents.empty() && rep.f2_dim == 4;
      r.passed = r.passed && ok;
      note(r.detail, "direction " + direction_name(dir) + ": r=" +
                         std::to_string(rep.free_rank) + " l=" +
                         std::to_string(rep.torsion_count) + " f2_dim=" +
                         std::to_string(rep.f2_dim));
    }
  });
}

CriterionResult run_uct_suite(const AcceptanceOptions& options) {
  return timed("c7-uct-suite", "Rank inequality and universal coefficients",
               120, [&](CriterionResult& r) {
    std::size_t failures = 0;
    std::size_t exact_runs = 0;
    std::size_t torsion_modules = 0;
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.random_modules; ++i) {
      const std::uint64_t seed = options.seed * 1000003u + i;
      const std::size_t size = 2 + i % 11;
      try {
        const DifferentialModule c = random_complex(seed, size);
        exact_runs += fraction_rank(c.differential(), rng).exact ? 1 : 0;
        for (Direction dir : {Direction::kOneOneOne, Direction::kOneOneZero}) {
          const SpecializationReport rep = bockstein_analysis(c, dir, rng);
          bool ok = rep.f2_dim >= rep.frac_rank &&
                    rep.f2_dim == rep.free_rank + 2 * rep.torsion_count &&
                    rep.free_rank == rep.frac_rank;
          if (dir == Direction::kOneOneOne) {
            ok = ok && (rep.f2_dim == rep.frac_rank) ==
                           rep.torsion_exponents.empty();
            torsion_modules += rep.torsion_exponents.empty() ? 0 : 1;
          }
          if (!ok) {
            ++failures;
            note(r.detail, "seed " + std::to_string(seed) + " direction " +
                               direction_name(dir) + ": " +
                               report_to_json(rep));
          }
        }
      } catch (const ConsistencyError& e) {
        ++failures;
        note(r.detail, "seed " + std::to_string(seed) + ": " + e.what());
      }
    }
    r.passed = failures == 0;
    note(r.detail, std::to_string(options.random_modules) + " modules, " +
                       std::to_string(failures) + " failures, " +
                       std::to_string(exact_runs) +
                       " exact/randomized rank cross-checks, " +
                       std::to_string(torsion_modules) + " with torsion");
  });
}

CriterionResult run_cone_of_p() {
  return timed("c8-cone-of-p", "Cone of multiplication by P", 1,
               [](CriterionResult& r) {
    const SpecializationReport rep =
        bockstein_analysis(cone_of_p(), Direction::kOneOneOne);
    r.passed = rep.frac_rank == 0 && rep.f2_dim == 4 &&
               rep.torsion_exponents == std::vector<unsigned>{4, 4};
    r.detail = report_to_json(rep);
  });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out = {
      run_tait_identity(options), run_foam_table(),     run_unknot_model(),
      run_theta_model(),          run_order_four(),     run_handcuffs_pair(),
      run_uct_suite(options),     run_cone_of_p()};
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.key < b.key; });
  return out;
}

}  // namespace taitfoam
