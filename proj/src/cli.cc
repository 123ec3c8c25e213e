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

#include "taitfoam/cli.hpp"

#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "taitfoam/acceptance.hpp"
#include "taitfoam/foam.hpp"
#include "taitfoam/homological.hpp"
#include "taitfoam/operators.hpp"
#include "taitfoam/web.hpp"

namespace taitfoam {

namespace {

using nlohmann::json;

struct Flags {
  bool json = false;
  std::string direction;
  std::uint64_t seed = 1;
  std::string corpus;
  std::string file;
  unsigned sphere_dots = 0;
  std::vector<unsigned> theta_dots;
  bool show = false;
  bool check = false;
  bool decompose = false;
};

std::string set_label(const std::vector<std::string>& edges) {
  std::string s = "{";
  for (std::size_t i = 0; i < edges.size(); ++i)
    s += (i ? "," : "") + edges[i];
  return s + "}";
}

json matrix_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(std::ostream& out, const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? ", " : "") << m(i, j).to_string();
    out << "]\n";
  }
}

std::vector<Direction> directions(const Flags& f) {
  if (f.direction.empty()) return {Direction::kOneOneOne, Direction::kOneOneZero};
  return {*parse_direction(f.direction)};
}

Web load_checked_web(const std::string& path) {
  Web w = load_web(path);
  validate(w);
  return w;
}

int cmd_foam(const Flags& f, bool sphere, std::ostream& out) {
  LaurentPoly v;
  json doc;
  if (sphere) {
    v = eval_sphere(f.sphere_dots);
    doc["foam"] = "sphere";
    doc["dots"] = {f.sphere_dots};
  } else {
    v = eval_theta(f.theta_dots[0], f.theta_dots[1], f.theta_dots[2]);
    doc["foam"] = "theta";
    doc["dots"] = f.theta_dots;
  }
  if (f.json) {
    doc["evaluation"] = v.to_string();
    out << doc.dump() << "\n";
  } else {
    out << v.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_web_info(const Flags& f, std::ostream& out) {
  const Web w = load_checked_web(f.file);
  const auto sets = enumerate_one_sets(w);
  const bool planar = is_abstractly_planar(w);
  json doc;
  doc["name"] = w.name();
  doc["vertices"] = w.vertex_count();
  doc["edges"] = w.edge_count();
  doc["circles"] = w.circle_count();
  doc["declared_planar"] = w.declared_planar();
  doc["abstractly_planar"] = planar;
  json js = json::array();
  for (const auto& s : sets)
    js.push_back({{"edges", edge_ids(w, s)},
                  {"even", is_even(w, s)},
                  {"components", complement_cycles(w, s).count()}});
  doc["one_sets"] = std::move(js);
  if (f.json) {
    out << doc.dump() << "\n";
    return kExitOk;
  }
  out << "name: " << w.name() << "\n"
      << "vertices: " << w.vertex_count() << "\n"
      << "edges: " << w.edge_count() << " (free circles " << w.circle_count()
      << ")\n"
      << "declared planar: " << (w.declared_planar() ? "yes" : "no") << "\n"
      << "abstractly planar: " << (planar ? "yes" : "no") << "\n"
      << "1-sets: " << sets.size() << "\n";
  for (const auto& s : sets)
    out << "  " << set_label(edge_ids(w, s)) << " "
        << (is_even(w, s) ? "even" : "odd")
        << " n(s)=" << complement_cycles(w, s).count() << "\n";
  return kExitOk;
}

int cmd_web_tait(const Flags& f, std::ostream& out, std::ostream& err) {
  const Web w = load_checked_web(f.file);
  const std::uint64_t direct = count_tait_backtracking(w);
  const std::uint64_t formula = count_tait_matching_formula(w);
  if (f.json)
    out << json{{"name", w.name()},
                {"backtracking", direct},
                {"matching_formula", formula},
                {"agree", direct == formula}}
               .dump()
        << "\n";
  else
    out << direct << "\n";
  if (direct != formula) {
    err << "error: backtracking count " << direct
        << " differs from matching formula " << formula << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_web_predict(const Flags& f, std::ostream& out, std::ostream& err) {
  const Web w = load_checked_web(f.file);
  const RankPrediction p = predict_planar_rank(w);
  if (f.json) {
    out << json{{"name", w.name()},
                {"rank", p.rank},
                {"abstractly_planar", p.abstractly_planar},
                {"declared_planar", p.declared_planar},
                {"warning", p.warning}}
               .dump()
        << "\n";
  } else {
    out << p.rank << "\n";
    if (!p.warning.empty()) err << "warning: " << p.warning << "\n";
  }
  return kExitOk;
}

void report_checks(const RelationReport& r, json& arr, std::ostream* text) {
  for (const auto& e : r.entries) {
    arr.push_back({{"name", e.name}, {"passed", e.passed}});
    if (text) *text << (e.passed ? "PASS " : "FAIL ") << e.name << "\n";
  }
}

int cmd_ops(const Flags& f, bool theta, std::ostream& out) {
  const OperatorModule m = theta ? theta_module() : unknot_module();
  const bool show = f.show || (!f.check && !f.decompose);
  std::ostream* text = f.json ? nullptr : &out;
  json doc;
  doc["module"] = m.name;
  doc["basis"] = m.basis;
  bool ok = true;
  if (show) {
    json ops = json::object();
    if (text) {
      out << "module " << m.name << ", rank " << m.rank() << ", basis";
      for (const auto& b : m.basis) out << " " << b;
      out << "\n";
    }
    for (const auto& id : m.edge_ids()) {
      ops[id] = matrix_json(m.op(id));
      if (text) {
        out << "u_" << id << ":\n";
        print_matrix(out, m.op(id));
      }
    }
    doc["operators"] = std::move(ops);
  }
  if (f.check) {
    json checks = json::array();
    const RelationReport rel = check_module_relations(m);
    ok = ok && rel.all_passed();
    report_checks(rel, checks, text);
    for (const auto& v : m.vertices) {
      const RelationReport vr = check_vertex_relations(m, v);
      ok = ok && vr.all_passed();
      report_checks(vr, checks, text);
    }
    doc["checks"] = std::move(checks);
  }
  if (f.decompose) {
    const EdgeDecomposition d = edge_decomposition(m);
    json summands = json::array();
    for (const auto& s : d.summands) {
      summands.push_back({{"edges", s.edges}, {"rank", s.rank}});
      if (text)
        out << "V" << set_label(s.edges) << ": rank " << s.rank << "\n";
    }
    if (text) out << "total rank: " << d.total_rank() << "\n";
    json checks = json::array();
    report_checks(d.image_checks, checks, text);
    report_checks(d.projection_checks, checks, text);
    ok = ok && d.image_checks.all_passed() &&
         d.projection_checks.all_passed() && d.total_rank() == m.rank();
    doc["decomposition"] = {{"summands", std::move(summands)},
                            {"total_rank", d.total_rank()},
                            {"checks", std::move(checks)}};
  }
  if (f.json) {
    doc["passed"] = ok;
    out << doc.dump() << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

std::string torsion_label(const std::vector<unsigned>& exps) {
  std::string s = "{";
  for (std::size_t i = 0; i < exps.size(); ++i)
    s += (i ? "," : "") + std::to_string(exps[i]);
  return s + "}";
}

// Runs the Bockstein analysis in the requested directions and appends the
// reports; returns false if the rank inequality fails.
bool analyze_into(const DifferentialModule& c, const Flags& f, json& doc,
                  std::ostream* text) {
  std::mt19937_64 rng(f.seed);
  bool ok = true;
  json reports = json::array();
  for (Direction dir : directions(f)) {
    const SpecializationReport r = bockstein_analysis(c, dir, rng);
    ok = ok && r.f2_dim >= r.frac_rank;
    reports.push_back(json::parse(report_to_json(r)));
    if (text)
      *text << "direction " << direction_name(dir) << ": frac_rank "
            << r.frac_rank << ", f2_dim " << r.f2_dim << ", r " << r.free_rank
            << ", l " << r.torsion_count << ", torsion "
            << torsion_label(r.torsion_exponents) << "\n";
  }
  doc["rank"] = c.rank();
  doc["reports"] = std::move(reports);
  return ok;
}

int cmd_complex(const Flags& f, const std::string& which, std::ostream& out) {
  std::ostream* text = f.json ? nullptr : &out;
  json doc;
  bool ok = true;
  if (which == "certify-order4") {
    json facts = json::array();
    for (const auto& fact : order_four_certificate()) {
      ok = ok && fact.passed;
      facts.push_back({{"name", fact.name},
                       {"detail", fact.detail},
                       {"passed", fact.passed}});
      if (text)
        out << (fact.passed ? "PASS " : "FAIL ") << fact.name << ": "
            << fact.detail << "\n";
    }
    doc["facts"] = std::move(facts);
  } else if (which == "handcuffs-linked") {
    const HandcuffsModel m = linked_handcuffs_model();
    doc["map"] = matrix_json(m.map);
    doc["kernel_rank"] = m.kernel_rank;
    doc["cokernel_rank"] = m.cokernel_rank;
    if (text) {
      out << "u_e^2 + P:\n";
      print_matrix(out, m.map);
      out << "kernel rank " << m.kernel_rank << ", cokernel rank "
          << m.cokernel_rank << "\n";
    }
    ok = analyze_into(m.complex, f, doc, text);
  } else {
    const DifferentialModule c =
        which == "cone-p" ? cone_of_p() : load_complex(f.file);
    ok = analyze_into(c, f, doc, text);
  }
  if (f.json) {
    doc["passed"] = ok;
    out << doc.dump() << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify_all(const Flags& f, std::ostream& out) {
  AcceptanceOptions options;
  options.corpus_dir = f.corpus;
  options.seed = f.seed;
  const auto results = run_acceptance(options);
  bool ok = true;
  json rows = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (f.json) {
      rows.push_back({{"key", r.key},
                      {"title", r.title},
                      {"passed", r.passed},
                      {"seconds", r.seconds},
                      {"budget_seconds", r.budget_seconds},
                      {"detail", r.detail}});
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(20)
          << r.key << " " << std::right << std::fixed << std::setprecision(2)
          << std::setw(7) << r.seconds << "s / " << std::setprecision(0)
          << r.budget_seconds << "s  " << r.title << ": " << r.detail << "\n";
    }
  }
  if (f.json)
    out << json{{"criteria", std::move(rows)}, {"passed", ok}}.dump() << "\n";
  else
    out << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact algebra of deformed instanton homology for webs",
               "taitfoam"};
  app.require_subcommand(1, 1);
  Flags f;
  std::function<int()> action;

  auto add_json = [&f](CLI::App* c) {
    c->add_flag("--json", f.json, "Machine-readable output");
  };
  auto add_direction = [&f](CLI::App* c) {
    c->add_option("--direction", f.direction,
                  "Substitution line T_i = 1 + c_i t")
        ->check(CLI::IsMember({"1,1,1", "1,1,0"}));
  };
  auto add_seed = [&f](CLI::App* c) {
    c->add_option("--seed", f.seed, "Seed for randomized rank checks");
  };

  CLI::App* foam = app.add_subcommand("foam", "Evaluate closed dotted foams");
  foam->require_subcommand(1, 1);
  CLI::App* sphere = foam->add_subcommand("sphere", "Dotted sphere S(m)");
  sphere->add_option("m", f.sphere_dots, "Number of dots")
      ->required()
      ->check(CLI::Range(0u, 64u));
  add_json(sphere);
  sphere->callback([&] { action = [&] { return cmd_foam(f, true, out); }; });
  CLI::App* theta = foam->add_subcommand("theta", "Dotted theta foam");
  theta->add_option("dots", f.theta_dots, "Dots m1 m2 m3 on the three disks")
      ->required()
      ->expected(3)
      ->check(CLI::Range(0u, 64u));
  add_json(theta);
  theta->callback([&] { action = [&] { return cmd_foam(f, false, out); }; });

  CLI::App* web = app.add_subcommand("web", "Combinatorics of webs");
  web->require_subcommand(1, 1);
  for (const char* name : {"info", "tait", "predict-rank"}) {
    CLI::App* c = web->add_subcommand(name);
    c->add_option("file", f.file, "Web JSON file")->required();
    add_json(c);
    const std::string which = name;
    c->callback([&, which] {
      action = [&, which] {
        if (which == "info") return cmd_web_info(f, out);
        if (which == "tait") return cmd_web_tait(f, out, err);
        return cmd_web_predict(f, out, err);
      };
    });
  }
  web->get_subcommand("info")->description("1-sets, evenness and planarity");
  web->get_subcommand("tait")->description("Number of Tait colorings");
  web->get_subcommand("predict-rank")
      ->description("Rank predicted by the planar matching formula");

  CLI::App* ops = app.add_subcommand("ops", "Edge operator modules");
  ops->require_subcommand(1, 1);
  for (const char* name : {"unknot", "theta"}) {
    CLI::App* c = ops->add_subcommand(name);
    c->add_flag("--show", f.show, "Print the operator matrices");
    c->add_flag("--check", f.check, "Verify the module relations");
    c->add_flag("--decompose", f.decompose, "Compute the edge decomposition");
    add_json(c);
    const bool is_theta = std::string(name) == "theta";
    c->callback([&, is_theta] {
      action = [&, is_theta] { return cmd_ops(f, is_theta, out); };
    });
  }
  ops->get_subcommand("unknot")->description("Rank-3 unknot module");
  ops->get_subcommand("theta")->description("Rank-6 theta module");

  CLI::App* cx = app.add_subcommand("complex", "Differential modules over R");
  cx->require_subcommand(1, 1);
  for (const char* name :
       {"analyze", "cone-p", "handcuffs-linked", "certify-order4"}) {
    CLI::App* c = cx->add_subcommand(name);
    if (std::string(name) == "analyze")
      c->add_option("file", f.file, "Complex JSON file")->required();
    if (std::string(name) != "certify-order4") {
      add_direction(c);
      add_seed(c);
    }
    add_json(c);
    const std::string which = name;
    c->callback([&, which] {
      action = [&, which] { return cmd_complex(f, which, out); };
    });
  }
  cx->get_subcommand("analyze")->description("Rank and torsion analysis");
  cx->get_subcommand("cone-p")->description("Cone of P on R^2");
  cx->get_subcommand("handcuffs-linked")
      ->description("Cone of u^2 + P on the unknot module");
  cx->get_subcommand("certify-order4")
      ->description("Order of vanishing of P at (1,1,1)");

  CLI::App* verify =
      app.add_subcommand("verify-all", "Run every acceptance criterion");
  verify->add_option("--corpus", f.corpus, "Corpus directory");
  add_seed(verify);
  add_json(verify);
  verify->callback([&] { action = [&] { return cmd_verify_all(f, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const TrivalenceError& e) {
    err << "trivalence error: " << e.what() << "\n";
    return kExitTrivalence;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const WebFormatError& e) {
    err << "malformed web: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const NotSquareZeroError& e) {
    err << "malformed complex: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const ConsistencyError& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace taitfoam
