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

#ifndef TAITFOAM_ACCEPTANCE_HPP_
#define TAITFOAM_ACCEPTANCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace taitfoam {

struct AcceptanceOptions {
  std::string corpus_dir;
  std::uint64_t seed = 1;
  std::size_t random_modules = 200;
  int max_cubic_vertices = 10;
};

struct CriterionResult {
  std::string key;  // stable sort key, e.g. "c1-tait-identity"
  std::string title;
  bool passed = false;  // the check held and ran within budget
  bool within_budget = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
};

// Directory of the shipped corpus, fixed at build time.
std::string default_corpus_dir();

// One result per criterion, sorted by key. Never throws: exceptions
// inside a criterion become failures carrying the message.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

CriterionResult run_tait_identity(const AcceptanceOptions& options);
CriterionResult run_foam_table();
CriterionResult run_unknot_model();
CriterionResult run_theta_model();
CriterionResult run_order_four();
CriterionResult run_handcuffs_pair();
CriterionResult run_uct_suite(const AcceptanceOptions& options);
CriterionResult run_cone_of_p();

}  // namespace taitfoam

#endif  // TAITFOAM_ACCEPTANCE_HPP_
