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

// Runs every acceptance criterion once and prints one line per criterion.

#include <gtest/gtest.h>

#include <cstdio>

#include "taitfoam/acceptance.hpp"

namespace taitfoam {
namespace {

void report(const CriterionResult& r) {
  std::printf("%s %-20s %8.3fs (budget %.0fs) %s: %s\n",
              r.passed ? "PASS" : "FAIL", r.key.c_str(), r.seconds,
              r.budget_seconds, r.title.c_str(), r.detail.c_str());
  std::fflush(stdout);
  EXPECT_TRUE(r.within_budget) << r.key << " took " << r.seconds << " s";
  EXPECT_TRUE(r.passed) << r.key << ": " << r.detail;
}

AcceptanceOptions options() {
  AcceptanceOptions o;
  o.corpus_dir = default_corpus_dir();
  return o;
}

TEST(Acceptance, C1TaitIdentity) { report(run_tait_identity(options())); }
TEST(Acceptance, C2FoamTable) { report(run_foam_table()); }
TEST(Acceptance, C3UnknotModel) { report(run_unknot_model()); }
TEST(Acceptance, C4ThetaModel) { report(run_theta_model()); }
TEST(Acceptance, C5OrderFour) { report(run_order_four()); }
TEST(Acceptance, C6HandcuffsPair) { report(run_handcuffs_pair()); }
TEST(Acceptance, C7UctSuite) { report(run_uct_suite(options())); }
TEST(Acceptance, C8ConeOfP) { report(run_cone_of_p()); }

}  // namespace
}  // namespace taitfoam

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
