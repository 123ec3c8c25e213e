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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace taitfoam {
namespace {

const std::string kCorpus = TAITFOAM_CORPUS_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "taitfoam");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

TEST(Cli, FoamEvaluations) {
  EXPECT_EQ(invoke({"foam", "theta", "0", "1", "2"}).out, "1\n");
  EXPECT_EQ(invoke({"foam", "sphere", "4"}).out,
            "T1*T2*T3 + T1*T2^-1*T3^-1 + T1^-1*T2*T3^-1 + T1^-1*T2^-1*T3\n");
  const Outcome j = invoke({"foam", "theta", "0", "3", "2", "--json"});
  EXPECT_EQ(j.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(j.out)["evaluation"],
            "T1*T2*T3 + T1*T2^-1*T3^-1 + T1^-1*T2*T3^-1 + T1^-1*T2^-1*T3");
}

TEST(Cli, DotCapIsAUsageError) {
  EXPECT_EQ(invoke({"foam", "sphere", "65"}).code, kExitUsage);
  EXPECT_EQ(invoke({"foam", "theta", "0", "1"}).code, kExitUsage);
}

TEST(Cli, UnknownSubcommand) {
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"web", "color", "x.json"}).code, kExitUsage);
}

TEST(Cli, TaitCountOfDodecahedron) {
  const Outcome o = invoke({"web", "tait", kCorpus + "/dodecahedron.json"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "60\n");
}

TEST(Cli, WebInfoAndPrediction) {
  const Outcome info = invoke({"web", "info", kCorpus + "/handcuffs.json"});
  EXPECT_EQ(info.code, kExitOk);
  EXPECT_NE(info.out.find("1-sets: 1"), std::string::npos);
  EXPECT_NE(info.out.find("{chain} odd"), std::string::npos);
  const Outcome pet =
      invoke({"web", "predict-rank", kCorpus + "/petersen.json"});
  EXPECT_EQ(pet.code, kExitOk);
  EXPECT_EQ(pet.out, "0\n");
  EXPECT_NE(pet.err.find("warning"), std::string::npos);
  const Outcome j =
      invoke({"web", "info", kCorpus + "/theta.json", "--json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["one_sets"].size(), 3u);
}

TEST(Cli, FileErrorsHaveDistinctCodes) {
  EXPECT_EQ(invoke({"web", "tait", "/nonexistent/web.json"}).code, kExitIo);
  const std::string bad = temp_file("taitfoam_bad.json", "{\"vertices\": [");
  const Outcome malformed = invoke({"web", "tait", bad});
  EXPECT_EQ(malformed.code, kExitMalformedInput);
  EXPECT_NE(malformed.err.find("byte"), std::string::npos);
  const std::string bivalent = temp_file(
      "taitfoam_bivalent.json",
      "{\"vertices\": [\"p\", \"q\"], \"edges\": [{\"id\": \"a\", \"ends\": "
      "[\"p\", \"q\"]}, {\"id\": \"b\", \"ends\": [\"p\", \"q\"]}]}");
  const Outcome triv = invoke({"web", "info", bivalent});
  EXPECT_EQ(triv.code, kExitTrivalence);
  EXPECT_NE(triv.err.find("'p'"), std::string::npos);
  const std::string not_zero = temp_file(
      "taitfoam_nonzero.json", "{\"rank\": 1, \"differential\": [[\"1\"]]}");
  EXPECT_EQ(invoke({"complex", "analyze", not_zero}).code,
            kExitMalformedInput);
}

TEST(Cli, OperatorModules) {
  const Outcome theta = invoke({"ops", "theta", "--check", "--decompose"});
  EXPECT_EQ(theta.code, kExitOk);
  EXPECT_EQ(theta.out.find("FAIL"), std::string::npos);
  EXPECT_NE(theta.out.find("V{e1}: rank 2"), std::string::npos);
  EXPECT_NE(theta.out.find("total rank: 6"), std::string::npos);
  const Outcome unknot = invoke({"ops", "unknot"});
  EXPECT_NE(unknot.out.find("[1, 0, T1*T2*T3"), std::string::npos);
  const Outcome j = invoke({"ops", "unknot", "--check", "--json"});
  EXPECT_TRUE(nlohmann::json::parse(j.out)["passed"].get<bool>());
}

TEST(Cli, ComplexCommands) {
  const Outcome cuffs =
      invoke({"complex", "handcuffs-linked", "--direction", "1,1,1"});
  EXPECT_EQ(cuffs.code, kExitOk);
  EXPECT_NE(cuffs.out.find("direction 1,1,1: frac_rank 4, f2_dim 4, r 4, l 0, "
                           "torsion {}"),
            std::string::npos);
  const Outcome cone = invoke({"complex", "cone-p", "--json"});
  const auto doc = nlohmann::json::parse(cone.out);
  ASSERT_EQ(doc["reports"].size(), 2u);
  EXPECT_EQ(doc["reports"][0]["torsion_exponents"],
            nlohmann::json::parse("[4,4]"));
  EXPECT_EQ(invoke({"complex", "cone-p", "--direction", "1,0,1"}).code,
            kExitUsage);
  const Outcome cert = invoke({"complex", "certify-order4"});
  EXPECT_EQ(cert.code, kExitOk);
  EXPECT_EQ(cert.out.find("FAIL"), std::string::npos);
}

TEST(Cli, AnalyzeFile) {
  const std::string path = temp_file(
      "taitfoam_cone.json",
      "{\"rank\": 2, \"differential\": [[\"0\", \"0\"], [\"T1*T2*T3 + "
      "T1*T2^-1*T3^-1 + T1^-1*T2*T3^-1 + T1^-1*T2^-1*T3\", \"0\"]]}");
  const Outcome o = invoke({"complex", "analyze", path, "--direction", "1,1,0",
                            "--seed", "7"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out,
            "direction 1,1,0: frac_rank 0, f2_dim 2, r 0, l 1, torsion {4}\n");
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"ops", "theta", "--show", "--json"},
        std::vector<std::string>{"web", "info", kCorpus + "/cube.json"},
        std::vector<std::string>{"complex", "handcuffs-linked", "--json"}})
    EXPECT_EQ(invoke(args).out, invoke(args).out);
}

}  // namespace
}  // namespace taitfoam
