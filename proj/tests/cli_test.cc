// Copyright 2026 The teamsem Authors
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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.h"

namespace teamsem::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "teamsem");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("teamsem_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                                 ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, DemoWritesModelsThatEvalSeparates) {
  const Outcome demo = call({"demo-unsafety", "--n", "1", "--write-models",
                         dir_.string()});
  ASSERT_EQ(demo.code, 0) << demo.err;
  EXPECT_NE(demo.out.find("nonconn"), std::string::npos);
  const std::string nonconn =
      "exists x y. (const(y) /\\ (forall z. (E(x,z) => inc(z ; x)) /\\ x != y))";
  EXPECT_EQ(call({"eval", (dir_ / "A1.model").string(), "--epsilon", nonconn})
                .code,
            kTrue);
  EXPECT_EQ(call({"eval", (dir_ / "B1.model").string(), "--epsilon", nonconn})
                .code,
            kFalse);
}

TEST_F(CliTest, DemoRejectsOutOfRangeIndex) {
  EXPECT_EQ(call({"demo-unsafety", "--n", "0"}).code, kUsage);
  EXPECT_EQ(call({"demo-unsafety", "--n", "13"}).code, kUsage);
}

TEST_F(CliTest, EvalWithTeamFile) {
  const std::string model =
      write("m.model", "domain: a b\nrel E/2: (a,b) (b,a)\n");
  const std::string team = write("t.team", "vars: x\nrow: a\nrow: b\n");
  EXPECT_EQ(call({"eval", model, team, "nc(x)"}).code, kTrue);
  EXPECT_EQ(call({"eval", model, team, "const(x)"}).code, kFalse);
  EXPECT_EQ(call({"eval", model, "--empty", "forall x. x != x"}).code, kTrue);
}

TEST_F(CliTest, EvalErrorsAreUsageErrors) {
  const std::string model = write("m.model", "domain: a b\n");
  EXPECT_EQ(call({"eval", model, "--epsilon", "F(x)"}).code, kUsage);
  EXPECT_EQ(call({"eval", model, "--epsilon", "exists x. ("}).code, kUsage);
  EXPECT_EQ(call({"eval", (dir_ / "missing").string(), "--epsilon", "top"})
                .code,
            kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kUsage);
}

TEST_F(CliTest, EvalBudgetExit) {
  const std::string model =
      write("m.model", "domain: a b c d e f\n");
  const Outcome r = call({"eval", model, "--epsilon", "--plain", "--max-branches",
                      "10",
                      "forall x y z. exists u. (x = u \\/ (y = u \\/ z = u))"});
  EXPECT_EQ(r.code, kBudget) << r.out << r.err;
}

TEST_F(CliTest, MachineOutput) {
  const std::string model = write("m.model", "domain: a b\n");
  const Outcome r = call({"eval", model, "--epsilon", "--machine", "top"});
  EXPECT_EQ(r.code, kTrue);
  EXPECT_NE(r.out.find("result=true"), std::string::npos) << r.out;
}

TEST_F(CliTest, RewritePrenex) {
  const Outcome r = call({"rewrite", "prenex", "(exists x. x = x) \\/ y = y"});
  ASSERT_EQ(r.code, kTrue) << r.err;
  EXPECT_NE(r.out.find("exists x. (x = x \\/ y = y)"), std::string::npos)
      << r.out;
}

TEST_F(CliTest, RewriteVerifyAndOpenNormalForm) {
  EXPECT_EQ(call({"rewrite", "eliminate-all", "exists y. all(y)", "--verify"})
                .code,
            kTrue);
  EXPECT_EQ(call({"rewrite", "normal-form", "E(x,y)"}).code, kUsage);
  EXPECT_EQ(call({"rewrite", "no-such-pass", "top"}).code, kUsage);
}

TEST_F(CliTest, Props) {
  const Outcome c = call({"props", "const", "--bound", "3"});
  EXPECT_EQ(c.code, kTrue) << c.out << c.err;
  EXPECT_EQ(call({"props", "all", "--bound", "3"}).code, kTrue);
  EXPECT_EQ(call({"props", "unknown"}).code, kUsage);
}

TEST_F(CliTest, EquivCounterexampleFiles) {
  const std::string prefix = (dir_ / "cx").string();
  const Outcome r = call({"equiv", "const(x)", "nc(x)", "--sizes", "2",
                      "--write-counterexample", prefix});
  EXPECT_EQ(r.code, kFalse);
  EXPECT_TRUE(std::filesystem::exists(prefix + ".model"));
  EXPECT_TRUE(std::filesystem::exists(prefix + ".team"));
  const Outcome again = call({"eval", prefix + ".model", prefix + ".team",
                          "const(x)"});
  const Outcome other = call({"eval", prefix + ".model", prefix + ".team",
                          "nc(x)"});
  EXPECT_NE(again.code, other.code);
  EXPECT_EQ(call({"equiv", "nc(x)", "nc(x) /\\ top", "--sizes", "2"}).code,
            kTrue);
}

}  // namespace
}  // namespace teamsem::cli
