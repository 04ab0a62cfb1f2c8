// Copyright 2026 The kpcst Authors
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

// Drives the kpcst executable as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(KPCST_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const char* env = std::getenv("KPCST_TEST_TMP");
    dir_ = env ? fs::path(env) : fs::temp_directory_path() / "kpcst_cli_test";
    fs::create_directories(dir_);
    Write("tri.kpcst",
          "kpcst 3 3\nroot 0\nk 3\npenalties 0 1 1\ne 0 1 5\ne 0 2 5\ne 1 2 5\n");
    Write("single.kpcst", "kpcst 1 0\nroot 0\nk 1\npenalties 0\n");
    Write("path.kpcst",
          "kpcst 3 2\nroot 0\nk 2\npenalties 0 4 4\ne 0 1 1\ne 1 2 1\n");
  }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }
  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
  }
  std::string Read(const std::string& name) const {
    std::ifstream in(Path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveTriangleReachesStepThree) {
  const CliRun r = Cli("solve --problem kpcst --instance " + Path("tri.kpcst") +
                    " --kmst-strategy exact");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("termination=Step3"), std::string::npos);
  EXPECT_NE(r.out.find("objective=10\n"), std::string::npos);
}

TEST_F(CliTest, MissingFileExitsTwo) {
  EXPECT_EQ(Cli("solve --instance " + Path("absent.kpcst")).code, 2);
}

TEST_F(CliTest, BadFlagsExitTwo) {
  EXPECT_EQ(Cli("solve --instance " + Path("tri.kpcst") + " --problem nope")
                .code,
            2);
  EXPECT_EQ(Cli("frobnicate").code, 2);
  EXPECT_EQ(Cli("bench --count -3").code, 2);
  EXPECT_EQ(Cli("solve --instance " + Path("tri.kpcst") +
                " --kmst-strategy lagrangian --kmst-tol 0")
                .code,
            2);
}

TEST_F(CliTest, MalformedInstanceExitsTwo) {
  Write("bad.kpcst", "kpcst 2 1\nroot 0\nk 9\npenalties 0 1\ne 0 1 1\n");
  const CliRun r = Cli("solve --instance " + Path("bad.kpcst"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("ValidationError"), std::string::npos);
}

TEST_F(CliTest, SolverErrorExitsThree) {
  const CliRun r =
      Cli("solve --problem kpctsp --instance " + Path("path.kpcst"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("NonMetricGraph"), std::string::npos);
  EXPECT_EQ(Cli("solve --problem kpctsp --metric-closure --instance " +
                Path("path.kpcst"))
                .code,
            0);
}

TEST_F(CliTest, EmitDotAndSolutionFiles) {
  const CliRun r = Cli("solve --instance " + Path("tri.kpcst") + " --emit-dot " +
                    Path("tri.dot") + " --out " + Path("tri.sol") +
                    " --trace " + Path("tri.trace"));
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string dot = Read("tri.dot");
  EXPECT_NE(dot.find("color=red"), std::string::npos);
  EXPECT_NE(dot.find("peripheries=2"), std::string::npos);
  EXPECT_EQ(Read("tri.sol").rfind("solution tree", 0), 0u);
  EXPECT_EQ(Read("tri.trace"),
            "t=1 kind=Deactivation subject={1}\n"
            "t=1 kind=Deactivation subject={2}\n");
}

TEST_F(CliTest, VerifyPassesOnGeneratedInstance) {
  ASSERT_EQ(Cli("gen --n 9 --k 4 --seed 5 --out " + Path("g.kpcst")).code, 0);
  const CliRun r = Cli("verify --oracle --instance " + Path("g.kpcst"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifyCorruptedSolutionExitsOne) {
  Write("bad.sol", "solution tree\nvertices 0 1 2\nedge 0 1\n");
  const CliRun r = Cli("verify --instance " + Path("tri.kpcst") + " --solution " +
                    Path("bad.sol"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("first violation: FAIL external_solution_feasibility"),
            std::string::npos);
}

TEST_F(CliTest, VerifySingleVertexSkipsGwTheorem) {
  const CliRun r = Cli("verify --oracle --instance " + Path("single.kpcst"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("SKIPPED gw_theorem"), std::string::npos);
}

TEST_F(CliTest, BenchIsByteIdentical) {
  const CliRun a = Cli("bench --count 10 --n 8 --seed 7");
  const CliRun b = Cli("bench --count 10 --n 8 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("id,n,m,k,alg_cost,opt,ratio,step,ms\n", 0), 0u);
}

TEST_F(CliTest, OracleAndGen) {
  const CliRun o = Cli("oracle --problem kpcst --instance " + Path("tri.kpcst"));
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("opt=10"), std::string::npos);
  const CliRun g1 = Cli("gen --n 6 --seed 3 --sparse");
  const CliRun g2 = Cli("gen --n 6 --seed 3 --sparse");
  EXPECT_EQ(g1.code, 0);
  EXPECT_EQ(g1.out, g2.out);
  EXPECT_EQ(g1.out.rfind("kpcst 6 ", 0), 0u);
}

}  // namespace
