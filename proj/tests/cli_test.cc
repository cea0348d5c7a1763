// Copyright 2026 The hybridsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

#ifdef HYBRIDSAT_CLI_PATH
CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(HYBRIDSAT_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("hybridsat_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, Classify) {
  CliRun a = Cli("classify --ops dia,down --base and,or,not --frames all");
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("label: coRE-complete"), std::string::npos) << a.out;
  CliRun b = Cli("classify --ops dia,box,down,at --base not --frames total");
  EXPECT_NE(b.out.find("label: L-complete"), std::string::npos) << b.out;
  CliRun c = Cli("classify --ops dia,down --base id --frames er");
  EXPECT_NE(c.out.find("label: trivial"), std::string::npos) << c.out;
  CliRun d = Cli("classify --ops dia,down --base id,0 --frames er");
  EXPECT_NE(d.out.find("label: almost-trivial"), std::string::npos) << d.out;
  EXPECT_EQ(Cli("classify --ops dia --base nand").code, 2);
}

TEST_F(CliTest, Solve) {
  CliRun a = Cli("solve " + Write("a.hl", "down x . not x\n") + " --frames er");
  EXPECT_EQ(a.code, 1);
  EXPECT_NE(a.out.find("answer: unsat"), std::string::npos) << a.out;
  CliRun b = Cli("solve " + Write("b.hl", "down x . x\n"));
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("answer: sat"), std::string::npos) << b.out;
  CliRun c = Cli("solve - --json < " + Write("c.hl", "box 0"));
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("\"answer\": \"sat\""), std::string::npos) << c.out;
  EXPECT_EQ(Cli("solve " + Write("d.hl", "and(p")).code, 2);
  EXPECT_EQ(Cli("solve /nonexistent/file").code, 2);
}

TEST_F(CliTest, SolveGeneratedQbf) {
  const std::string qbf = Write("q.txt", "p cnf 4 2\ne 1 0\na 2 0\ne 3 0\na 4 0\n1 -2 0\n-1 2 3 -4 0\n");
  CliRun g = Cli("gen qbf " + qbf);
  ASSERT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("# label: sat"), std::string::npos);
  const std::string formula = g.out.substr(0, g.out.find('\n'));
  CliRun s = Cli("solve " + Write("f.hl", formula) + " --frames trans");
  EXPECT_EQ(s.code, 0) << s.out;
  EXPECT_NE(s.out.find("answer: sat"), std::string::npos);
}

TEST_F(CliTest, Check) {
  const std::string k1 = Write("k1.json", R"({"states": ["w1"], "rel": [["w1", "w1"]], "labels": {"p": ["w1"]}})");
  CliRun a = Cli("check " + k1 + " " + Write("a.hl", "dia p") + " --state w1");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "true\n");
  CliRun b = Cli("check " + k1 + " " + Write("b.hl", "box 0"));
  EXPECT_EQ(b.code, 1);
  EXPECT_EQ(b.out, "false\n");
  CliRun c = Cli("check " + k1 + " " + Write("c.hl", "dia x:y") + " --assign y=w1");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(Cli("check " + k1 + " " + Write("d.hl", "dia x:y")).code, 2);

  const std::string k2 = Write("k2.json", R"({"states": ["s", "t"], "rel": [["s", "s"], ["s", "t"]], "labels": {"n:s": ["s"]}})");
  CliRun g = Cli("gen qbf " + Write("q.txt", "e 1 0\na 2 0\ne 3 0\na 4 0\n1 -2 0\n-1 2 3 -4 0\n"));
  const std::string formula = g.out.substr(0, g.out.find('\n'));
  EXPECT_EQ(Cli("check " + k2 + " " + Write("f.hl", formula) + " --state s").code, 0);
}

TEST_F(CliTest, Gen) {
  CliRun a = Cli("gen parity 11");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "down x . not not x");
  EXPECT_NE(a.out.find("# label: sat"), std::string::npos);
  CliRun b = Cli("gen ord 'n=2 s=1 t=2 succ=1-2' --sidecar " + (dir_ / "side.json").string());
  EXPECT_NE(b.out.find("# label: sat"), std::string::npos);
  std::ifstream side(dir_ / "side.json");
  std::string text((std::istreambuf_iterator<char>(side)), {});
  EXPECT_NE(text.find("\"label\": \"sat\""), std::string::npos);
  EXPECT_NE(text.find("\"trans\""), std::string::npos);
  CliRun c = Cli("gen unreach 'n=2 s=1 t=2 edges=1-2' --json");
  EXPECT_NE(c.out.find("\"label\": \"unsat\""), std::string::npos) << c.out;
  EXPECT_EQ(Cli("gen dag 1").code, 2);
}

TEST_F(CliTest, Oracle) {
  const std::string box0 = Write("box0.hl", "box 0");
  CliRun a = Cli("oracle " + box0 + " --frames all --bound 1");
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("witness"), std::string::npos);
  CliRun b = Cli("oracle " + box0 + " --frames total --bound 3");
  EXPECT_EQ(b.code, 3);
  EXPECT_NE(b.out.find("not-found"), std::string::npos);
  CliRun c = Cli("oracle " + Write("er.hl", "down x . dia not x") + " --frames er --bound 2");
  EXPECT_EQ(c.code, 0);
}

TEST_F(CliTest, Usage) {
  EXPECT_EQ(Cli("").code, 2);
  EXPECT_EQ(Cli("--help").code, 0);
  EXPECT_EQ(Cli("solve x --frames s5").code, 2);
}
#else
TEST(CliTest, Skipped) { GTEST_SKIP() << "command line tool not built"; }
#endif

}  // namespace
