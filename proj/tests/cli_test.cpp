// Copyright 2026 The gkat-learn authors
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
// -----------------------------------------------------------------------------

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result RunCli(const std::string& args) {
  const std::string command = std::string(GKAT_LEARN_BINARY) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> Fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

const char* kWhile = "--expr '(while b do p); do q' --tests b --actions p,q";

std::filesystem::path TempDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("gkat_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(Learn, GlStarWritesArtifacts) {
  const auto dir = TempDir("glstar");
  const Result r = RunCli(std::string("learn ") + kWhile + " --algo glstar --out-dir " +
                       dir.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("glstar: 2 states"), std::string::npos) << r.out;
  const std::string dot = Slurp(dir / "glstar.dot");
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("row(eps)"), std::string::npos);
  EXPECT_NE(dot.find("row(!b q)"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "glstar_table_1.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "glstar_table_2.csv"));
  EXPECT_FALSE(std::filesystem::exists(dir / "glstar_table_3.csv"));
  const auto stats = Lines(Slurp(dir / "stats.csv"));
  ASSERT_EQ(stats.size(), 2u);
  EXPECT_EQ(stats[0],
            "algorithm,n_tests,membership_queries,zero_filled,equivalence_queries,"
            "hypothesis_states,wall_ms");
  const auto f = Fields(stats[1]);
  ASSERT_EQ(f.size(), 7u);
  EXPECT_EQ(f[0], "glstar");
  EXPECT_EQ(f[5], "2");
}

TEST(Learn, LStarHasThreeStates) {
  const auto dir = TempDir("lstar");
  const Result r = RunCli(std::string("learn ") + kWhile + " --algo lstar --out-dir " +
                       dir.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lstar: 3 states"), std::string::npos) << r.out;
  EXPECT_TRUE(std::filesystem::exists(dir / "lstar.dot"));
  EXPECT_TRUE(std::filesystem::exists(dir / "lstar_table_2.csv"));
}

TEST(Learn, AssertZero) {
  const Result r = RunCli("learn --expr 'assert 0' --tests b --actions p --algo glstar");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("glstar: 1 states"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1 equivalence queries"), std::string::npos) << r.out;
}

TEST(Learn, TraceLines) {
  const Result r = RunCli(std::string("learn ") + kWhile + " --algo glstar --trace");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("QUERY b p !b q !b -> 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PROMOTE !b q"), std::string::npos);
  EXPECT_NE(r.out.find("EQUIV -> Yes"), std::string::npos);
}

TEST(Compare, WhileFamily) {
  const Result r = RunCli("compare --family while --sweep 2");
  ASSERT_EQ(r.code, 0);
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  const auto g1 = Fields(lines[1]);
  const auto l1 = Fields(lines[2]);
  EXPECT_EQ(g1[0], "glstar");
  EXPECT_EQ(std::stoul(g1[2]) + std::stoul(g1[3]), 36u);
  EXPECT_EQ(l1[0], "lstar");
  EXPECT_EQ(l1[2], "78");
}

// Same config twice: identical rows once the timing column is dropped.
TEST(Compare, Deterministic) {
  auto strip = [](const std::string& text) {
    std::string out;
    for (const auto& line : Lines(text)) out += line.substr(0, line.rfind(',')) + "\n";
    return out;
  };
  const Result a = RunCli("compare --family if --sweep 3");
  const Result b = RunCli("compare --family if --sweep 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(strip(a.out), strip(b.out));
}

TEST(Compare, RatioShrinksWithTests) {
  for (const char* family : {"if", "while"}) {
    const Result r = RunCli(std::string("compare --family ") + family + " --sweep 5");
    ASSERT_EQ(r.code, 0);
    const auto lines = Lines(r.out);
    ASSERT_EQ(lines.size(), 11u);
    double previous = 1e9;
    for (std::size_t n = 0; n < 5; ++n) {
      const auto g = Fields(lines[1 + 2 * n]);
      const auto l = Fields(lines[2 + 2 * n]);
      const double ratio = (std::stod(g[2]) + std::stod(g[3])) / std::stod(l[2]);
      EXPECT_LT(ratio, previous) << family << " n=" << n + 1;
      EXPECT_LT(std::stod(g[2]), std::stod(l[2]));
      previous = ratio;
    }
  }
}

TEST(Equiv, SameProgram) {
  EXPECT_EQ(RunCli(std::string("equiv ") + kWhile + " --expr2 '(while b do p); do q'").code, 0);
}

TEST(Equiv, RedundantConditional) {
  const Result r = RunCli(
      "equiv --expr 'if b then do p else do p' --expr2 'do p' --tests b --actions p,q");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equivalent\n");
}

TEST(Equiv, DifferentActions) {
  const Result r = RunCli("equiv --expr 'do p' --expr2 'do q' --tests b --actions p,q");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "inequivalent: !b p !b is accepted by --expr only\n");
}

TEST(Denote, ListsWords) {
  const Result r = RunCli(std::string("denote ") + kWhile + " --bound 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "!b q !b\n!b q b\nb p !b q !b\nb p !b q b\n");
}

TEST(ExitCodes, ParseErrors) {
  EXPECT_EQ(RunCli("learn --expr 'do p;' --tests b --actions p").code, 2);
  EXPECT_EQ(RunCli("learn --expr 'do z' --tests b --actions p").code, 2);
  EXPECT_EQ(RunCli("learn --tests b --actions p").code, 2);
  EXPECT_EQ(RunCli("frobnicate").code, 2);
}

TEST(ExitCodes, Capacity) {
  EXPECT_EQ(RunCli("learn --expr 'do p; do p; do p' --tests b --actions p --max-states 2").code,
            3);
  EXPECT_EQ(RunCli("denote --expr 'do p' --tests a,b,c --actions p --max-atoms 4").code, 3);
}

}  // namespace
