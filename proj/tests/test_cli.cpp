/*
   Copyright 2026 The bingcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, bool style = false) {
  args.insert(args.begin(), "bingcheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = bingcheck::cli::run(static_cast<int>(argv.size()), argv.data(), out, err, style);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    path_ = std::filesystem::temp_directory_path() / ("bingcheck_cli_" + std::to_string(counter_++) + ".txt");
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, SpecExamples) {
  Result bing = run({"bing", "4_1"});
  EXPECT_EQ(bing.code, 0);
  EXPECT_TRUE(contains(bing.out, "verdict = NOT_ALG_SLICE\n"));
  EXPECT_TRUE(contains(bing.out, "conclusion = B(K) is not slice\n"));

  Result fox = run({"foxorder", "-p", "3", "3_1"});
  EXPECT_EQ(fox.code, 0);
  EXPECT_TRUE(contains(fox.out, "order = 4\n"));
  EXPECT_TRUE(contains(run({"foxorder", "-p", "2", "3_1"}).out, "order = 3\n"));

  Result missing = run({"catalog", "show", "no_such_knot"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.err.rfind("error: unknown catalog entry", 0), 0u) << missing.err;
  EXPECT_TRUE(missing.out.empty());
}

TEST(Cli, SingleInvariants) {
  EXPECT_TRUE(contains(run({"alexander", "6_1"}).out, "alexander = 2*t^2 - 5*t + 2\n"));
  EXPECT_TRUE(contains(run({"arf", "3_1"}).out, "arf = 1\n"));
  EXPECT_TRUE(contains(run({"arf", "6_1"}).out, "arf = 0\n"));
  Result fm = run({"foxmilnor", "6_1"});
  EXPECT_TRUE(contains(fm.out, "fox_milnor = pass\nfox_milnor_witness = 2*t - 1\n"));
  EXPECT_TRUE(contains(run({"foxmilnor", "4_1"}).out, "fox_milnor = fail\n"));
  Result sf = run({"sigfn", "3_1"});
  EXPECT_TRUE(contains(sf.out, "identically_zero = no\n"));
  EXPECT_TRUE(contains(sf.out, "u_lo,u_hi,signature\n1.000000000000,2.000000000000,0\n-2.000000000000,1.000000000000,-2\n"));
  Result inv = run({"invariants", "3_1"});
  EXPECT_TRUE(contains(inv.out, "certificate = signature_function\n"));
  EXPECT_TRUE(contains(inv.out, "determinant = 3\n"));
}

TEST(Cli, Transforms) {
  Result cable = run({"cable", "-n", "2", "3_1"});
  EXPECT_EQ(cable.code, 0);
  EXPECT_TRUE(contains(cable.out, "order = t^4 - t^2 + 1\n"));
  Result cover = run({"cover", "-p", "3", "3_1"});
  EXPECT_EQ(cover.code, 0) << cover.err;
  EXPECT_TRUE(contains(cover.out, "2\n0 1/2\n-1/2 0\n"));
  EXPECT_TRUE(contains(cover.out, "ring = Q\n"));
  EXPECT_TRUE(contains(cover.out, "verdict = NO_OBSTRUCTION_FOUND\n"));
  Result jpq = run({"jpq", "-p", "1", "-q", "2", "6_1"});
  EXPECT_EQ(jpq.code, 0);
  EXPECT_TRUE(contains(jpq.out, "subject = J(1,2) of 6_1\n"));
  EXPECT_TRUE(contains(jpq.out, "verdict = NO_OBSTRUCTION_FOUND\n"));
  Result bing = run({"bing", "--range", "1", "unknot"});
  EXPECT_TRUE(contains(bing.out, "conclusion = no obstruction found\n"));
  EXPECT_FALSE(contains(bing.out, "is slice\n"));
}

TEST(Cli, Catalog) {
  Result list = run({"catalog", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_TRUE(contains(list.out, "unknot\tslice\n"));
  EXPECT_TRUE(contains(list.out, "twist_5\ttwist knot\n"));
  Result show = run({"catalog", "show", "3_1"});
  EXPECT_TRUE(contains(show.out, "# name: 3_1\n2\n-1 1\n0 -1\n"));
  // show output is a valid matrix file
  TempFile f(show.out);
  Result again = run({"alexander", "--file", f.path()});
  EXPECT_EQ(again.out, "subject = 3_1\nalexander = t^2 - t + 1\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"nonsense"}).code, 1);
  EXPECT_EQ(run({"cable", "3_1"}).code, 1);  // -n missing
  EXPECT_EQ(run({"cable", "-n", "0", "3_1"}).code, 1);
  EXPECT_EQ(run({"alexander"}).code, 1);
  EXPECT_EQ(run({"batch"}).code, 1);

  TempFile symmetric("2\n1 0\n0 1\n");
  Result adm = run({"invariants", "--file", symmetric.path()});
  EXPECT_EQ(adm.code, 2);
  EXPECT_EQ(adm.err.rfind("error: ", 0), 0u);
  TempFile ragged("2\n1 0\n0\n");
  EXPECT_EQ(run({"invariants", "--file", ragged.path()}).code, 2);
  EXPECT_EQ(run({"invariants", "--file", "/nonexistent/knot.txt"}).code, 2);
  TempFile rational("2\n1/2 1\n0 -1/2\n");
  Result arf = run({"arf", "--file", rational.path()});
  EXPECT_EQ(arf.code, 2);
  EXPECT_TRUE(contains(arf.err, "error: "));
  EXPECT_EQ(run({"invariants", "--file", rational.path()}).code, 0);

  Result help = run({"bing", "--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_TRUE(contains(help.out, "If B(K) is slice then K is algebraically slice"));
}

TEST(Cli, EverySubcommandHasHelp) {
  for (const char* sub : {"invariants", "alexander", "sigfn", "arf", "foxmilnor", "cable", "cover", "foxorder", "jpq",
                          "bing", "catalog", "batch"}) {
    Result r = run({sub, "--help"});
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_FALSE(r.out.empty()) << sub;
  }
}

TEST(Cli, BatchIsDeterministicAndOrdered) {
  Result a = run({"batch", "--catalog"});
  Result b = run({"batch", "--catalog"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::size_t prev = 0;
  for (const auto& e : bingcheck::catalog::builtin_catalog()) {
    std::size_t at = a.out.find("subject = " + e.name + "\n");
    ASSERT_NE(at, std::string::npos) << e.name;
    EXPECT_GE(at, prev);
    prev = at;
  }

  TempFile good("# name: mine\n2\n-1 1\n0 -1\n"), bad("2\n1 0\n0 1\n");
  Result mixed = run({"batch", good.path(), bad.path(), good.path()});
  EXPECT_EQ(mixed.code, 2);
  EXPECT_TRUE(contains(mixed.err, "error: " + bad.path() + ": "));
  std::size_t reports = 0;
  for (std::size_t at = mixed.out.find("subject = mine\n"); at != std::string::npos;
       at = mixed.out.find("subject = mine\n", at + 1)) {
    ++reports;
  }
  EXPECT_EQ(reports, 2u);
}

TEST(Cli, Styling) {
  Result plain = run({"invariants", "4_1"});
  Result styled = run({"invariants", "4_1"}, true);
  EXPECT_EQ(plain.out.find('\033'), std::string::npos);
  EXPECT_TRUE(contains(styled.out, "\033[1;31mverdict = NOT_ALG_SLICE\033[0m\n"));
  setenv("BINGCHECK_NO_COLOR", "1", 1);
  EXPECT_FALSE(bingcheck::cli::want_style(true));
  unsetenv("BINGCHECK_NO_COLOR");
  EXPECT_TRUE(bingcheck::cli::want_style(true));
  EXPECT_FALSE(bingcheck::cli::want_style(false));
}
