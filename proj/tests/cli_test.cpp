// Copyright 2026 The circov Authors
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

// Drives the circov binary end to end through a shell.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "circov/json_io.hpp"

namespace circov {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("circov_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path file(const std::string& name, const std::string& body = {}) {
    const fs::path p = dir_ / name;
    if (!body.empty()) std::ofstream(p) << body;
    return p;
  }

  Outcome run(const std::string& args) {
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = std::string(CIRCOV_CLI_PATH) + " " + args + " 2>" + err.string();
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int raw = pclose(pipe);
    std::ifstream in(err);
    std::stringstream e;
    e << in.rdbuf();
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out, e.str()};
  }

  static std::vector<Json> lines(const std::string& text) {
    std::vector<Json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) out.push_back(Json::parse(line));
    }
    return out;
  }

  static std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

std::string example_n_file() {
  std::string s = "[[1";
  for (int t = 0; t <= 10; ++t) s += "," + std::to_string(6 + 5 * t);
  return s + "]]";
}

TEST_F(CliTest, GenerateCounts) {
  const Outcome a = run("generate --n 7 --k 3");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(lines(a.out).size(), 29U);
  EXPECT_EQ(lines(run("generate --n 4 --k 2").out).size(), 13U);
}

TEST_F(CliTest, GenerateIsByteStable) {
  const fs::path one = file("one.jsonl");
  const fs::path two = file("two.jsonl");
  ASSERT_EQ(run("generate --n 17 --k 4 --out " + one.string()).status, 0);
  ASSERT_EQ(run("generate --n 17 --k 4 --out " + two.string()).status, 0);
  EXPECT_FALSE(read(one).empty());
  EXPECT_EQ(read(one), read(two));
}

TEST_F(CliTest, GenerateFromExplicitSet) {
  const fs::path nf = file("n.json", example_n_file());
  const Outcome r = run("generate --n 59 --k 4 --N-file " + nf.string());
  ASSERT_EQ(r.status, 0);
  bool found = false;
  for (const Json& j : lines(r.out)) {
    if (j["rhs"] != 32) continue;
    found = true;
    for (int i = 1; i <= 59; ++i) {
      const bool in_w = i >= 6 && i <= 56 && (i - 6) % 5 == 0;
      EXPECT_EQ(j["coeffs"][i - 1], in_w ? 3 : 2) << i;
    }
  }
  EXPECT_TRUE(found);
}

TEST_F(CliTest, GenerateReportsBadSetsAndContinues) {
  const fs::path nf = file("n.json", "[[1,2],[1,4]]");
  const Outcome r = run("generate --n 7 --k 3 --N-file " + nf.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out).size(), 23U);
  EXPECT_NE(r.err.find("\"N\":[1,2]"), std::string::npos);
}

TEST_F(CliTest, SeparateExitCodes) {
  const fs::path third = file("third.json", R"(["1/3","1/3","1/3","1/3","1/3","1/3","1/3"])");
  const Outcome a = run("separate --n 7 --k 3 --point " + third.string());
  EXPECT_EQ(a.status, 2);
  const Json ja = Json::parse(a.out);
  EXPECT_EQ(ja["violated"], true);
  EXPECT_EQ(ja["violation"], "1/3");

  const fs::path cover = file("cover.json", R"(["1","0","0","1","0","0","1"])");
  const Outcome b = run("separate --n 7 --k 3 --point " + cover.string());
  EXPECT_EQ(b.status, 0);
  EXPECT_EQ(Json::parse(b.out)["violated"], false);

  const fs::path bad = file("bad.json", R"(["1/3"])");
  EXPECT_EQ(run("separate --n 7 --k 3 --point " + bad.string()).status, 1);
  EXPECT_EQ(run("separate --n 7 --k 3 --point " + (dir_ / "missing.json").string()).status, 1);
  EXPECT_EQ(run("separate --n 7 --k 7 --point " + third.string()).status, 1);
}

TEST_F(CliTest, SeparateC594MinorVertex) {
  std::string point = "[";
  for (int i = 1; i <= 59; ++i) {
    const bool in_n = i == 1 || (i >= 6 && (i - 6) % 5 == 0);
    point += std::string(i > 1 ? "," : "") + (in_n ? "\"0\"" : "\"1/3\"");
  }
  const fs::path p = file("v.json", point + "]");
  const Outcome r = run("separate --n 59 --k 4 --point " + p.string());
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(Json::parse(r.out)["violation"], "2/3");
}

TEST_F(CliTest, VerifyReports) {
  const fs::path rank = file("rank.jsonl", R"({"coeffs":[1,1,1,1,1,1],"rhs":2,"sense":">="})" "\n");
  const Outcome a = run("verify --n 6 --k 3 " + rank.string());
  ASSERT_EQ(a.status, 0);
  const Json ja = Json::parse(a.out);
  EXPECT_EQ(ja["valid"], true);
  EXPECT_EQ(ja["facet"], false);

  const fs::path minor = file("minor.jsonl", R"({"coeffs":[2,1,1,1,2,1,1,1],"rhs":3,"sense":">="})" "\n");
  const Json jb = Json::parse(run("verify --n 8 --k 3 " + minor.string()).out);
  EXPECT_EQ(jb["valid"], true);
  EXPECT_EQ(jb["min"], 3);
}

TEST_F(CliTest, VerifyRefusesAboveBound) {
  const fs::path nf = file("n.json", example_n_file());
  const fs::path ineqs = file("big.jsonl");
  ASSERT_EQ(run("generate --n 59 --k 4 --N-file " + nf.string() + " --out " + ineqs.string()).status, 0);
  const Outcome refused = run("verify --n 59 --k 4 " + ineqs.string());
  EXPECT_EQ(refused.status, 1);
  EXPECT_NE(refused.err.find("--sample"), std::string::npos);

  const Outcome sampled = run("verify --n 59 --k 4 --sample --limit-count 2000 --seed 5 " + ineqs.string());
  EXPECT_EQ(sampled.status, 0);
  const auto reports = lines(sampled.out);
  EXPECT_EQ(reports.size(), 180U);
  for (const Json& j : reports) {
    EXPECT_EQ(j["valid"], true);
    EXPECT_EQ(j["facet"], "unverified");
  }
  EXPECT_EQ(sampled.out, run("verify --n 59 --k 4 --sample --limit-count 2000 --seed 5 " + ineqs.string()).out);
}

TEST_F(CliTest, GenerateThenVerifyIsAllValid) {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{7, 3}, {11, 4}, {13, 5}, {16, 3}, {17, 6}}) {
    const fs::path out = file("gen.jsonl");
    ASSERT_EQ(run("generate --n " + std::to_string(n) + " --k " + std::to_string(k) + " --out " + out.string()).status, 0);
    const Outcome v = run("verify --n " + std::to_string(n) + " --k " + std::to_string(k) + " " + out.string());
    ASSERT_EQ(v.status, 0);
    const auto reports = lines(v.out);
    EXPECT_EQ(reports.size(), lines(read(out)).size());
    for (const Json& j : reports) EXPECT_EQ(j["valid"], true) << "n=" << n << " k=" << k;
  }
}

TEST_F(CliTest, Minors) {
  EXPECT_EQ(lines(run("minors --n 7 --k 3 --p 1").out).size(), 7U);
  bool has_15 = false;
  for (const Json& j : lines(run("minors --n 8 --k 3 --p 2").out)) has_15 = has_15 || j["N"] == Json({1, 5});
  EXPECT_TRUE(has_15);
  const Outcome empty = run("minors --n 7 --k 3 --p 2");
  EXPECT_EQ(empty.status, 0);
  EXPECT_TRUE(empty.out.empty());
  EXPECT_NE(empty.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("generate --k 3").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("minors --n 7 --k 3 --p 5").status, 1);
}

}  // namespace
}  // namespace circov
