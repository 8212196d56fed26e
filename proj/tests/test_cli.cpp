// Copyright 2026 The zerocurve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

#include "cli.hpp"

namespace fs = std::filesystem;
using zerocurve::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "zerocurve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("zerocurve_cli_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, QDiscPrintsCheckpoint) {
  const auto r = call({"qdisc", "--k", "3", "--l", "2", "--A", "1", "--B", "1", "--q", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "-379");
  EXPECT_NE(r.out.find("closed-form -379"), std::string::npos);
}

TEST(Cli, QDiscAtOne) {
  const auto r = call({"qdisc", "--k", "4", "--l", "3", "--A", "1", "--B", "1", "--q", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("discriminant 229"), std::string::npos);
}

TEST(Cli, VerifyExample51WritesReport) {
  const auto dir = scratch("verify");
  const auto r = call({"verify", "--k", "3", "--l", "2", "--A", "z+5", "--B", "-z^2+2z+5", "--n", "30", "--out", dir.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(dir / "report.json"));
  EXPECT_EQ(j["n"], 30);
  EXPECT_EQ(j["aggregates"]["failing"], 0);
}

TEST(Cli, FigureWritesSvgAndCsv) {
  const auto dir = scratch("figure");
  const auto r = call({"figure", "--example", "5.3", "--n", "40", "--grid", "80", "--out", dir.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "figure.svg"));
  EXPECT_TRUE(fs::exists(dir / "roots.csv"));
  EXPECT_TRUE(fs::exists(dir / "curve.csv"));
}

TEST(Cli, RerunIsByteIdentical) {
  const auto a = scratch("rerun_a"), b = scratch("rerun_b");
  for (const auto& d : {a, b}) {
    ASSERT_EQ(call({"figure", "--example", "5.1", "--grid", "60", "--out", d.string()}).code, 0);
    ASSERT_EQ(call({"verify", "--example", "5.2", "--n", "40,60", "--out", d.string()}).code, 0);
    ASSERT_EQ(call({"qdisc", "--samples", "20", "--seed", "3", "--out", d.string()}).code, 0);
    ASSERT_EQ(call({"dominance", "--example", "5.1", "--grid", "20", "--bbox", "-6,6,-6,6", "--out", d.string()}).code, 0);
  }
  for (const char* f : {"figure.svg", "roots.csv", "curve.csv", "report_n40.json", "report_n60.json", "qdisc.json", "dominance.csv"})
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
}

TEST(Cli, ConfigPlusOverridesEqualsFlags) {
  const auto dir = scratch("config");
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "run.json");
    cfg << R"({"k": 3, "l": 2, "A": "z+5", "B": "-z^2+2z+5", "n": 70, "tol": 1e-6, "format": ["json"]})";
  }
  const auto a = call({"verify", "--config", (dir / "run.json").string(), "--n", "30"});
  const auto b = call({"verify", "--k", "3", "--l", "2", "--A", "z+5", "--B", "-z^2+2z+5", "--n", "30", "--tol", "1e-6",
                       "--format", "json"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"n\": 30"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"bogus"}).code, 2);
  EXPECT_EQ(call({"verify", "--k", "4", "--l", "2", "--A", "z", "--B", "z"}).code, 2);
  EXPECT_EQ(call({"verify", "--A", "z^"}).code, 2);
  EXPECT_EQ(call({"verify", "--n", "x"}).code, 2);
  EXPECT_EQ(call({"curve", "--bbox", "1,0,0,1"}).code, 2);
  EXPECT_EQ(call({"zeros", "--format", "pdf"}).code, 2);
  EXPECT_EQ(call({"qdisc", "--A", "z", "--q", "2"}).code, 2);
  EXPECT_EQ(call({"verify", "--config", "/nonexistent/cfg.json"}).code, 2);
}

TEST(Cli, TheoremViolationExitCode) {
  // quotients for (4, 3) report the second quotient leaving the C4 arc
  const auto r = call({"quotients", "--example", "5.3", "--n", "40"});
  EXPECT_EQ(r.code, 4);
}

TEST(Cli, SequenceJson) {
  const auto r = call({"seq", "--k", "3", "--l", "2", "--A", "z+5", "--B", "-z^2+2z+5", "--n", "3"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["polys"].size(), 4u);
  EXPECT_EQ(j["polys"][3][0][0], -5.0);
  EXPECT_EQ(j["spec"]["A"], "z + 5");
}

TEST(Cli, ZerosCsvToStdout) {
  const auto r = call({"zeros", "--example", "5.1", "--n", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "index,re,im,modulus,residual,certified");
}
