#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nsg/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "semigroup-ld");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = nsg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, ClassifyMcNugget) {
  const auto r = invoke({"classify", "6", "9", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["ld"]["num"], 4);
  EXPECT_EQ(j["ld"]["den"], 7);
  EXPECT_EQ(j["verdict"], "tasty");
  EXPECT_EQ(j["max_delta"], 4);
  EXPECT_EQ(j["witness"], 60);
  EXPECT_EQ(j["certificate"]["period"], 60);
}

TEST(Cli, ClassifyCsvAndBettiMethod) {
  const auto csv = invoke({"--format", "csv", "classify", "6", "9", "20"});
  ASSERT_EQ(csv.code, 0);
  const auto rows = lines(csv.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "generators,verdict,num,den,ld,witness,max_delta,method");
  EXPECT_EQ(rows[1], "6 9 20,tasty,4,7,0.571428571429,60,4,window");
  const auto betti = parse(invoke({"classify", "6", "9", "20", "--method", "betti"}));
  EXPECT_EQ(betti["verdict"], "tasty");
  EXPECT_TRUE(betti["ld"].is_null());
}

TEST(Cli, RationalsRoundTrip) {
  const auto j = parse(invoke({"ld", "20", "28", "42", "73"}));
  EXPECT_EQ(nsg::Rational(j["ld"]["num"].get<nsg::Int>(), j["ld"]["den"].get<nsg::Int>()), nsg::Rational(3, 5));
  EXPECT_DOUBLE_EQ(j["ld"]["value"].get<double>(), 0.6);
  const auto e = parse(invoke({"ld", "6", "9", "20", "-n", "60"}));
  EXPECT_EQ(e["ld"]["num"], 4);
}

TEST(Cli, ElementCommands) {
  auto j = parse(invoke({"length-set", "6", "9", "20", "-n", "60"}));
  EXPECT_EQ(j["lengths"], (std::vector<int>{3, 7, 8, 9, 10}));
  EXPECT_EQ(j["delta"], (std::vector<int>{1, 4}));
  j = parse(invoke({"factorizations", "6", "9", "20", "-n", "60"}));
  EXPECT_EQ(j["count"], 5);
  j = parse(invoke({"delta", "6", "9", "20", "-n", "60"}));
  EXPECT_EQ(j["delta"], (std::vector<int>{1, 4}));
  j = parse(invoke({"betti", "6", "9", "20"}));
  ASSERT_EQ(j["betti"].size(), 2u);
  EXPECT_EQ(j["betti"][1]["element"], 60);
  j = parse(invoke({"presentation", "2", "3"}));
  EXPECT_EQ(j["relations"][0]["lhs"], (std::vector<int>{0, 2}));
  EXPECT_EQ(j["relations"][0]["rhs"], (std::vector<int>{3, 0}));
  j = parse(invoke({"invariants", "6", "9", "20"}));
  EXPECT_EQ(j["frobenius"], 43);
  EXPECT_EQ(j["betti"], (std::vector<int>{18, 60}));
}

TEST(Cli, PlotDefaultsToCsv) {
  const auto r = invoke({"plot-ld", "6", "9", "20", "--max", "60"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "n,num,den,ld");
  EXPECT_EQ(rows[1], "18,1,1,1");
  EXPECT_EQ(rows.back(), "60,4,7,0.571428571429");
}

TEST(Cli, GlueScanFindsOneBlandRow) {
  const auto r = invoke({"glue", "scan", "--s1", "2,3", "--s2", "6,9,20", "--max", "40", "--jobs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  int bland = 0;
  for (const auto& row : lines(r.out))
    if (row.find("bland") != std::string::npos) {
      ++bland;
      EXPECT_EQ(row, "4,27,bland,1");
    }
  EXPECT_EQ(bland, 1);
}

TEST(Cli, GlueClassifyAndRegions) {
  auto j = parse(invoke({"glue", "classify", "--s1", "2,3", "--s2", "6,9,20", "--lambda", "4", "--mu", "27"}));
  EXPECT_EQ(j["verdict"], "bland");
  EXPECT_EQ(j["generators"], (std::vector<int>{24, 36, 54, 80, 81}));
  j = parse(invoke({"glue", "regions", "--s", "2,5"}));
  EXPECT_EQ(j["floor"], 13);
  j = parse(invoke({"glue", "proportion", "--s", "3,4", "--max", "40"}));
  EXPECT_GT(j["total"].get<int>(), 0);
}

TEST(Cli, Families) {
  auto j = parse(invoke({"family", "supersym", "5", "3", "2"}));
  EXPECT_EQ(j["ld"]["num"], 2);
  EXPECT_EQ(j["ld"]["den"], 3);
  EXPECT_EQ(j["verdict"], "tasty");
  j = parse(invoke({"family", "threegen", "10", "19", "34"}));
  EXPECT_EQ(j["betti_count"], 3);
  EXPECT_EQ(j["verdict"], "bland");
  j = parse(invoke({"family", "med4", "17", "6", "19"}));
  EXPECT_EQ(j["provenance"], "parabola");
  j = parse(invoke({"family", "med-prime", "5", "11", "17", "13", "19"}));
  EXPECT_EQ(j["verdict"], "bland");
  j = parse(invoke({"family", "med-composite", "2", "2"}));
  EXPECT_EQ(j["tasty"], (std::vector<int>{4, 6, 17, 19}));
  const auto grid = invoke({"family", "med4", "--n2", "10", "--max", "40"});
  ASSERT_EQ(grid.code, 0) << grid.err;
  EXPECT_EQ(lines(grid.out).front(), "n1,n2,n3,verdict,provenance");
}

TEST(Cli, ExitCodes) {
  auto r = invoke({"classify", "4", "6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("GcdNotOne"), std::string::npos);
  r = invoke({"glue", "classify", "--s1", "2,3", "--s2", "6,9,20", "--lambda", "6", "--mu", "27"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("InvalidGluing"), std::string::npos);
  r = invoke({"length-set", "6", "9", "20", "-n", "43"});
  EXPECT_EQ(r.code, 2);
  r = invoke({"frobnicate"});
  EXPECT_EQ(r.code, 64);
  r = invoke({});
  EXPECT_EQ(r.code, 64);
  r = invoke({"--format", "xml", "classify", "6", "9", "20"});
  EXPECT_EQ(r.code, 64);
  r = invoke({"family", "med4"});
  EXPECT_EQ(r.code, 64);
  r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, NsBoundOverride) {
  auto j = parse(invoke({"--ns-bound", "600", "classify", "6", "9", "20"}));
  EXPECT_EQ(j["certificate"]["start"], 600);
  const auto r = invoke({"--ns-bound", "0", "classify", "6", "9", "20"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"glue", "scan", "--s1", "2,3", "--s2", "6,9,20", "--max", "30", "--format", "json"};
  const auto a = invoke(args);
  auto more = args;
  more.insert(more.begin(), {"--jobs", "3"});
  const auto b = invoke(more);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(invoke({"classify", "20", "28", "42", "73"}).out, invoke({"classify", "73", "42", "28", "20"}).out);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "nsg_cli_out.json";
  const auto r = invoke({"--out", path, "classify", "6", "9", "20"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j["ld"]["den"], 7);
  std::remove(path.c_str());
}
