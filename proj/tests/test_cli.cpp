#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"ffcheck"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : owned) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ffcheck::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden_path(const std::string& name) { return std::string(FFCHECK_GOLDEN_DIR) + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream in(golden_path(name), std::ios::binary);
  EXPECT_TRUE(in) << name;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("FFCHECK_FORMAT"); }
  void TearDown() override { unsetenv("FFCHECK_FORMAT"); }
};

}  // namespace

TEST_F(Cli, GoldenGcdSum) {
  const auto r = run({"gcd-sum", "--a", "t^3", "--b", "-t*(t+1)", "--places", "t,t+1,inf"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("gcd_sum_sharpness.json"));
}

TEST_F(Cli, GoldenGcdBound) {
  const auto json = run({"gcd-bound", "--a", "t^3", "--b", "-t*(t+1)"});
  EXPECT_EQ(json.code, 0);
  EXPECT_EQ(json.out, golden("gcd_bound_sharpness.json"));
  const auto text = run({"--format", "text", "gcd-bound", "--a", "t^3", "--b", "-t*(t+1)"});
  EXPECT_EQ(text.out, golden("gcd_bound_sharpness.txt"));
}

TEST_F(Cli, GoldenFamilies) {
  const auto r = run({"families", "secant", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("families_secant_5.json"));
  const auto csv = run({"--format", "csv", "families", "three-lines", "--n-max", "4"});
  EXPECT_EQ(csv.out, golden("families_three_lines_4.csv"));
}

TEST_F(Cli, GoldenSolutionFile) {
  const auto r = run({"--format", "csv", "solution-file", golden_path("constant_u2.sol")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("constant_u2.csv"));
  EXPECT_EQ(run({"solution-file", golden_path("linear_y.sol")}).code, 0);
}

TEST_F(Cli, GoldenSuite) {
  const auto r = run({"suite", "power-gcd-scan", "--f", "t", "--g", "t+1", "--n-max", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("suite_power_gcd_12.json"));
}

TEST_F(Cli, FormatFromEnvironment) {
  setenv("FFCHECK_FORMAT", "csv", 1);
  const auto r = run({"families", "three-lines", "--n-max", "4"});
  EXPECT_EQ(r.out, golden("families_three_lines_4.csv"));
  setenv("FFCHECK_FORMAT", "yaml", 1);
  EXPECT_EQ(run({"families", "three-lines", "--n", "2"}).code, 2);
}

TEST_F(Cli, DependentPairIsInvalidInput) {
  const auto r = run({"gcd-bound", "--a", "t", "--b", "t"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("dependent"), std::string::npos) << r.err;
}

TEST_F(Cli, ParseErrorsCarryOffsets) {
  const auto r = run({"gcd-sum", "--a", "(t+1", "--b", "t"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("byte"), std::string::npos) << r.err;

  const std::string path = ::testing::TempDir() + "/broken.sol";
  std::ofstream(path) << "lambda = 4\nu1 = t^\n";
  const auto f = run({"solution-file", path});
  EXPECT_EQ(f.code, 2);
  // "u1 = " starts at byte 11, so the dangling exponent sits at byte 18.
  EXPECT_NE(f.err.find("byte 18"), std::string::npos) << f.err;
}

TEST_F(Cli, UnknownCommandListsCommands) {
  const auto r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown command 'frobnicate'"), std::string::npos);
  EXPECT_NE(r.err.find("gcd-sum"), std::string::npos);
  EXPECT_NE(r.err.find("families"), std::string::npos);
}

TEST_F(Cli, UnknownSuiteAndMissingSeed) {
  EXPECT_EQ(run({"suite", "cor-random", "--seed", "1"}).code, 2);
  EXPECT_EQ(run({"suite", "gcd-bound-random", "--count", "5"}).code, 2);
  EXPECT_EQ(run({"suite", "gcd-bound-random", "--seed", "1", "--count", "5"}).code, 0);
}

TEST_F(Cli, ViolationExitsOne) {
  // A constant p freezes the cusp image at degree 3, below 2n + deg p for n = 3.
  const auto r = run({"families", "cusp", "--n", "3", "--p", "1"});
  EXPECT_EQ(r.code, 1);
}

TEST_F(Cli, SuiteOutputIsDeterministic) {
  const auto a = run({"suite", "unit-sum-random", "--seed", "11", "--count", "30"});
  const auto b = run({"suite", "unit-sum-random", "--seed", "11", "--count", "30"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
