#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "dforge_cli/cli.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = dforge::cli::dispatch(args, out, err);
  return {status, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(DFORGE_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, InstructionsCsvEndsWithLastProjection) {
  const auto r = run({"instructions", "--generators", "add,mul,nat", "--count", "16"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, golden("instructions_16.csv"));
  EXPECT_NE(r.out.find("\n16,5,2,0,2\n"), std::string::npos);
}

TEST(Cli, DescribeSqrtTwo) {
  const auto r = run({"describe", "--formula", "x>0 and x*x=2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "point poly=\"x^2-2\" in (1,2)\n");
}

TEST(Cli, DigitsOfRepeatingFraction) {
  const auto r = run({"digits", "--value", "21/1100", "--count", "6"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "019090\n");
}

TEST(Cli, Goldens) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"boundaries", "--generators", "add,mul,nat", "--blocks", "3"}, "boundaries_3.txt"},
      {{"enumerate", "--generators", "add,mul", "--count", "13"}, "enumerate_13.txt"},
      {{"eliminate", "--formula", "exists z . x + z*z = y"}, "eliminate_order.txt"},
      {{"decide", "--formula", "forall x, y . (x <= y <-> exists z . x + z*z = y)"}, "decide_order.txt"},
      {{"diagonal", "--curated", "--count", "5"}, "diagonal_curated.txt"},
      {{"diagonal", "--generators", "add,mul", "--count", "13"}, "diagonal_enumerated.txt"},
      {{"interleave", "--values", "[1/2, 1/2]", "--count", "8"}, "interleave.txt"},
      {{"deinterleave", "--value", "11/20", "--m", "2"}, "deinterleave.txt"},
      {{"bridge", "--indices", "1,3,9,27", "--count", "10"}, "bridge_indices.txt"},
      {{"omega", "--poly", "x^3+y^3+z^3-N", "--param-N", "29", "--bound", "4"}, "omega_bit.txt"},
      {{"omega", "--poly", "x^3+y^3+z^3-N", "--bound", "4"}, "omega_value.txt"},
  };
  for (const auto& [args, file] : cases) {
    const auto r = run(args);
    EXPECT_EQ(r.status, 0) << file << ": " << r.err;
    EXPECT_EQ(r.out, golden(file)) << file;
    EXPECT_EQ(run(args).out, r.out) << "not deterministic: " << file;
  }
}

TEST(Cli, DeinterleaveRejectsTrailingNines) {
  const auto r = run({"deinterleave", "--value", "21/1100", "--m", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "none\n");
}

TEST(Cli, DomainErrorExitsOne) {
  const auto r = run({"eliminate", "--formula", "exists y . y^3 = x"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.err.rfind("UnsupportedDegree: ", 0), 0u) << r.err;
  const auto s = run({"digits", "--value", "3/2", "--count", "3"});
  EXPECT_EQ(s.status, 1);
  EXPECT_EQ(s.err.rfind("OutOfRange: ", 0), 0u) << s.err;
}

TEST(Cli, UsageErrorExitsTwo) {
  const auto r = run({"digits", "--value", "1/2", "--count", "3", "--bogus", "1"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("--bogus"), std::string::npos) << r.err;
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
}
