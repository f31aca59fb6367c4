#include "dbgf/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "dbgf/formula.hpp"

namespace dbgf::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "dbgf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, FormulaExample) {
  const auto r = run_args({"formula", "--n", "3", "--taps", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "y + y^3\n");
}

TEST(Cli, FormulaKinds) {
  EXPECT_EQ(run_args({"formula", "--n", "3", "--kind", "zero"}).out, "2y^3\n");
  EXPECT_EQ(run_args({"formula", "--n", "4", "--kind", "fryers"}).out, "y + 7y^3 + 7y^5 + y^7\n");
  EXPECT_EQ(run_args({"formula", "--n", "3", "--taps", "", "--constant", "1"}).out, "2y\n");
  EXPECT_EQ(run_args({"formula", "--n", "3", "--taps", "none"}).out, "2y^3\n");
}

TEST(Cli, SequenceExample) {
  const auto r = run_args({"sequence", "--n", "3", "--table", "0xD"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "00011101\n");
}

TEST(Cli, PolynomialJson) {
  const auto r = run_args({"formula", "--n", "3", "--taps", "1", "--format", "json"});
  EXPECT_EQ(r.out, "{\"n\":3,\"source\":\"x1\",\"coeffs\":[0,1,0,1]}\n");
  EXPECT_EQ(polynomial_from_json(r.out), (IntPolynomial{0, 1, 0, 1}));
}

TEST(Cli, JsonRoundTripsLargeCoefficients) {
  for (int n = 3; n <= 9; ++n) {
    const LinearSpec spec{n, {1}, false};
    const auto r = run_args({"formula", "--n", std::to_string(n), "--taps", "1", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(polynomial_from_json(r.out), g_linear(spec)) << n;
  }
}

TEST(Cli, ProfileJson) {
  const auto r = run_args({"cycles", "--n", "3", "--taps", "1", "--format", "json"});
  EXPECT_EQ(r.out, "[{\"r\":1,\"d\":0,\"multiplicity\":1},{\"r\":7,\"d\":4,\"multiplicity\":1}]\n");
  const auto g = run_args({"cycles", "--n", "3", "--taps", "1", "--galois", "--format", "json"});
  EXPECT_EQ(g.out, r.out);
}

TEST(Cli, EmptySearchIsHeaderOnly) {
  const auto r = run_args({"oracle", "--n", "3", "--taps", "1", "--distance", "2", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "table,weight,distance\n");
  const auto hit = run_args({"oracle", "--n", "3", "--taps", "1", "--distance", "1", "--format", "csv"});
  EXPECT_EQ(hit.out, "table,weight,distance\n0xb,3,1\n");
}

TEST(Cli, OracleAndMttRoutes) {
  EXPECT_EQ(run_args({"oracle", "--n", "4", "--taps", "1"}).out, "y + 7y^3 + 7y^5 + y^7\n");
  EXPECT_EQ(run_args({"mtt", "--n", "4", "--taps", "1"}).out, "y + 7y^3 + 7y^5 + y^7\n");
  EXPECT_EQ(run_args({"mtt", "--n", "3", "--taps", "", "--determinant"}).out, "2y^3 + 6y^4 + 6y^5 + 2y^6\n");
  EXPECT_EQ(run_args({"oracle", "--n", "3", "--taps", "1", "--format", "csv"}).out,
            "distance,count\n0,0\n1,1\n2,0\n3,1\n4,0\n");
  const auto m = run_args({"mtt", "--n", "2", "--dump-matrix"});
  EXPECT_EQ(m.out, "1 0 y 0\ny 0 1 0\n0 1 0 y\n0 y 0 1\n");
}

TEST(Cli, TreesCommand) {
  const auto r = run_args({"trees", "--n", "3", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"intree_count\":16"), std::string::npos);
  EXPECT_EQ(run_args({"trees", "--n", "3", "--taps", "1"}).out, "y + 3y^2 + 4y^3 + 4y^4 + 3y^5 + y^6\n");
}

TEST(Cli, NecklaceTable) {
  const auto r = run_args({"cycles", "--n", "3", "--necklaces"});
  EXPECT_NE(r.out.find("L(3,1) = 1"), std::string::npos);
  EXPECT_NE(r.out.find("e(3,1) = 2"), std::string::npos);
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
  const auto one = run_args({"verify", "--n", "3..4", "--workers", "1", "--format", "json"});
  const auto eight = run_args({"verify", "--n", "3..4", "--workers", "8", "--format", "json"});
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, eight.out);
  EXPECT_EQ(one.out.find("\"pass\":false"), std::string::npos);
  EXPECT_NE(one.out.find("formula_eq_oracle[n=3]"), std::string::npos);
  EXPECT_NE(one.out.find("partition.union_is_all_intrees[n=4]"), std::string::npos);
}

TEST(Cli, VerifyExitStatusFollowsReport) {
  Report r;
  r.add("ok", true, "");
  EXPECT_TRUE(r.passed());
  r.add("bad", false, "x");
  EXPECT_FALSE(r.passed());
  EXPECT_NE(render_report(r, Format::text).find("FAIL bad: x"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_args({}).code, kExitUsage);
  EXPECT_EQ(run_args({"formula", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(run_args({"formula", "--n", "x"}).code, kExitUsage);
  EXPECT_EQ(run_args({"formula", "--n", "3", "--taps", "1", "--table", "d"}).code, kExitUsage);
  EXPECT_EQ(run_args({"formula", "--n", "3", "--taps", "1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_args({"frobnicate", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(run_args({"sequence", "--n", "3..4", "--table", "d"}).code, kExitUsage);
}

TEST(Cli, InfeasibleOrderNamesAnotherRoute) {
  const auto r = run_args({"oracle", "--n", "6", "--taps", "1"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("order-too-large"), std::string::npos);
  EXPECT_NE(r.err.find("mtt"), std::string::npos);
  const auto t = run_args({"trees", "--n", "5"});
  EXPECT_EQ(t.code, kExitError);
  EXPECT_NE(t.err.find("mtt"), std::string::npos);
  EXPECT_EQ(run_args({"mtt", "--n", "13", "--taps", "1"}).code, kExitError);
  EXPECT_EQ(run_args({"sequence", "--n", "3", "--taps", ""}).code, kExitError);
}

TEST(Cli, OutFileAndEnvironmentFormat) {
  const auto path = std::filesystem::temp_directory_path() / "dbgf_cli_test_out.json";
  std::filesystem::remove(path);
  const auto r = run_args({"formula", "--n", "3", "--taps", "1", "--format", "json", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(polynomial_from_json(buf.str()), (IntPolynomial{0, 1, 0, 1}));
  std::filesystem::remove(path);

  ::setenv(kFormatEnv, "csv", 1);
  const auto c = run_args({"formula", "--n", "3", "--taps", "1"});
  ::unsetenv(kFormatEnv);
  EXPECT_EQ(c.out, "power,coefficient\n0,0\n1,1\n2,0\n3,1\n");
}

TEST(Cli, ParseHelpers) {
  EXPECT_EQ(parse_order_range("3..5"), std::make_pair(3, 5));
  EXPECT_EQ(parse_order_range("4"), std::make_pair(4, 4));
  EXPECT_THROW(parse_order_range("5..3"), Error);
  EXPECT_EQ(parse_taps("1,3"), (std::vector<int>{1, 3}));
  EXPECT_TRUE(parse_taps("").empty());
  EXPECT_THROW(parse_taps("1,,2"), Error);
}

}  // namespace
}  // namespace dbgf::cli
