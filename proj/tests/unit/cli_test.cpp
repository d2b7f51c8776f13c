#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"

namespace linrel::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliPhi, AllMethodsAgree) {
  const Result r = invoke({"phi", "2", "2", "0", "0", "5", "--method", "all"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "closed     85\n"
            "series     85\n"
            "convolve   85\n"
            "enumerate  85\n"
            "AGREE\n");
}

TEST(CliPhi, SingleMethod) {
  EXPECT_EQ(invoke({"phi", "3", "2", "0", "12", "11"}).out, "5665\n");
  EXPECT_EQ(invoke({"phi", "1", "1", "0", "9", "5"}).out, "0\n");
  EXPECT_EQ(invoke({"phi", "2", "3", "-2", "-7", "6", "--method", "convolve"}).out,
            invoke({"phi", "3", "2", "-2", "7", "6", "--method", "enumerate"}).out);
}

TEST(CliPhi, LargeCountsPrintExactly) {
  const Result r = invoke({"phi", "6", "6", "0", "0", "3000"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.find_first_not_of("0123456789\n"), std::string::npos);
  EXPECT_GT(r.out.size(), 30u);
}

TEST(CliPhi, BudgetAndUsageExitCodes) {
  EXPECT_EQ(invoke({"phi", "4", "4", "0", "0", "30", "--method", "enumerate"}).code, kBudget);
  const Result all = invoke({"phi", "4", "4", "0", "0", "30", "--method", "all"});
  EXPECT_EQ(all.code, kOk);
  EXPECT_NE(all.out.find("skipped (budget)"), std::string::npos);
  EXPECT_EQ(invoke({"phi", "0", "1", "0", "0", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"phi", "1", "1", "0", "0", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"phi", "1", "1", "0", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"phi", "1", "1", "0", "0", "3", "--method", "magic"}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
}

TEST(CliPhi, JsonAndCsv) {
  const Result j = invoke({"--format", "json", "phi", "2", "2", "0", "0", "5", "--method", "all"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["counts"]["closed"], "85");
  EXPECT_EQ(doc["verdict"], "AGREE");
  EXPECT_EQ(doc["spec"]["h"], 2);

  const Result c = invoke({"phi", "2", "2", "0", "0", "5", "--format", "csv"});
  EXPECT_EQ(c.out, "method,count\nclosed,85\n");
}

TEST(CliPoly, Examples) {
  const Result quad = invoke({"poly", "2", "2", "0", "0"});
  EXPECT_EQ(quad.code, kOk);
  EXPECT_NE(quad.out.find("2/3*n^3 + 1/3*n\n"), std::string::npos);

  const Result zero = invoke({"poly", "3", "2", "0", "0"});
  EXPECT_NE(zero.out.find("11/24*n^4 + 1/4*n^3 + 1/24*n^2 + 1/4*n\n"), std::string::npos);

  const Result twelve = invoke({"--format", "json", "poly", "3", "2", "0", "12"});
  const auto doc = nlohmann::json::parse(twelve.out);
  EXPECT_EQ(doc["poly_text"], "11/24*n^4 + 25/4*n^3 - 935/24*n^2 - 3875/4*n + 6006");
  EXPECT_EQ(doc["n0_observed"], 11);
  EXPECT_EQ(doc["n0_bound"], 11);
  EXPECT_EQ(doc["u0_fixed"], 2);
  EXPECT_EQ(doc["poly"]["0"], "6006");

  const Result csv = invoke({"--format", "csv", "poly", "2", "2", "0", "0"});
  EXPECT_NE(csv.out.find("coeff_3,2/3\n"), std::string::npos);
}

TEST(CliTable, DefaultAndExtras) {
  const Result def = invoke({"table"});
  EXPECT_EQ(def.code, kOk);
  EXPECT_NE(def.out.find("   7  0.36537   2.5576\n"), std::string::npos);
  EXPECT_NE(def.out.find("  10  0.30669   3.0669\n"), std::string::npos);
  EXPECT_EQ(def.out.find("  11  "), std::string::npos);

  const Result extra = invoke({"--format", "csv", "table", "--max-h", "1", "--extra", "20,30,40,50"});
  EXPECT_EQ(extra.out.substr(0, extra.out.find('\n')), "h,ell,U,ell_exact,U_exact");
  EXPECT_NE(extra.out.find("\n50,0.13799,6.8995,"), std::string::npos);

  const Result one = invoke({"--format", "json", "table", "--max-h", "1"});
  const auto doc = nlohmann::json::parse(one.out);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["ell"], "1.0000");
  EXPECT_EQ(doc[0]["U"], "1.0000");

  EXPECT_EQ(invoke({"table", "--extra", "3,x"}).code, kUsage);
  EXPECT_EQ(invoke({"table", "--max-h", "0"}).code, kUsage);
}

TEST(CliVerify, SmallGridsAndFaultInjection) {
  const Result tiny = invoke({"verify", "--grid", "n<=1"});
  EXPECT_EQ(tiny.code, kOk);
  EXPECT_NE(tiny.out.find("PASS, 0 disagreements"), std::string::npos);

  const Result fault = invoke({"verify", "--grid", "hk<=3,n<=3", "--inject-fault"});
  EXPECT_EQ(fault.code, kFailure);
  EXPECT_NE(fault.out.find("FAIL, 1 disagreements"), std::string::npos);

  EXPECT_EQ(invoke({"verify", "--grid", "q<=3"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--grid", "n<3"}).code, kUsage);
}

TEST(CliVerify, GridParsing) {
  const Grid g = parse_grid("hk<=4,|m|<=1,|c|<=3,n<=5");
  EXPECT_EQ(g.max_arity, 4);
  EXPECT_EQ(g.max_abs_m, 1);
  EXPECT_EQ(g.max_abs_c, 3);
  EXPECT_EQ(g.max_n, 5);
  const Grid d = parse_grid("n<=1");
  EXPECT_EQ(d.max_arity, 6);
  EXPECT_EQ(d.max_n, 1);
  EXPECT_EQ(parse_grid("").max_n, 12);
  EXPECT_THROW(parse_grid("hk<=1"), std::invalid_argument);
}

TEST(CliVerify, LibraryReport) {
  EXPECT_TRUE(run_verification(parse_grid("hk<=4,n<=4")).passed());
  const VerifyReport bad = run_verification(parse_grid("hk<=4,n<=4"), true);
  EXPECT_FALSE(bad.passed());
  EXPECT_EQ(bad.disagreements, 1u);
  ASSERT_EQ(bad.samples.size(), 1u);
}

TEST(CliEnergy, Examples) {
  const Result interval = invoke({"energy", "interval:0:2", "2"});
  EXPECT_EQ(interval.code, kOk);
  EXPECT_NE(interval.out.find("omega            3/4\n"), std::string::npos);
  EXPECT_NE(interval.out.find("kappa            3/2\n"), std::string::npos);
  EXPECT_NE(interval.out.find("product          9/8\n"), std::string::npos);

  const Result set = invoke({"--format", "json", "energy", "set:0,1,3", "2"});
  EXPECT_EQ(nlohmann::json::parse(set.out)["psi"], "15");

  EXPECT_EQ(invoke({"energy", "interval:0", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"energy", "set:", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"energy", "cube:1", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"energy", "set:0,1000000000", "2"}).code, kBudget);
}

TEST(CliSetSpec, Parsing) {
  EXPECT_EQ(parse_set_spec("interval:-2:3"), IntSet::interval(-2, 3));
  EXPECT_EQ(parse_set_spec("set:3,0,1"), IntSet({0, 1, 3}));
  EXPECT_THROW(parse_set_spec("interval:0:0"), std::invalid_argument);
  EXPECT_THROW(parse_set_spec("set:1,,2"), std::invalid_argument);
}

TEST(CliOgf, Coefficients) {
  EXPECT_EQ(invoke({"ogf", "--count", "3"}).out, "0, 1, 20\n");
  EXPECT_EQ(invoke({"ogf", "--count", "3", "--format", "csv"}).out, "j,coefficient\n0,0\n1,1\n2,20\n");
  EXPECT_EQ(invoke({"ogf", "--count", "0"}).code, kUsage);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"--format", "json", "table", "--extra", "20"},
      {"--format", "csv", "poly", "4", "2", "-1", "3"},
      {"phi", "3", "3", "1", "2", "9", "--method", "all"},
      {"--format", "json", "energy", "set:-3,0,4,9", "3"},
  };
  for (const auto& args : commands) {
    const Result a = invoke(args);
    const Result b = invoke(args);
    EXPECT_EQ(a.code, kOk);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, Help) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace linrel::cli
