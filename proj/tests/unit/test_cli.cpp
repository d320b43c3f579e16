#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cyclecover/fp_poly.hpp"
#include "cyclecover_cli/cli.hpp"

using nlohmann::json;
namespace cli = cyclecover::cli;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

const char* kGenus13Job = R"({"p": 7, "n": 2, "field_poly": [4, -1, 1], "r": 3,
  "f": [[0,0],[5,6],[5,4],[0,1],[6,0],[0,0],[0,6],[0,4],[4,2],[3,0],[6,3],[0,1],[0,2],[5,2],[0,0],[1,0]],
  "options": {"threads": 2}})";

}  // namespace

TEST(Cli, Genus13Report) {
  auto o = run({"--input", write_temp("g13.json", kGenus13Job), "--json"});
  ASSERT_EQ(o.code, 0) << o.err;
  json rep = json::parse(o.out);
  EXPECT_EQ(rep["genus"], 13);
  EXPECT_EQ(rep["delta"], 3);
  EXPECT_EQ(rep["basis"], "Bprime");
  EXPECT_EQ(rep["weil_coefficients"][0], "4");
  EXPECT_EQ(rep["weil_coefficients"][1], "-88");
  EXPECT_EQ(rep["weil_coefficients"][12], "227741125446");
  EXPECT_EQ(rep["jacobian_order"], "9791561708530097693364");
  std::vector<std::string> keys;
  for (auto it = rep.begin(); it != rep.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"N", "N0", "W", "basis", "coefficients", "cycles", "delta", "field_poly",
                                            "genus", "jacobian_order", "timings", "verification",
                                            "weil_coefficients"}));
}

TEST(Cli, ReportRoundTripAndFunctionalEquation) {
  auto o = run({"--p", "11", "--r", "3", "--f", "[5, 1, 0, 2, 1]", "--json"});
  ASSERT_EQ(o.code, 0) << o.err;
  json rep = json::parse(o.out);
  int g = rep["genus"];
  auto a = rep["weil_coefficients"].get<std::vector<std::string>>();
  auto c = rep["coefficients"].get<std::vector<std::string>>();
  ASSERT_EQ(static_cast<int>(c.size()), 2 * g + 1);
  cyclecover::BigInt q = 11, qi = 1;
  for (int i = 1; i <= g; ++i) {
    EXPECT_EQ(c[2 * g - i], a[i - 1]);
    qi *= q;
    cyclecover::BigInt lower(c[g - i]);
    cyclecover::BigInt expect = qi * (i == g ? cyclecover::BigInt(1) : cyclecover::BigInt(a[g - i - 1]));
    EXPECT_EQ(lower, expect);
  }
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"--p", "5", "--n", "2", "--r", "2", "--f", "[[1,1],[0,2],[3,0],[1,0]]", "--seed", "9"};
  auto a = json::parse(run(args).out), b = json::parse(run(args).out);
  a.erase("timings");
  b.erase("timings");
  EXPECT_EQ(a.dump(), b.dump());
  auto fp = a["field_poly"].get<std::vector<long>>();
  EXPECT_EQ(fp.size(), 3u);
  EXPECT_TRUE(cyclecover::fp::is_irreducible(fp, 5));
}

TEST(Cli, VerifyAgainstOracle) {
  auto o = run({"--p", "7", "--r", "3", "--f", "[1, 2, 0, 3, 1]", "--verify", "--basis", "b"});
  ASSERT_EQ(o.code, 0) << o.err;
  json rep = json::parse(o.out);
  EXPECT_EQ(rep["basis"], "B");
  EXPECT_EQ(rep["verification"]["match"], true);
}

TEST(Cli, TextOutput) {
  auto o = run({"--p", "7", "--r", "2", "--f", "[0, -1, 0, 1]", "--text"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("a_1 = 0"), std::string::npos);
  EXPECT_NE(o.out.find("jacobian order: 8"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--p", "5", "--r", "4", "--f", "[0, 0, 1, 1]"}).code, cli::kNotSquarefree);
  EXPECT_EQ(run({"--p", "3", "--r", "3", "--f", "[1, 0, 0, 1]"}).code, cli::kCharacteristicDividesDegree);
  EXPECT_EQ(run({"--input", write_temp("bad.json", "{\"p\": 7, ")}).code, cli::kMalformed);
  EXPECT_EQ(run({"--input", write_temp("nof.json", "{\"p\": 7, \"r\": 2}")}).code, cli::kMalformed);
  EXPECT_EQ(run({"--p", "7", "--r", "2", "--f", "[1, 0, 0, 2]"}).code, cli::kMalformed);
  EXPECT_EQ(run({"--p", "8", "--r", "3", "--f", "[1, 0, 0, 1]"}).code, cli::kMalformed);
  EXPECT_EQ(run({"--basis", "c", "--p", "7", "--r", "2", "--f", "[1, 0, 0, 1]"}).code, cli::kMalformed);
  EXPECT_EQ(run({"--p", "7", "--r", "2", "--f", "[1, 0, 0, 1]", "--json", "--text"}).code, cli::kMalformed);
}

TEST(Cli, ParseJobIntegersForPrimeField) {
  cli::JobSpec job = cli::parse_job(R"({"p": 5, "r": 2, "f": [1, 2, 3, 1], "options": {"basis": "b", "verify": true}})");
  EXPECT_EQ(job.n, 1);
  EXPECT_EQ(job.f.size(), 4u);
  EXPECT_EQ(job.f[2], std::vector<long>{3});
  EXPECT_TRUE(job.verify);
  EXPECT_EQ(job.basis, cyclecover::BasisKind::B);
}
