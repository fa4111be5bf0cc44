#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/cli.hpp"
#include "support/fixtures.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = gyro::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json report(const Invocation& r) { return nlohmann::json::parse(r.out); }

std::string fixture(const char* name) { return gyro::testing::fixture_path(name).string(); }

TEST(Cli, VerifyGroupPasses) {
  const Invocation r = run({"verify", fixture("z2")});
  EXPECT_EQ(r.code, gyro::cli::kExitOk);
  const auto j = report(r);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["tool"], "gyro");
  EXPECT_EQ(j["version"], gyro::cli::kVersion);
  EXPECT_EQ(j["input_digest"].get<std::string>().rfind("sha256:", 0), 0U);
  EXPECT_TRUE(j["gyrations_trivial"].get<bool>());
}

TEST(Cli, VerifyFailureAndParseError) {
  const Invocation fail = run({"verify", fixture("loop5_aut_fail")});
  EXPECT_EQ(fail.code, gyro::cli::kExitFailure);
  EXPECT_EQ(report(fail)["status"], "fail");

  const auto bad = std::filesystem::temp_directory_path() / "gyro_cli_bad.gyro";
  std::ofstream(bad) << "2\n0 1\n1 q\n";
  const Invocation parse = run({"verify", bad.string()});
  EXPECT_EQ(parse.code, gyro::cli::kExitParse);
  EXPECT_EQ(report(parse)["error"]["kind"], "parse-error");
  std::filesystem::remove(bad);
}

TEST(Cli, CosetsOfZ4) {
  const Invocation r = run({"cosets", fixture("z4"), "--subset", "0,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(report(r)["partition"]["cells"], nlohmann::json::parse("[[0,2],[1,3]]"));
}

TEST(Cli, CosetsDomainError) {
  const Invocation r = run({"cosets", fixture("z4"), "--subset", "0,1"});
  EXPECT_EQ(r.code, gyro::cli::kExitFailure);
  EXPECT_EQ(report(r)["error"]["kind"], "not-a-subgyrogroup");
}

TEST(Cli, SearchOrderTwo) {
  const Invocation r = run({"search", "--order", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(report(r)["count"], 1);
}

TEST(Cli, SearchReportIndependentOfJobs) {
  EXPECT_EQ(run({"search", "--order", "6", "--jobs", "1"}).out,
            run({"search", "--order", "6", "--jobs", "3"}).out);
}

TEST(Cli, AxiomsMobius) {
  const Invocation r = run({"axioms", "--model", "mobius", "--samples", "1000", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  const auto j = report(r);
  for (const auto& c : j["axioms"]["checks"])
    if (c["status"] == "pass") EXPECT_LT(c["max_residual"].get<double>(), 1e-9);
  EXPECT_EQ(r.out, run({"axioms", "--model", "mobius", "--samples", "1000", "--seed", "7",
                        "--jobs", "2"}).out);
}

TEST(Cli, ChainVerdictSetsExitCode) {
  const Invocation fail = run({"chain", "--model", "mobius", "--radii", "0.5,0.333,0.25", "--samples", "200"});
  EXPECT_EQ(fail.code, gyro::cli::kExitFailure);
  EXPECT_EQ(report(fail)["status"], "fail");
  const Invocation pass = run({"chain", "--model", "einstein", "--radii", "0.9,0.2,0.04", "--samples", "200"});
  EXPECT_EQ(pass.code, 0);
  EXPECT_EQ(report(pass)["status"], "pass");
}

TEST(Cli, StarReport) {
  const Invocation r = run({"star", fixture("z6"), "--subset", "0,1,5", "--point", "2"});
  EXPECT_EQ(r.code, 0);
  const auto j = report(r);
  EXPECT_EQ(j["star"], nlohmann::json::parse("[0,1,2,3,4]"));
  EXPECT_TRUE(j["chain_holds_everywhere"].get<bool>());
}

TEST(Cli, ProductWritesTable) {
  const auto path = std::filesystem::temp_directory_path() / "gyro_cli_product.gyro";
  const Invocation r = run({"product", fixture("z2"), fixture("z3"), "--table-out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(gyro::finite::read_gyro_file(path).order(), 6);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, gyro::cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, gyro::cli::kExitUsage);
  EXPECT_EQ(run({"search"}).code, gyro::cli::kExitUsage);
  EXPECT_EQ(run({"axioms", "--model", "klein"}).code, gyro::cli::kExitUsage);
  EXPECT_EQ(run({"cosets", fixture("z4"), "--subset", "0,,2"}).code, gyro::cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutFlagWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "gyro_cli_out.json";
  const Invocation r = run({"--out", path.string(), "subs", fixture("klein4")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in)["count"], 5);
  std::filesystem::remove(path);
}

}  // namespace
