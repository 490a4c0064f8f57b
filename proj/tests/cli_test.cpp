#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <json.hpp>

#include "commands.hpp"
#include "support.hpp"

namespace donsum::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  nlohmann::json machine() const {
    const std::string marker = "--- machine ---\n";
    const auto pos = out.rfind(marker);
    if (pos == std::string::npos) return nullptr;
    return nlohmann::json::parse(out.substr(pos + marker.size()));
  }
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "donsum");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return test::data_path(name); }

TEST(Cli, EvalReference) {
  const Outcome o = run_cli({"eval", "--manifold", data("k3_2blowup.json"), "--class", "s*sigma"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.machine()["value"], "(1/4)*exp(2*s) - (1/4)*exp(-2*s)");
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "(1/4)*exp(2*s) - (1/4)*exp(-2*s)");
}

TEST(Cli, EvalCombinedWithPointClass) {
  const Outcome o =
      run_cli({"eval", "--manifold", data("k3_2blowup.json"), "--class", "s*sigma", "--combined", "--x-power", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.machine()["value"], "(1/2)*exp(2*s) - (1/2)*exp(-2*s)");
}

TEST(Cli, EvalEmptySeries) {
  const Outcome o = run_cli({"eval", "--manifold", data("empty_series.json"), "--class", "s*sigma"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.machine()["value"], "0");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"eval", "--manifold", data("bad_length.json"), "--class", "s*sigma"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"eval", "--manifold", data("malformed.json"), "--class", "s*sigma"}).code, kExitParse);
  EXPECT_EQ(run_cli({"eval", "--manifold", data("k3_2blowup.json"), "--class", "s*"}).code, kExitParse);
  EXPECT_EQ(run_cli({"eval", "--manifold", data("k3_2blowup.json"), "--class", "s*nope"}).code, kExitParse);
  EXPECT_EQ(run_cli({"eval"}).code, kExitParse);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitParse);
  EXPECT_EQ(run_cli({"predict", "--genus", "1"}).code, kExitPrecondition);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, ValidateReportsViolations) {
  const Outcome ok = run_cli({"validate", "--manifold", data("k3_2blowup.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(ok.machine()["valid"].get<bool>());
  const Outcome bad = run_cli({"validate", "--manifold", data("invalid_b1.json")});
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_EQ(bad.machine()["violations"][0]["code"], "b1");
}

std::string temp_file(const char* name) { return ::testing::TempDir() + name; }

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

TEST(Cli, GlueReferencePair) {
  const std::string out = temp_file("glue_ref.json");
  const Outcome o = run_cli({"glue", "--m1", data("k3_2blowup.json"), "--m2", data("k3_2blowup.json"), "--probe",
                             "a*m1.E1 - a*m1.E2 + s*sigma + t*D", "--out", out});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.machine()["nonzero_rules"], 2);
  const auto report = read_json(out);
  std::vector<std::string> sums;
  for (const auto& r : report["rules"])
    if (r["sum"] != "0") sums.push_back(r["sum"]);
  std::sort(sums.begin(), sums.end());
  EXPECT_EQ(sums, (std::vector<std::string>{"-2", "2"}));
  EXPECT_EQ(report["topology"]["euler"], 56);
  EXPECT_EQ(report["probe_value"], "2*exp(-a^2 + s*t + 2*s + 2*t) - 2*exp(-a^2 + s*t - 2*s - 2*t)");
}

TEST(Cli, GlueZeroSectorSide) {
  const std::string out = temp_file("glue_zero.json");
  const Outcome o =
      run_cli({"glue", "--m1", data("k3_2blowup.json"), "--m2", data("zero_sector.json"), "--out", out});
  ASSERT_EQ(o.code, 0) << o.err;
  for (const auto& r : read_json(out)["rules"]) EXPECT_EQ(r["sum"], "0");
}

TEST(Cli, GlueRejectsGenusThree) {
  const std::string out = temp_file("glue_g3.json");
  EXPECT_EQ(run_cli({"glue", "--m1", data("genus3.json"), "--m2", data("genus3.json"), "--out", out}).code,
            kExitValidation);
}

TEST(Cli, GlueRejectsNonOrthogonalProbe) {
  const std::string out = temp_file("glue_probe.json");
  EXPECT_EQ(run_cli({"glue", "--m1", data("k3_2blowup.json"), "--m2", data("k3_2blowup.json"), "--probe", "a*m1.E1",
                     "--out", out})
                .code,
            kExitPrecondition);
}

TEST(Cli, VerifyDefaultPasses) {
  const Outcome o = run_cli({"verify"});
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_TRUE(o.machine()["passed"].get<bool>());
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyWithWrongPointClassFails) {
  for (const char* conv : {"printed", "opposite"}) {
    const Outcome o = run_cli({"verify", "--section", "cap", "--mu-x", conv});
    EXPECT_EQ(o.code, kExitVerifyFailed);
    EXPECT_NE(o.out.find("FAIL cap/mu-x-oracle"), std::string::npos);
  }
}

TEST(Cli, VerifySingleSection) {
  const Outcome o = run_cli({"verify", "--section", "ring"});
  ASSERT_EQ(o.code, 0);
  for (const auto& c : o.machine()["checks"]) EXPECT_EQ(c["section"], "ring");
}

TEST(Cli, Predict) {
  const Outcome o = run_cli({"predict", "--genus", "3"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.machine()["value"], "4096");
  EXPECT_EQ(o.machine()["status"], "conjecture");
}

TEST(Cli, FormatIsIdempotent) {
  const Outcome once = run_cli({"format", "--manifold", data("k3_2blowup.json")});
  ASSERT_EQ(once.code, 0);
  const std::string path = temp_file("formatted.json");
  std::ofstream(path) << once.out;
  EXPECT_EQ(run_cli({"format", "--manifold", path}).out, once.out);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"eval", "--manifold", data("k3_2blowup.json"), "--class",
                                      "s*sigma + t*dbar + u*E1", "--combined"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, QuietVerbosityLeavesMachineBlockOnly) {
  setenv("DONSUM_VERBOSE", "0", 1);
  const Outcome o = run_cli({"predict", "--genus", "2"});
  unsetenv("DONSUM_VERBOSE");
  EXPECT_EQ(o.out.rfind("--- machine ---", 0), 0u);
}

}  // namespace
}  // namespace donsum::cli
