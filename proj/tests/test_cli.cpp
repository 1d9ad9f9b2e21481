#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "tribwords/cli.hpp"

using namespace tribwords;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Examples) {
  EXPECT_EQ(run({"eval", "b", "--n", "9"}).out, "0\n");
  EXPECT_EQ(run({"numeration", "encode", "17"}).out, "10100\n");
  EXPECT_EQ(run({"numeration", "encode", "0"}).out, "0\n");
  EXPECT_EQ(run({"numeration", "decode", "10100"}).out, "17\n");
  EXPECT_EQ(run({"numeration", "shift", "2"}).out, "4\n");
  EXPECT_EQ(run({"gen", "tr", "--length", "20"}).out, "01020100102010102010\n");
  EXPECT_EQ(run({"gen", "fixed-point", "--morphism", "phi", "--length", "5"}).out, "01020\n");
  EXPECT_EQ(run({"gen", "b", "--length", "10", "--method", "positional"}).out, "0100101100\n");
  EXPECT_EQ(run({"eval", "tr", "--n", "3"}).out, "2\n");
  EXPECT_EQ(run({"eval", "nth1", "--n", "4"}).out, "8\n");
  EXPECT_EQ(run({"eval", "nth0", "--n", "2"}).out, "3\n");
}

TEST(Cli, JsonOutput) {
  const Outcome r = run({"--json", "eval", "b", "--n", "1"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], 1);
  EXPECT_EQ(j["index_base"], 0);
  const auto k = nlohmann::json::parse(run({"eval", "nth1", "--n", "1", "--json"}).out);
  EXPECT_EQ(k["value"], 2);
  EXPECT_EQ(k["index_base"], 1);
}

TEST(Cli, LargestIndex) {
  const Outcome ok = run({"eval", "b", "--n", "9223372036854775807"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(ok.out == "0\n" || ok.out == "1\n");
  const Outcome big = run({"eval", "b", "--n", "9223372036854775808"});
  EXPECT_EQ(big.code, kExitInvalidInput);
  EXPECT_NE(big.err.find("exceeds"), std::string::npos);
}

TEST(Cli, InvalidInput) {
  EXPECT_EQ(run({"numeration", "decode", "0111"}).code, kExitInvalidInput);
  EXPECT_EQ(run({"eval", "b", "--n", "-3"}).code, kExitInvalidInput);
  EXPECT_EQ(run({"eval", "b", "--n", "12x"}).code, kExitInvalidInput);
  EXPECT_EQ(run({"eval", "nth1", "--n", "0"}).code, kExitInvalidInput);
  EXPECT_EQ(run({"numeration", "shift", "18446744073709551615"}).code, kExitInvalidInput);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "b"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "b", "--n", "3", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "b", "--length", "5", "--method", "fast"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "all", "--profile", "huge"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, VerifyCommands) {
  const Outcome p = run({"--json", "verify", "prop1", "--imax", "12"});
  EXPECT_EQ(p.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(p.out)["pass"].get<bool>());
  const Outcome b = run({"verify", "bounds", "--nmax", "2000", "--json"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(nlohmann::json::parse(b.out)["families"].size(), 5u);
}

TEST(Cli, AnalyzeCommands) {
  EXPECT_EQ(run({"analyze", "complexity", "--length", "4000", "--nmax", "40"}).code, 0);
  EXPECT_EQ(run({"analyze", "balance", "--k", "3", "--length", "20000", "--nmax", "60"}).code, 0);
  const Outcome two = run({"--json", "analyze", "balance", "--k", "2", "--length", "20000", "--nmax", "60"});
  EXPECT_EQ(two.code, kExitCheckFailed);
  EXPECT_EQ(nlohmann::json::parse(two.out)["witness"]["n"], 47);
  const Outcome e = run({"--json", "analyze", "exponent", "--length", "2000", "--cap", "500"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(nlohmann::json::parse(e.out)["exponent"], "54/17");
  EXPECT_EQ(run({"analyze", "bispecial", "--nmax", "60", "--length", "20000"}).code, 0);
}

TEST(Cli, DfaoFileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "tribwords_cli_test.dfao";
  const Outcome s = run({"dfao", "synth", "--depth", "16", "--out", path.string()});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(run({"dfao", "eval", "--file", path.string(), "--n", "9"}).out, "0\n");
  EXPECT_EQ(run({"dfao", "eval", "--file", path.string(), "--n", "1"}).out, "1\n");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"dfao", "eval", "--file", path.string(), "--n", "1"}).code, kExitInvalidInput);
}

TEST(Cli, DeterministicVerifyAll) {
  const Outcome a = run({"--json", "verify", "all", "--profile", "desk"});
  const Outcome b = run({"--json", "verify", "all", "--profile", "desk"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["schema"], 1);
  ASSERT_EQ(j["checks"].size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) {
    char id[8];
    std::snprintf(id, sizeof id, "C%02zu", i + 1);
    EXPECT_EQ(j["checks"][i]["id"], id);
    EXPECT_TRUE(j["checks"][i]["pass"].get<bool>()) << id;
  }
}
