#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include "support.hpp"

using weyl::testing::GoldenCase;
using weyl::testing::run_cli;

namespace {

bool updating() {
  const char* v = std::getenv("WEYL_UPDATE_GOLDEN");
  return v && std::string(v) == "1";
}

}  // namespace

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesRecordedOutput) {
  const auto& c = GetParam();
  const auto r = run_cli(c.args);
  EXPECT_EQ(r.exit_code, c.exit_code) << r.output;
  const std::string path = weyl::testing::golden_path(c);
  if (updating()) {
    std::ofstream(path, std::ios::binary) << r.output;
    return;
  }
  const std::string expect = weyl::testing::read_file(path);
  ASSERT_FALSE(expect.empty()) << "missing golden " << path;
  EXPECT_EQ(r.output, expect);
}

TEST_P(Golden, Deterministic) {
  const auto& c = GetParam();
  EXPECT_EQ(run_cli(c.args).output, run_cli(c.args).output);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(weyl::testing::golden_cases()),
                         [](const ::testing::TestParamInfo<GoldenCase>& info) { return std::string(info.param.name); });

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("nosuch").exit_code, 2);
  EXPECT_EQ(run_cli("--format xml orbit --tensor zeta11.json").exit_code, 2);
  EXPECT_EQ(run_cli("complex boundary --expr \"[a|b\"").exit_code, 2);
  EXPECT_EQ(run_cli("complex homology --group Z --level 1 --degree 2").exit_code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli("--help").exit_code, 0); }
