#include <gtest/gtest.h>

#include "golden_runner.hpp"

using namespace support;

namespace
{

fs::path const kGolden = ORDHOMEO_GOLDEN_DIR;

Outcome run(std::vector<std::string> const &args) { return run_cli_in(kGolden, args); }

class Golden : public testing::TestWithParam<std::string>
{};

} // namespace

TEST_P(Golden, ByteExact)
{
  GoldenCase c = load_golden_case(kGolden, GetParam());
  Outcome got = run(c.args);
  EXPECT_EQ(got.code, c.expected.code);
  EXPECT_EQ(got.out, c.expected.out);
  EXPECT_EQ(got.err, c.expected.err);
}

INSTANTIATE_TEST_SUITE_P(Corpus, Golden, testing::ValuesIn(golden_case_names(kGolden)),
                         [](testing::TestParamInfo<std::string> const &info) { return info.param; });

TEST(GoldenCorpus, IsLargeEnough) { EXPECT_GE(golden_case_names(kGolden).size(), 25u); }

TEST(Cli, HelpExitsCleanly)
{
  Outcome o = run({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("ord"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(run({"ord", "eval", "w+"}).code, 2);
  EXPECT_EQ(run({"ord", "sub", "w*2", "w"}).code, 1);
  EXPECT_EQ(run({"ord", "bogus"}).code, 2);
  EXPECT_EQ(run({"ord", "rank", "w", "w"}).code, 2);
  EXPECT_EQ(run({"sieve", "hall", "data/no_such_file.cs"}).code, 2);
  EXPECT_EQ(run({"homeo", "apply", "data/swap.hom", "w^w"}).out, "w^(w)\n");
}

TEST(Cli, ResourceCapExitsWithThree)
{
  std::string deep = "w";
  for (int i = 0; i < 2000; ++i)
    deep = "w^(" + deep + ")";
  EXPECT_EQ(run({"ord", "eval", deep}).code, 3);
}
