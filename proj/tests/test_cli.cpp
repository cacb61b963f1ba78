#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "taumut/presets.hpp"

using taumut::cli::main_with;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = main_with(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"explore"}).code, 2);
  EXPECT_EQ(run({"explore", "--preset", "nonsense"}).code, 2);
  EXPECT_EQ(run({"explore", "--preset", "a-path:2", "--field", "fp:4"}).code, 2);
  EXPECT_EQ(run({"explore", "--preset", "a-path:2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"count", "--kind", "spiral"}).code, 2);
  EXPECT_EQ(run({"explore", "--algebra", "/nonexistent/file"}).code, 2);
}

TEST(Cli, ExploreSummary) {
  auto r = run({"explore", "--preset", "a-path:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "14 vertices, 21 arrows, complete\n");
}

TEST(Cli, IncompleteExitsThree) {
  auto r = run({"explore", "--preset", "msex", "--max-depth", "4"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("incomplete"), std::string::npos);
}

TEST(Cli, CountPrintsKnownValue) {
  auto r = run({"count", "--kind", "cyclic", "--n", "4", "--l", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("b(4,4) = 70"), std::string::npos);
  auto c = run({"count", "--kind", "linear", "--n", "3", "--l", "2", "--check"});
  EXPECT_EQ(c.code, 0);
}

TEST(Cli, DotIsDeterministic) {
  auto a = run({"explore", "--preset", "preproj-a:3", "--format", "dot"});
  auto b = run({"explore", "--preset", "preproj-a:3", "--format", "dot"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(count_of(a.out, "->"), 36u);
}

TEST(Cli, FieldDotHasOneEdge) {
  auto r = run({"explore", "--preset", "a-path:1", "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_of(r.out, "label="), 3u);  // 2 nodes, 1 edge
  EXPECT_EQ(count_of(r.out, "->"), 1u);
  EXPECT_NE(r.out.find("[label=\"1\"]"), std::string::npos);
}

TEST(Cli, DepthZeroSingleNode) {
  auto r = run({"explore", "--preset", "a-path:3", "--max-depth", "0", "--format", "dot"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(count_of(r.out, "label="), 1u);
  EXPECT_EQ(count_of(r.out, "->"), 0u);
}

TEST(Cli, AlgebraFileMatchesPreset) {
  std::string path = ::testing::TempDir() + "taumut_a3.alg";
  {
    std::ofstream f(path);
    f << taumut::presets::a_path(3).serialize();
  }
  auto r = run({"explore", "--algebra", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "14 vertices, 21 arrows, complete\n");
  std::remove(path.c_str());
}

TEST(Cli, PresetsRoundTrip) {
  for (const char* name : {"a-path:3", "nakayama:linear:4:2", "nakayama:cyclic:3:3", "preproj-a:3", "msex", "a3-figure"}) {
    auto s = taumut::presets::by_name(name);
    auto text = s.serialize();
    EXPECT_EQ(taumut::AlgebraSpec::parse(text).serialize(), text) << name;
  }
}

TEST(Cli, VerifyAndRestrict) {
  EXPECT_EQ(run({"verify", "--preset", "nakayama:cyclic:3:2"}).code, 0);
  EXPECT_EQ(run({"restrict", "--preset", "a-path:3", "--rigid", "010"}).code, 0);
  EXPECT_EQ(run({"restrict", "--preset", "a-path:3", "--rigid", "999"}).code, 2);
}

TEST(Cli, QuotientRejectsNonCentral) {
  auto r = run({"quotient", "--preset", "nakayama:cyclic:2:3", "--generator", "a1"});
  EXPECT_EQ(r.code, 1);
  auto ok = run({"quotient", "--preset", "nakayama:cyclic:2:3", "--generator", "a1.a2", "--generator", "a2.a1"});
  EXPECT_EQ(ok.code, 0);
}

TEST(Cli, EnvironmentFieldAndFlagPrecedence) {
  setenv("TAUMUT_FIELD", "fp:5", 1);
  EXPECT_EQ(run({"explore", "--preset", "a-path:2"}).out, "5 vertices, 5 arrows, complete\n");
  EXPECT_EQ(run({"explore", "--preset", "a-path:2", "--field", "q"}).code, 0);
  setenv("TAUMUT_FIELD", "garbage", 1);
  EXPECT_EQ(run({"explore", "--preset", "a-path:2"}).code, 2);
  EXPECT_EQ(run({"explore", "--preset", "a-path:2", "--field", "q"}).code, 0);
  unsetenv("TAUMUT_FIELD");
}
