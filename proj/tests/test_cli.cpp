#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "permfunc/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = permfunc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = PERMFUNC_TEST_DATA;

} // namespace

TEST(Cli, DeterminantExample) {
  const auto r = run({"det", "--a", "2", "--b", "-1i", "--theta", "(1 5 3)(2 6)", "--tau", "(2 4 6)", "--n", "6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "-85+30i\n");
}

TEST(Cli, AllRoutesAgree) {
  const auto r = run({"det", "--a", "2", "--b=-1i", "--theta", "(1 5 3)(2 6)", "--tau", "(2 4 6)", "--n", "6",
                      "--method", "naive,formula,closed,cauchy-binet", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 4U);
  for (const auto& entry : doc) {
    EXPECT_EQ(entry["value"]["re"], "-85");
    EXPECT_EQ(entry["value"]["im"], "30");
  }
  EXPECT_EQ(doc[0]["terms"], 720);
  EXPECT_EQ(doc[1]["terms"], 4);
  EXPECT_EQ(doc[3]["terms"], 924);
}

TEST(Cli, XSetListing) {
  const auto r = run({"xset", "--theta", "(1 5 3)(2 6)", "--tau", "(2 4 6)", "--n", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1 5 3)(2 6)\n(2 6)\n(1 5 3)(2 4 6)\n(2 4 6)\n");
}

TEST(Cli, BlockExample) {
  const auto r = run({"block-gmf", "--spec", kData + "/block_m4_n2.json", "--character", "trivial"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "448+1536i\n");
  const auto d = run({"block-gmf", "--spec", kData + "/block_m4_n2.json", "--character", "sign", "--method", "naive"});
  EXPECT_EQ(d.out, "448-1536i\n");
}

TEST(Cli, SubgroupAndTableCharacter) {
  const auto r = run({"gmf", "--a", "1", "--b", "2", "--theta", "(1 5 3)(2 6)", "--tau", "(2 4 6)", "--n", "6",
                      "--group", "stab:1,3,5", "--character", "table:" + kData + "/stab135_sign.json", "--method",
                      "formula,naive"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "formula: 72 (2 terms)\nnaive: 72 (6 terms)\n");
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"per", "--a", "1", "--b", "1", "--theta", "id", "--tau", "(1 2 3)", "--n", "3"}).out, "2\n");
  EXPECT_EQ(run({"s-det", "--theta", "(1 2 3 4 5 6)", "--n", "6", "--method", "closed,naive,formula"}).code, 0);
  EXPECT_EQ(run({"s-det", "--theta", "(1 2 3 4 5 6)", "--n", "6"}).out, "-4\n");
  EXPECT_EQ(run({"psd", "--a", "3", "--b", "-2", "--theta", "id", "--tau", "(1 2)", "--n", "3"}).out,
            "PSD k=3 m=-2 pi=(1 2) condition=2\n");
  EXPECT_EQ(run({"psd", "--a", "1", "--b", "1", "--theta", "(1 2 3)", "--tau", "id", "--n", "3"}).out, "NotPSD\n");
  const auto sv = run({"singvals", "--a", "1", "--b", "1", "--theta", "id", "--tau", "(1 2)", "--n", "2", "--json"});
  EXPECT_EQ(nlohmann::json::parse(sv.out)["values"].size(), 2U);
  EXPECT_EQ(run({"dominance", "--k", "2", "--m", "1", "--pi", "(1 2)", "--n", "3", "--character", "irr:[2,1]"}).code, 0);
  EXPECT_EQ(run({"bound", "--a", "1", "--b", "2", "--theta", "(1 2)", "--tau", "id", "--n", "3"}).code, 0);
  EXPECT_EQ(run({"tensor-check", "--a", "1", "--b", "2", "--theta", "(1 2)", "--tau", "id", "--n", "3", "--character",
                 "sign"})
                .code,
            0);
}

TEST(Cli, BenchReportsTermCounts) {
  const auto r = run({"bench", "--a", "2", "--b", "-1i", "--theta", "(1 5 3)(2 6)", "--tau", "(2 4 6)", "--n", "6",
                      "--reps", "1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["consistent"]);
  for (const auto& row : doc["rows"]) {
    EXPECT_EQ(row["terms"], row["expected_terms"]);
  }
}

TEST(Cli, ExitCodes) {
  using permfunc::cli::ExitCode;
  EXPECT_EQ(run({}).code, ExitCode::kParseError);
  EXPECT_EQ(run({"det", "--a", "2"}).code, ExitCode::kParseError);
  EXPECT_EQ(run({"det", "--a", "x", "--n", "3"}).code, ExitCode::kParseError);
  EXPECT_EQ(run({"det", "--theta", "(1 9)", "--n", "3"}).code, ExitCode::kParseError);
  EXPECT_EQ(run({"gmf", "--n", "3", "--character", "irr:[3,1]"}).code, ExitCode::kDomainError);
  EXPECT_EQ(run({"dominance", "--k", "1", "--m", "2", "--pi", "(1 2)", "--n", "2"}).code, ExitCode::kDomainError);
  EXPECT_EQ(run({"bound", "--n", "3", "--character", "irr:[2,1]"}).code, ExitCode::kDomainError);
  EXPECT_EQ(run({"tensor-check", "--n", "3", "--character", "irr:[2,1]", "--tau", "(1 2)"}).code,
            ExitCode::kCheckFailed);
  EXPECT_EQ(run({"block-gmf", "--spec", "/nonexistent.json"}).code, ExitCode::kParseError);
  EXPECT_EQ(run({"det", "--n", "3", "--method", "bogus"}).code, ExitCode::kParseError);
}
