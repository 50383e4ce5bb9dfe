// Copyright 2026 The Rankability Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "rankability/core/matrix_csv.h"
#include "support/fixtures.h"

namespace rankability::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rankability");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Data(const std::string& name) {
  return rankability::testing::DataPath(name);
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            ("rankability_cli_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string Write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string Path(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

// a > b > c > a in the regular season; a beats b in the playoff.
constexpr char kThreeTeamSeason[] =
    "season,stage,team_a,team_b,score_a,score_b\n"
    "2000,regular,a,b,1,0\n"
    "2000,regular,b,c,1,0\n"
    "2000,regular,c,a,1,0\n"
    "2000,playoff,a,b,1,0\n";

TEST(CliLop, CollegeFeatures) {
  const CliRun r = Cli({"lop", "--input", Data("college_features.csv"),
                     "--kind", "features"});
  ASSERT_EQ(r.code, kExitProven) << r.err;
  EXPECT_NE(r.out.find("\"k_star\": 169,"), std::string::npos);
  EXPECT_NE(r.out.find("\"lambda\": 0.751111111111111,"), std::string::npos);
  const Json j = r.json();
  EXPECT_EQ(j["ranking"], Json({10, 7, 5, 1, 8, 6, 9, 2, 3, 4}));
  EXPECT_EQ(j["ranking_labels"][0], "Williams");
  EXPECT_TRUE(VerifyReport(j, rankability::testing::CollegeFromFeatures())
                  .empty());
  EXPECT_NE(r.err.find("nodes="), std::string::npos);
}

TEST(CliLop, DigraphFourAndCsv) {
  CliRun r = Cli({"lop", "--input", Data("digraph_4.csv")});
  EXPECT_EQ(r.json()["lambda"], 0.5);
  r = Cli({"lop", "--input", Data("digraph_4.csv"), "--format", "csv"});
  EXPECT_EQ(r.out, "k_star,total,lambda,proven,ranking\n3,6,0.5,true,1 2 3\n");
}

TEST(CliLop, InputErrors) {
  TempDir dir;
  CliRun r = Cli({"lop", "--input", dir.Write("empty.csv", "")});
  EXPECT_EQ(r.code, kExitInputError);
  r = Cli({"lop", "--input", dir.Write("bad.csv", "0,1\n1,zz\n")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(Cli({"lop", "--input", dir.Path("missing.csv")}).code,
            kExitInputError);
  EXPECT_EQ(Cli({"lop"}).code, kExitInputError);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(Cli({"lop", "--input", Data("digraph_1.csv"), "--workers", "0"})
                .code,
            kExitInputError);
  EXPECT_EQ(Cli({"lop", "--input", Data("digraph_1.csv"), "--kind", "tsv"})
                .code,
            kExitInputError);
  EXPECT_EQ(Cli({"--help"}).code, kExitProven);
}

TEST(CliLop, TimeLimitGivesUnproven) {
  TempDir dir;
  std::mt19937_64 rng(83);
  const WeightMatrix a = rankability::testing::ToWeightMatrix(
      rankability::testing::RandomHalfMatrix(40, 2, rng));
  std::ostringstream text;
  WriteMatrixCsv(text, a);
  const CliRun r = Cli({"lop", "--input", dir.Write("big.csv", text.str()),
                     "--time-limit", "0.05"});
  EXPECT_EQ(r.code, kExitUnproven);
  EXPECT_EQ(r.json()["proven"], false);
  const CliRun k = Cli({"kappa", "--input", dir.Path("big.csv"), "--time-limit",
                     "0.05"});
  EXPECT_EQ(k.code, kExitUnproven);
  EXPECT_TRUE(k.json()["kappa"].is_null());
}

TEST(CliKappa, College) {
  const CliRun r = Cli({"kappa", "--input", Data("college_matrix.csv")});
  ASSERT_EQ(r.code, kExitProven) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["kappa"], 3);
  EXPECT_EQ(j["concordant_count"], 42);
  const auto optima = rankability::testing::CollegeOptima();
  for (const char* key : {"first", "second"}) {
    const Ranking w = Ranking::FromOrder(j[key].get<std::vector<int>>());
    EXPECT_NE(std::find(optima.begin(), optima.end(), w), optima.end());
  }
  EXPECT_TRUE(
      VerifyReport(j, rankability::testing::CollegeMatrix()).empty());
}

TEST(CliKappa, DigraphOneIsZero) {
  const CliRun r = Cli({"kappa", "--input", Data("digraph_1.csv")});
  EXPECT_EQ(r.json()["kappa"], 0);
  EXPECT_EQ(r.json()["first"], r.json()["second"]);
}

TEST(CliKappa, OracleAgreesOnSmallInstances) {
  TempDir dir;
  std::mt19937_64 rng(89);
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + t % 5;
    std::ostringstream text;
    WriteMatrixCsv(text, rankability::testing::ToWeightMatrix(
                             rankability::testing::RandomHalfMatrix(n, 10, rng)));
    const CliRun r = Cli({"kappa", "--input", dir.Write("m.csv", text.str()),
                       "--oracle", "--workers", "2"});
    ASSERT_EQ(r.code, kExitProven) << r.err;
    EXPECT_EQ(r.json()["oracle"]["agrees"], true);
  }
}

TEST(CliEnumerate, Fixtures) {
  CliRun r = Cli({"enumerate", "--input", Data("college_features.csv"), "--kind",
               "features"});
  ASSERT_EQ(r.code, kExitProven);
  std::vector<Ranking> listed;
  const Json report = r.json();
  for (const Json& item : report["rankings"]) {
    listed.push_back(Ranking::FromOrder(item.get<std::vector<int>>()));
  }
  auto expected = rankability::testing::CollegeOptima();
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(listed, expected);
  EXPECT_TRUE(VerifyReport(r.json(),
                           rankability::testing::CollegeFromFeatures())
                  .empty());

  r = Cli({"enumerate", "--input", Data("digraph_3.csv")});
  EXPECT_EQ(r.json()["count"], 3);
  r = Cli({"enumerate", "--input", Data("digraph_4.csv"), "--cap", "2"});
  EXPECT_EQ(r.json()["truncated"], true);
  EXPECT_EQ(r.json()["count"], 2);
}

TEST(CliSeason, ThreeTeamHandValues) {
  TempDir dir;
  const std::string games = dir.Write("games.csv", kThreeTeamSeason);
  CliRun r = Cli({"season", "--input", games, "--kind", "games", "--format",
               "csv"});
  ASSERT_EQ(r.code, kExitProven) << r.err;
  const std::string third = "0.666666666666667";
  EXPECT_EQ(r.out,
            "season,teams,regular_games,playoff_games,k_star,lambda,kappa,"
            "hind_opt,hind_colley,hind_massey,fore_opt,fore_colley,"
            "fore_massey,fore_opt_a,fore_opt_b,fore_abs_diff,optima_count,"
            "truncated,proven\n"
            "2000,3,3,1,2," + third + ",2," + third + "," + third + "," +
                third + ",1,1,1,1,0,1,3,false,true\n");

  r = Cli({"season", "--input", games, "--kind", "games"});
  const Json s = r.json()["seasons"][0];
  EXPECT_EQ(s["rankings"]["kappa_first"], Json({"a", "b", "c"}));
  EXPECT_EQ(s["rankings"]["kappa_second"], Json({"b", "c", "a"}));
  EXPECT_EQ(s["foresight"]["divergence"], 1);
  EXPECT_TRUE(r.json()["correlation"]["lambda_vs_hindsight"]["optimal"]
                  .is_null());
}

TEST(CliSeason, MultiSeasonSortedWithCorrelations) {
  const CliRun r = Cli({"season", "--input", Data("sample_games.csv"), "--kind",
                     "games"});
  ASSERT_EQ(r.code, kExitProven) << r.err;
  const Json j = r.json();
  ASSERT_EQ(j["seasons"].size(), 3u);
  int previous = 0;
  for (const Json& s : j["seasons"]) {
    EXPECT_GT(s["season"].get<int>(), previous);
    previous = s["season"].get<int>();
    const double lambda = s["lambda"].get<double>();
    for (const char* m : {"optimal", "colley", "massey"}) {
      EXPECT_LE(s["hindsight"][m].get<double>(), lambda + 1e-12);
    }
  }
  EXPECT_TRUE(j["correlation"]["lambda_vs_hindsight"]["optimal"].is_number());
  const CliRun csv = Cli({"season", "--input", Data("sample_games.csv"),
                       "--kind", "games", "--format", "csv"});
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 4);
}

TEST(CliSeason, StrictTieModeAndSingleSeasonInstances) {
  TempDir dir;
  const std::string games = dir.Write(
      "ties.csv",
      "season,stage,team_a,team_b,score_a,score_b\n"
      "2001,regular,a,b,1,1\n2001,regular,a,b,2,0\n"
      "2002,regular,a,b,0,1\n");
  const CliRun half = Cli({"season", "--input", games, "--kind", "games"});
  const CliRun strict = Cli({"season", "--input", games, "--kind", "games",
                          "--tie-mode", "strict"});
  EXPECT_EQ(half.json()["tie_mode"], "half");
  EXPECT_EQ(half.json()["seasons"][0]["hindsight"]["optimal"], 0.75);
  EXPECT_EQ(strict.json()["seasons"][0]["hindsight"]["optimal"], 0.5);

  EXPECT_EQ(Cli({"lop", "--input", games, "--kind", "games"}).code,
            kExitInputError);
  const CliRun one = Cli({"lop", "--input", games, "--kind", "games",
                       "--season", "2002"});
  ASSERT_EQ(one.code, kExitProven);
  EXPECT_EQ(one.json()["ranking_labels"], Json({"b", "a"}));
  EXPECT_EQ(Cli({"lop", "--input", games, "--kind", "games", "--season",
                 "1990"})
                .code,
            kExitInputError);
  EXPECT_EQ(Cli({"season", "--input", Data("digraph_1.csv")}).code,
            kExitInputError);
}

TEST(CliRatings, TwoTeams) {
  TempDir dir;
  const std::string games =
      dir.Write("g.csv",
                "season,stage,team_a,team_b,score_a,score_b\n"
                "2000,regular,x,y,21,14\n");
  const CliRun r = Cli({"ratings", "--input", games, "--kind", "games",
                     "--format", "csv"});
  ASSERT_EQ(r.code, kExitProven) << r.err;
  EXPECT_EQ(r.out,
            "season,team,colley,massey,colley_rank,massey_rank\n"
            "2000,x,0.625,3.5,1,1\n"
            "2000,y,0.375,-3.5,2,2\n");
}

TEST(CliOutput, WritesFileAndIgnoresWorkerCount) {
  TempDir dir;
  for (const char* fixture :
       {"college_matrix.csv", "digraph_2.csv", "digraph_4.csv"}) {
    for (const char* cmd : {"lop", "kappa", "enumerate"}) {
      const CliRun one = Cli({cmd, "--input", Data(fixture), "--workers", "1"});
      const CliRun four = Cli({cmd, "--input", Data(fixture), "--workers", "4"});
      EXPECT_EQ(one.out, four.out) << cmd << " " << fixture;
    }
  }
  const std::string path = dir.Path("report.json");
  const CliRun r = Cli({"kappa", "--input", Data("college_matrix.csv"),
                     "--output", path});
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(Json::parse(in)["kappa"], 3);
}

TEST(CliOutput, WorkersFromEnvironment) {
  ::setenv("RANKABILITY_WORKERS", "0", 1);
  const CliRun bad = Cli({"lop", "--input", Data("digraph_1.csv")});
  ::setenv("RANKABILITY_WORKERS", "3", 1);
  const CliRun good = Cli({"lop", "--input", Data("digraph_1.csv")});
  ::unsetenv("RANKABILITY_WORKERS");
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_EQ(good.code, kExitProven);
}

TEST(VerifyReport, CatchesTampering) {
  const WeightMatrix a = rankability::testing::CollegeMatrix();
  Json lop = Cli({"lop", "--input", Data("college_matrix.csv")}).json();
  lop["k_star"] = 170;
  EXPECT_FALSE(VerifyReport(lop, a).empty());

  Json kappa = Cli({"kappa", "--input", Data("college_matrix.csv")}).json();
  kappa["concordant_count"] = 41;
  EXPECT_FALSE(VerifyReport(kappa, a).empty());
  kappa = Cli({"kappa", "--input", Data("college_matrix.csv")}).json();
  kappa["second"] = Json({3, 7, 8, 5, 1, 6, 9, 2, 4, 10});
  EXPECT_FALSE(VerifyReport(kappa, a).empty());

  Json listed = Cli({"enumerate", "--input", Data("college_matrix.csv")}).json();
  std::swap(listed["rankings"][0], listed["rankings"][1]);
  EXPECT_FALSE(VerifyReport(listed, a).empty());
  EXPECT_FALSE(VerifyReport(Json::object(), a).empty());
}

TEST(JsonNumber, Formatting) {
  EXPECT_EQ(JsonNumber(169.0).dump(), "169");
  EXPECT_EQ(JsonNumber(169.0 / 225.0).dump(), "0.751111111111111");
  EXPECT_EQ(JsonNumber(0.1 + 0.2).dump(), "0.3");
  EXPECT_TRUE(JsonNumber(std::nan("")).is_null());
}

}  // namespace
}  // namespace rankability::cli
