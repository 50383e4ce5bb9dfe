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

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "rankability/core/errors.h"
#include "rankability/core/matrix_csv.h"
#include "rankability/core/ordering.h"
#include "rankability/kt/kt.h"
#include "rankability/lop/lop.h"
#include "rankability/rating/rating.h"
#include "rankability/sports/analysis.h"
#include "rankability/sports/csv.h"

namespace rankability::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string kind = "matrix";
  std::string format = "json";
  std::string output;
  std::optional<double> time_limit;
  int workers = 1;
  std::int64_t cap = 1'000'000;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::string tie_mode = "half";
  bool oracle = false;
  std::string aliases;
  std::optional<int> season;
};

std::string FormatNumber(double value) {
  if (value == std::floor(value) && std::abs(value) < 9e15) {
    return std::to_string(static_cast<std::int64_t>(value));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

SolverConfig ToSolverConfig(const Options& o) {
  SolverConfig cfg;
  cfg.time_limit_seconds = o.time_limit;
  cfg.parallel_workers = o.workers;
  cfg.enumeration_cap = o.cap;
  cfg.tolerance = o.tolerance;
  cfg.rng_seed = o.seed;
  cfg.Validate();
  return cfg;
}

TieMode ToTieMode(const Options& o) {
  return o.tie_mode == "strict" ? TieMode::kStrict : TieMode::kHalf;
}

// Opens --input; "-" reads standard input.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") {
      stream_ = &std::cin;
      return;
    }
    file_.open(path);
    if (!file_) {
      throw Error(ErrorCode::kEmptyInput, "cannot open '" + path + "'");
    }
    stream_ = &file_;
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

GameSet LoadGames(const Options& o) {
  if (o.kind != "games") {
    throw Error(ErrorCode::kInvalidConfig, "this command needs --kind games");
  }
  std::optional<AliasMap> aliases;
  if (!o.aliases.empty()) {
    Input alias_in(o.aliases);
    aliases = ReadAliasCsv(alias_in.get());
  }
  Input in(o.input);
  GameSet games = ReadGamesCsv(in.get(), aliases ? &*aliases : nullptr);
  if (o.season.has_value()) {
    GameSet one = games.Season(*o.season);
    if (one.empty()) {
      throw Error(ErrorCode::kEmptyInput,
                  "no games in season " + std::to_string(*o.season));
    }
    return one;
  }
  return games;
}

// The LOP instance behind lop / kappa / enumerate.
WeightMatrix LoadInstance(const Options& o) {
  if (o.kind == "matrix") {
    Input in(o.input);
    return ReadMatrixCsv(in.get());
  }
  if (o.kind == "features") {
    Input in(o.input);
    return ReadFeatureTableCsv(in.get());
  }
  const GameSet games = LoadGames(o);
  if (games.Seasons().size() != 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "games span several seasons; pick one with --season");
  }
  return BuildWinMatrix(games, Stage::kRegular);
}

Json OrderJson(const Ranking& r) { return r.OrderOneBased(); }

Json OrderLabelsJson(const WeightMatrix& a, const Ranking& r) {
  Json labels = Json::array();
  for (int item : r.order()) labels.push_back(a.Label(item));
  return labels;
}

std::string JoinOrder(const Ranking& r) {
  std::string s;
  for (int item : r.OrderOneBased()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(item);
  }
  return s;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

Json InstanceJson(const WeightMatrix& a) {
  Json j;
  j["n"] = a.size();
  if (a.has_labels()) j["labels"] = a.labels();
  j["total"] = JsonNumber(a.TotalSum());
  return j;
}

void LogStats(std::ostream& err, const char* what, const SearchStats& s,
              bool proven) {
  err << what << ": proven=" << (proven ? "yes" : "no")
      << " nodes=" << s.nodes_explored << " pruned=" << s.nodes_pruned
      << " seconds=" << s.wall_seconds << '\n';
}

// Writes the report to --output or `out`.
void Emit(const Options& o, std::ostream& out, const Json& json,
          const std::function<void(std::ostream&)>& csv) {
  std::ostringstream text;
  if (o.format == "csv") {
    csv(text);
  } else {
    text << json.dump(2) << '\n';
  }
  if (o.output.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(o.output);
  if (!file) {
    throw Error(ErrorCode::kInvalidConfig,
                "cannot write '" + o.output + "'");
  }
  file << text.str();
}

double LambdaOrNan(const WeightMatrix& a, double k_star) {
  return a.TotalSum() == 0.0 ? std::nan("") : DegreeOfLinearity(a, k_star);
}

int CmdLop(const Options& o, std::ostream& out, std::ostream& err) {
  const SolverConfig cfg = ToSolverConfig(o);
  const WeightMatrix a = LoadInstance(o);
  const LopResult r = SolveLop(a, cfg);
  LogStats(err, "lop", r.stats, r.proven);
  const double lambda = LambdaOrNan(a, r.optimal_value);

  Json j;
  j["command"] = "lop";
  j.update(InstanceJson(a));
  j["k_star"] = JsonNumber(r.optimal_value);
  j["lambda"] = JsonNumber(lambda);
  j["ranking"] = OrderJson(r.ranking);
  if (a.has_labels()) j["ranking_labels"] = OrderLabelsJson(a, r.ranking);
  j["proven"] = r.proven;
  Emit(o, out, j, [&](std::ostream& s) {
    s << "k_star,total,lambda,proven,ranking\n"
      << FormatNumber(r.optimal_value) << ',' << FormatNumber(a.TotalSum())
      << ',' << (std::isnan(lambda) ? "" : FormatNumber(lambda)) << ','
      << (r.proven ? "true" : "false") << ',' << JoinOrder(r.ranking)
      << '\n';
  });
  return r.proven ? kExitProven : kExitUnproven;
}

int CmdKappa(const Options& o, std::ostream& out, std::ostream& err) {
  const SolverConfig cfg = ToSolverConfig(o);
  const WeightMatrix a = LoadInstance(o);
  const LopResult lop = SolveLop(a, cfg);
  LogStats(err, "lop", lop.stats, lop.proven);

  Json j;
  j["command"] = "kappa";
  j.update(InstanceJson(a));
  j["k_star"] = JsonNumber(lop.optimal_value);
  j["pairs"] = PairCount(a.size());
  if (!lop.proven) {
    j["kappa"] = nullptr;
    j["proven"] = false;
    Emit(o, out, j, [&](std::ostream& s) {
      s << "kappa,concordant_count,k_star,proven,first,second\n"
        << ",," << FormatNumber(lop.optimal_value) << ",false,,\n";
    });
    return kExitUnproven;
  }

  const KtResult kt = SolveKt(a, lop.optimal_value, cfg);
  LogStats(err, "kappa", kt.stats, kt.proven);
  j["kappa"] = kt.kappa;
  j["concordant_count"] = kt.concordant_count;
  j["first"] = OrderJson(kt.first);
  j["second"] = OrderJson(kt.second);
  if (a.has_labels()) {
    j["first_labels"] = OrderLabelsJson(a, kt.first);
    j["second_labels"] = OrderLabelsJson(a, kt.second);
  }
  j["proven"] = kt.proven;

  int code = kt.proven ? kExitProven : kExitUnproven;
  if (o.oracle) {
    const KtResult slow = KappaByEnumeration(a, cfg);
    const bool agrees = kt.proven && slow.kappa == kt.kappa &&
                        slow.first == kt.first && slow.second == kt.second;
    j["oracle"] = {{"kappa", slow.kappa},
                   {"first", OrderJson(slow.first)},
                   {"second", OrderJson(slow.second)},
                   {"agrees", agrees}};
    if (!agrees) {
      err << "oracle mismatch: search kappa " << kt.kappa
          << ", enumeration kappa " << slow.kappa << '\n';
      code = kExitOracleMismatch;
    }
  }
  Emit(o, out, j, [&](std::ostream& s) {
    s << "kappa,concordant_count,k_star,proven,first,second\n"
      << kt.kappa << ',' << kt.concordant_count << ','
      << FormatNumber(lop.optimal_value) << ','
      << (kt.proven ? "true" : "false") << ',' << JoinOrder(kt.first) << ','
      << JoinOrder(kt.second) << '\n';
  });
  return code;
}

int CmdEnumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const SolverConfig cfg = ToSolverConfig(o);
  const WeightMatrix a = LoadInstance(o);
  const LopResult lop = SolveLop(a, cfg);
  LogStats(err, "lop", lop.stats, lop.proven);
  if (!lop.proven) {
    err << "error: optimal value not proven within the time limit\n";
    return kExitUnproven;
  }
  const OptimaSet optima = EnumerateOptima(a, lop.optimal_value, cfg);

  Json j;
  j["command"] = "enumerate";
  j.update(InstanceJson(a));
  j["k_star"] = JsonNumber(lop.optimal_value);
  j["count"] = optima.rankings.size();
  j["truncated"] = optima.truncated;
  Json rankings = Json::array();
  for (const Ranking& r : optima.rankings) rankings.push_back(OrderJson(r));
  j["rankings"] = std::move(rankings);
  Emit(o, out, j, [&](std::ostream& s) {
    s << "index,ranking\n";
    for (size_t k = 0; k < optima.rankings.size(); ++k) {
      s << k + 1 << ',' << JoinOrder(optima.rankings[k]) << '\n';
    }
  });
  return kExitProven;
}

Json OptionalNumber(const std::optional<double>& v) {
  return v.has_value() ? JsonNumber(*v) : Json(nullptr);
}

// Pearson correlation across seasons, or null when undefined.
Json Correlation(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() < 2) return nullptr;
  try {
    return JsonNumber(PearsonCorrelation(xs, ys));
  } catch (const Error&) {
    return nullptr;
  }
}

int CmdSeason(const Options& o, std::ostream& out, std::ostream& err) {
  const SolverConfig cfg = ToSolverConfig(o);
  const TieMode ties = ToTieMode(o);
  const GameSet games = LoadGames(o);

  std::vector<SeasonReport> reports;
  for (int season : games.Seasons()) {
    const GameSet one = games.Season(season);
    if (one.CountStage(Stage::kRegular) == 0) {
      err << "season " << season << ": no regular-season games, skipped\n";
      continue;
    }
    reports.push_back(BuildSeasonReport(one, cfg, ties));
    const SeasonReport& r = reports.back();
    err << "season " << season << ": lop proven="
        << (r.lop_proven ? "yes" : "no") << " kappa proven="
        << (r.kt && r.kt->proven ? "yes" : "no");
    if (r.kt) err << " kt nodes=" << r.kt->stats.nodes_explored;
    err << '\n';
  }
  if (reports.empty()) {
    throw Error(ErrorCode::kEmptyStage, "no season has regular-season games");
  }

  bool all_proven = true;
  Json seasons = Json::array();
  std::vector<double> lambda, h_opt, h_colley, h_massey;
  std::vector<double> fh_opt, fh_colley, fh_massey, f_opt, f_colley, f_massey;
  for (const SeasonReport& r : reports) {
    const bool proven = r.lop_proven && r.kt && r.kt->proven;
    all_proven = all_proven && proven;
    lambda.push_back(r.lambda);
    h_opt.push_back(r.hindsight.optimal);
    h_colley.push_back(r.hindsight.colley);
    h_massey.push_back(r.hindsight.massey);
    if (r.foresight) {
      fh_opt.push_back(r.hindsight.optimal);
      fh_colley.push_back(r.hindsight.colley);
      fh_massey.push_back(r.hindsight.massey);
      f_opt.push_back(r.foresight->optimal);
      f_colley.push_back(r.foresight->colley);
      f_massey.push_back(r.foresight->massey);
    }

    Json s;
    s["season"] = r.season;
    s["teams"] = r.teams;
    s["regular_games"] = r.regular_games;
    s["playoff_games"] = r.playoff_games;
    s["k_star"] = JsonNumber(r.k_star);
    s["lambda"] = JsonNumber(r.lambda);
    s["kappa"] = r.kt ? Json(r.kt->kappa) : Json(nullptr);
    s["concordant_count"] =
        r.kt ? Json(r.kt->concordant_count) : Json(nullptr);
    s["optima_count"] =
        r.optima_count ? Json(*r.optima_count) : Json(nullptr);
    s["optima_truncated"] = r.optima_truncated;
    s["lop_proven"] = r.lop_proven;
    s["kappa_proven"] = r.kt ? r.kt->proven : false;
    s["hindsight"] = {{"optimal", JsonNumber(r.hindsight.optimal)},
                      {"colley", JsonNumber(r.hindsight.colley)},
                      {"massey", JsonNumber(r.hindsight.massey)}};
    if (r.foresight) {
      s["foresight"] = {
          {"optimal", JsonNumber(r.foresight->optimal)},
          {"colley", JsonNumber(r.foresight->colley)},
          {"massey", JsonNumber(r.foresight->massey)},
          {"kappa_first", OptionalNumber(r.foresight_first)},
          {"kappa_second", OptionalNumber(r.foresight_second)},
          {"divergence", OptionalNumber(r.foresight_divergence)}};
    } else {
      s["foresight"] = nullptr;
    }
    Json rankings;
    auto names = [&](const Ranking& rk) {
      Json a = Json::array();
      for (int item : rk.order()) a.push_back(r.teams[item]);
      return a;
    };
    rankings["optimal"] = names(r.optimal);
    rankings["colley"] = names(r.colley);
    rankings["massey"] = names(r.massey);
    if (r.kt) {
      rankings["kappa_first"] = names(r.kt->first);
      rankings["kappa_second"] = names(r.kt->second);
    }
    s["rankings"] = std::move(rankings);
    s["massey_disconnected"] = r.massey_disconnected;
    seasons.push_back(std::move(s));
  }

  Json j;
  j["command"] = "season";
  j["tie_mode"] = std::string(TieModeName(ties));
  j["seasons"] = std::move(seasons);
  j["correlation"] = {
      {"lambda_vs_hindsight",
       {{"optimal", Correlation(lambda, h_opt)},
        {"colley", Correlation(lambda, h_colley)},
        {"massey", Correlation(lambda, h_massey)}}},
      {"hindsight_vs_foresight",
       {{"optimal", Correlation(fh_opt, f_opt)},
        {"colley", Correlation(fh_colley, f_colley)},
        {"massey", Correlation(fh_massey, f_massey)}}}};

  Emit(o, out, j, [&](std::ostream& s) {
    s << "season,teams,regular_games,playoff_games,k_star,lambda,kappa,"
         "hind_opt,hind_colley,hind_massey,fore_opt,fore_colley,"
         "fore_massey,fore_opt_a,fore_opt_b,fore_abs_diff,optima_count,"
         "truncated,proven\n";
    auto opt = [](const std::optional<double>& v) {
      return v ? FormatNumber(*v) : std::string();
    };
    for (const SeasonReport& r : reports) {
      s << r.season << ',' << r.teams.size() << ',' << r.regular_games << ','
        << r.playoff_games << ',' << FormatNumber(r.k_star) << ','
        << FormatNumber(r.lambda) << ','
        << (r.kt ? std::to_string(r.kt->kappa) : "") << ','
        << FormatNumber(r.hindsight.optimal) << ','
        << FormatNumber(r.hindsight.colley) << ','
        << FormatNumber(r.hindsight.massey) << ','
        << (r.foresight ? FormatNumber(r.foresight->optimal) : "") << ','
        << (r.foresight ? FormatNumber(r.foresight->colley) : "") << ','
        << (r.foresight ? FormatNumber(r.foresight->massey) : "") << ','
        << opt(r.foresight_first) << ',' << opt(r.foresight_second) << ','
        << opt(r.foresight_divergence) << ','
        << (r.optima_count ? std::to_string(*r.optima_count) : "") << ','
        << (r.optima_truncated ? "true" : "false") << ','
        << (r.lop_proven && r.kt && r.kt->proven ? "true" : "false")
        << '\n';
    }
  });
  return all_proven ? kExitProven : kExitUnproven;
}

int CmdRatings(const Options& o, std::ostream& out, std::ostream&) {
  const GameSet games = LoadGames(o);
  struct SeasonRatings {
    int season;
    std::vector<std::string> teams;
    RatingVector colley, massey;
  };
  std::vector<SeasonRatings> all;
  for (int season : games.Seasons()) {
    const GameSet one = games.Season(season);
    if (one.CountStage(Stage::kRegular) == 0) continue;
    all.push_back({season, one.teams(), ColleyRatings(one),
                   MasseyRatings(one)});
  }
  if (all.empty()) {
    throw Error(ErrorCode::kEmptyStage, "no regular-season games to rate");
  }

  Json seasons = Json::array();
  for (const SeasonRatings& s : all) {
    Json entry;
    entry["season"] = s.season;
    entry["teams"] = s.teams;
    Json colley = Json::array(), massey = Json::array();
    for (double v : s.colley.values) colley.push_back(JsonNumber(v));
    for (double v : s.massey.values) massey.push_back(JsonNumber(v));
    entry["colley"] = std::move(colley);
    entry["massey"] = std::move(massey);
    entry["colley_ranking"] = OrderJson(RankingFromRatings(s.colley));
    entry["massey_ranking"] = OrderJson(RankingFromRatings(s.massey));
    entry["massey_disconnected"] = s.massey.disconnected;
    seasons.push_back(std::move(entry));
  }
  Json j;
  j["command"] = "ratings";
  j["seasons"] = std::move(seasons);
  Emit(o, out, j, [&](std::ostream& os) {
    os << "season,team,colley,massey,colley_rank,massey_rank\n";
    for (const SeasonRatings& s : all) {
      const Ranking c = RankingFromRatings(s.colley);
      const Ranking m = RankingFromRatings(s.massey);
      for (size_t t = 0; t < s.teams.size(); ++t) {
        const int i = static_cast<int>(t);
        os << s.season << ',' << CsvField(s.teams[t]) << ','
           << FormatNumber(s.colley.values[t]) << ','
           << FormatNumber(s.massey.values[t]) << ','
           << c.PositionOf(i) + 1 << ',' << m.PositionOf(i) + 1 << '\n';
      }
    }
  });
  return kExitProven;
}

void AddCommonFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "input CSV file, - for stdin")
      ->required();
  cmd->add_option("--kind", o.kind, "input kind")
      ->check(CLI::IsMember({"matrix", "games", "features"}))
      ->capture_default_str();
  cmd->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", o.output, "write the report here");
  cmd->add_option("--time-limit", o.time_limit, "seconds per solve");
  cmd->add_option("--workers", o.workers, "search threads")
      ->envname("RANKABILITY_WORKERS")
      ->capture_default_str();
  cmd->add_option("--cap", o.cap, "maximum optima to enumerate")
      ->capture_default_str();
  cmd->add_option("--tolerance", o.tolerance,
                  "objective values this close are equal")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "heuristic seed")->capture_default_str();
  cmd->add_option("--tie-mode", o.tie_mode, "credit for tied games")
      ->check(CLI::IsMember({"half", "strict"}))
      ->capture_default_str();
  cmd->add_option("--aliases", o.aliases,
                  "raw_name,canonical_name CSV for team names");
  cmd->add_option("--season", o.season, "use only this season's games");
}

}  // namespace

nlohmann::ordered_json JsonNumber(double value) {
  if (!std::isfinite(value)) return nullptr;
  if (value == std::floor(value) && std::abs(value) < 9e15) {
    return static_cast<std::int64_t>(value);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return std::strtod(buf, nullptr);
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact linear ordering rankability metrics", "rankability"};
  app.require_subcommand(1);
  Options o;
  using Command = std::function<int(const Options&, std::ostream&,
                                    std::ostream&)>;
  const std::pair<const char*, const char*> names[] = {
      {"lop", "optimal value, degree of linearity and a witness ranking"},
      {"kappa", "largest Kendall tau distance between optimal rankings"},
      {"enumerate", "list every optimal ranking"},
      {"season", "per-season rankability and accuracy report"},
      {"ratings", "Colley and Massey ratings"},
  };
  const Command commands[] = {CmdLop, CmdKappa, CmdEnumerate, CmdSeason,
                              CmdRatings};
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : names) {
    CLI::App* sub = app.add_subcommand(name, help);
    AddCommonFlags(sub, o);
    subs.push_back(sub);
  }
  subs[1]->add_flag("--oracle", o.oracle,
                    "cross-check against full enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitProven : kExitInputError;
  }

  for (size_t k = 0; k < subs.size(); ++k) {
    if (!subs[k]->parsed()) continue;
    try {
      return commands[k](o, out, err);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return e.code() == ErrorCode::kTimeout ? kExitUnproven
                                             : kExitInputError;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInputError;
    }
  }
  return kExitInputError;
}

std::vector<std::string> VerifyReport(const nlohmann::ordered_json& report,
                                      const WeightMatrix& a,
                                      double tolerance) {
  std::vector<std::string> problems;
  auto fail = [&](const std::string& msg) { problems.push_back(msg); };
  auto ranking = [&](const Json& j) {
    return Ranking::FromOrder(j.get<std::vector<int>>());
  };
  try {
    const std::string command = report.at("command").get<std::string>();
    if (report.at("n").get<int>() != a.size()) fail("item count differs");
    const double k_star = report.at("k_star").get<double>();
    if (command == "lop") {
      const double v = ObjectiveValue(a, ranking(report.at("ranking")));
      if (std::abs(v - k_star) > tolerance) {
        fail("witness objective " + FormatNumber(v) + " != k_star");
      }
      if (a.TotalSum() > 0) {
        const double lambda = report.at("lambda").get<double>();
        if (std::abs(lambda - k_star / a.TotalSum()) > 1e-12) {
          fail("lambda != k_star / total");
        }
      }
    } else if (command == "kappa") {
      if (report.at("kappa").is_null()) return problems;
      const Ranking first = ranking(report.at("first"));
      const Ranking second = ranking(report.at("second"));
      const std::int64_t kappa = report.at("kappa").get<std::int64_t>();
      const std::int64_t concordant =
          report.at("concordant_count").get<std::int64_t>();
      if (KendallTauDistance(first, second) != kappa) {
        fail("witness distance != kappa");
      }
      if (concordant + kappa != PairCount(a.size())) {
        fail("concordant_count + kappa != n choose 2");
      }
      for (const Ranking* r : {&first, &second}) {
        if (std::abs(ObjectiveValue(a, *r) - k_star) > tolerance) {
          fail("witness " + r->ToString() + " is not optimal");
        }
      }
      const KtValidationReport check =
          ValidateKtSolution(a, k_star, KtSolutionFromRankings(first, second),
                             true, tolerance);
      if (!check.ok()) fail("program constraints: " + check.ToString());
    } else if (command == "enumerate") {
      const Json& list = report.at("rankings");
      if (report.at("count").get<size_t>() != list.size()) {
        fail("count != number of rankings");
      }
      std::optional<Ranking> previous;
      for (const Json& item : list) {
        const Ranking r = ranking(item);
        if (std::abs(ObjectiveValue(a, r) - k_star) > tolerance) {
          fail(r.ToString() + " is not optimal");
        }
        if (previous && !(*previous < r)) fail("rankings not strictly sorted");
        previous = r;
      }
    } else {
      fail("cannot verify command '" + command + "'");
    }
  } catch (const std::exception& e) {
    fail(std::string("malformed report: ") + e.what());
  }
  return problems;
}

}  // namespace rankability::cli
