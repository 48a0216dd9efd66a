// Copyright 2026 The SCG Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "scg/auctions.h"
#include "scg/cli.h"
#include "scg/congestion.h"
#include "scg/equilibria.h"
#include "scg/errors.h"
#include "scg/io.h"
#include "scg/scheduling.h"
#include "scg/social_contribution.h"
#include "scg/utility_games.h"

namespace scg::cli {
namespace {

using io::Json;

Json PoaJson(const PoaValue& v) {
  switch (v.kind) {
    case PoaValue::Kind::kFinite: return Json{{"kind", "finite"}, {"value", io::ToJson(v.value)}};
    case PoaValue::Kind::kInfinite: return Json{{"kind", "infinite"}};
    case PoaValue::Kind::kNoEquilibrium: return Json{{"kind", "no-equilibrium"}};
  }
  return nullptr;
}

Json OptionalProfile(const std::optional<Profile>& p) { return p ? io::ProfileJson(*p) : Json(nullptr); }

Json OptionalInt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json VerdictJson(const SmoothnessVerdict& v) {
  Json j{{"verdict", v.ok ? "PASS" : "FAIL"}, {"violating", OptionalProfile(v.violating)},
         {"optimum", OptionalProfile(v.optimum)}};
  if (!v.ok) {
    j["lhs"] = io::ToJson(v.lhs);
    j["rhs"] = io::ToJson(v.rhs);
  }
  return j;
}

Json RobustJson(const RobustPoaResult& r) {
  const char* status = r.status == RobustPoaResult::Status::kOk           ? "ok"
                       : r.status == RobustPoaResult::Status::kInfeasible ? "infeasible"
                                                                          : "degenerate";
  Json j{{"status", status}};
  if (r.status == RobustPoaResult::Status::kOk) {
    j["value"] = io::ToJson(r.value);
    j["attained"] = r.attained;
    if (r.attained) {
      j["lambda"] = io::ToJson(r.lambda);
      j["mu"] = io::ToJson(r.mu);
    }
  }
  return j;
}

// Inline JSON when the text starts like JSON, else a file path.
Json JsonArgument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    try {
      return Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("bad inline JSON: ") + e.what());
    }
  }
  return io::ReadJsonFile(text);
}

std::optional<Rational> UniformAlpha(const std::string& text) {
  const std::string prefix = "uniform:";
  if (text.rfind(prefix, 0) != 0) return std::nullopt;
  return ParseRational(text.substr(prefix.size()));
}

AltruismVector AltruismArgument(const std::string& text, int n, bool extended) {
  if (text.empty()) throw ParameterError("--alpha is required for the altruism model");
  if (const auto q = UniformAlpha(text)) return AltruismVector::Uniform(n, *q, extended);
  const Json j = JsonArgument(text);
  if (j.is_array()) return AltruismVector(io::RationalsFrom(j), extended);
  return io::AltruismFrom(j);
}

FriendshipMatrix FriendshipArgument(const std::string& text, int n) {
  if (text.empty()) throw ParameterError("--alpha is required for the friendship model");
  if (const auto q = UniformAlpha(text)) {
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, *q));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    return FriendshipMatrix(std::move(rows));
  }
  return io::FriendshipFrom(JsonArgument(text));
}

FiniteGame Extend(const FiniteGame& game, const std::string& extension, const std::string& alpha, bool extended) {
  if (extension == "none") return game;
  if (extension == "altruism") return AltruisticExtension(game, AltruismArgument(alpha, game.num_players(), extended));
  if (extension == "friendship") return FriendshipExtension(game, FriendshipArgument(alpha, game.num_players()));
  throw ParameterError("--extension must be none, altruism or friendship");
}

void FlattenCsv(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) FlattenCsv(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  std::string value = j.is_string() ? j.get<std::string>() : j.dump();
  if (value.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : value) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    value = quoted + "\"";
  }
  out << prefix << "," << value << "\n";
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

struct Context {
  RunOptions options;
  std::string format = "json";
  std::string command_line;
  std::ostream* out = nullptr;
};

int Emit(const Context& ctx, const std::string& command, const std::string& digest, const Json& results,
         std::chrono::steady_clock::time_point start, int code) {
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (ctx.format == "csv") {
    *ctx.out << "field,value\n";
    FlattenCsv(results, "", *ctx.out);
    return code;
  }
  const Json report{{"command", command},        {"invocation", ctx.command_line},
                    {"digest", digest},          {"seed", ctx.options.seed},
                    {"budget", ctx.options.budget}, {"wall_time_ms", elapsed},
                    {"results", results}};
  *ctx.out << report.dump(2) << "\n";
  return code;
}

std::string ParamsDigest(const std::string& text) { return io::Digest(Json(text)); }

// ---- family ----

FamilyReport CongestionFamily(int n, const RunOptions& options) {
  if (n < 0 || n > 5000) throw ParameterError("congestion17 needs 0 <= n <= 5000");
  const LowerBoundFamily fam = MakeLowerBoundFamily(n);
  const GameWithDefaults g = MakeCongestionGame(fam.game);
  const FiniteGame fr = FriendshipExtension(g.game, fam.alpha);
  const NashCheck nash = IsPureNash(fr, fam.s);
  const Rational cs = CongestionSocialCost(fam.game, fam.s);
  const Rational cstar = CongestionSocialCost(fam.game, fam.sstar);
  FamilyReport report;
  report.instance = io::ToJson(fam.game);
  report.alpha = io::ToJson(fam.alpha);
  report.profiles = Json{{"equilibrium", io::ProfileJson(fam.s)}, {"alternative", io::ProfileJson(fam.sstar)}};
  const Rational ratio = cs / cstar;
  Json results{{"family", "congestion17"},
               {"blocks", n},
               {"players", fam.game.num_players()},
               {"resources", fam.game.num_resources},
               {"equilibrium_is_nash", nash.is_nash},
               {"equilibrium_cost", io::ToJson(cs)},
               {"alternative_cost", io::ToJson(cstar)},
               {"ratio", io::ToJson(ratio)},
               {"ratio_decimal", ToDouble(ratio)},
               {"predicted_ratio", io::ToJson(FamilyEquilibriumCost(n) / FamilyAlternativeCost(n))},
               {"limit", io::ToJson(MakeRational(17, 3))}};
  try {
    const OptimumResult opt = CongestionOptimumDp(fam.game, options.budget);
    results["optimum_cost"] = io::ToJson(opt.value);
    results["alternative_is_optimal"] = opt.value == cstar;
    results["optimum_ratio"] = io::ToJson(cs / opt.value);
    report.profiles["optimum"] = io::ProfileJson(opt.profile);
  } catch (const BudgetError&) {
    results["optimum_cost"] = nullptr;
  }
  report.verified = nash.is_nash && cs == FamilyEquilibriumCost(n) && cstar == FamilyAlternativeCost(n);
  results["verified"] = report.verified;
  report.results = results;
  return report;
}

FamilyReport SchedulingFamily(int m) {
  if (m < 2 || m > 12) throw ParameterError("schedB needs 2 <= m <= 12");
  const WeightCounterexample ce = MakeWeightCounterexample(m);
  const GameWithDefaults g = SchedulingGame(ce.instance);
  const FiniteGame fr = FriendshipExtension(g.game, ce.alpha);
  const NashCheck nash = IsPureNash(fr, ce.x);
  const Rational cx = WeightedSocialCost(ce.instance, ce.x);
  const Rational cstar = WeightedSocialCost(ce.instance, ce.xstar);
  const Rational lower = SocialCostLowerBound(ce.instance);
  const bool weight_condition = CheckWeightCondition(ce.instance).ok;
  FamilyReport report;
  report.instance = io::ToJson(ce.instance);
  report.alpha = io::ToJson(ce.alpha);
  report.profiles = Json{{"equilibrium", io::ProfileJson(ce.x)}, {"optimum", io::ProfileJson(ce.xstar)}};
  const Rational ratio = cx / cstar;
  report.verified = nash.is_nash && cx == MakeRational(m * (m + 1), 2) && cstar == m && lower == cstar &&
                    ratio == MakeRational(m + 1, 2) && !weight_condition;
  report.results = Json{{"family", "schedB"},
                        {"machines", m},
                        {"jobs", ce.instance.num_jobs()},
                        {"equilibrium_is_nash", nash.is_nash},
                        {"equilibrium_cost", io::ToJson(cx)},
                        {"optimum_cost", io::ToJson(cstar)},
                        {"optimum_lower_bound", io::ToJson(lower)},
                        {"ratio", io::ToJson(ratio)},
                        {"weight_condition", weight_condition},
                        {"verified", report.verified}};
  return report;
}

FamilyReport AuctionFamily() {
  const TightAuctionExample ex = MakeTightAuctionExample();
  const GameWithDefaults g = AuctionGame(ex.auction);
  const FiniteGame fr = FriendshipExtension(g.game, ex.alpha);
  const NashCheck nash = IsPureNash(fr, ex.equilibrium);
  const OptimumResult opt = SocialOptimum(g.game);
  const Rational welfare = g.game.SocialCost(ex.equilibrium);
  const PoaValue ratio = EfficiencyRatio(Orientation::kMaximize, welfare, opt.value);
  FamilyReport report;
  report.instance = io::ToJson(ex.auction);
  report.alpha = io::ToJson(ex.alpha);
  report.profiles = Json{{"equilibrium", io::ProfileJson(ex.equilibrium)}, {"optimum", io::ProfileJson(opt.profile)}};
  report.verified = nash.is_nash && ratio.finite() && ratio.value == 2;
  report.results = Json{{"family", "auctionTight"},
                        {"equilibrium_is_nash", nash.is_nash},
                        {"equilibrium_bids", io::ToJson(BidsOf(ex.auction, ex.equilibrium))},
                        {"equilibrium_welfare", io::ToJson(welfare)},
                        {"optimum_welfare", io::ToJson(opt.value)},
                        {"ratio", PoaJson(ratio)},
                        {"verified", report.verified}};
  return report;
}

FamilyReport MixedFamily(int m) {
  if (m < 1 || m > 64) throw ParameterError("mixedLB needs 1 <= m <= 64");
  const SchedulingInstance inst = SchedulingInstance::Identical(m, std::vector<Rational>(m, Rational(1)));
  const Rational mixed = FullyMixedExpectedCost(inst);
  const Rational optimum = OptimalCostClosedForm(inst);
  const Rational mft = WeightedSocialCost(inst, MftSchedule(inst));
  const bool nash = IsUniformMixedNash(inst);
  const Rational ratio = mixed / optimum;
  FamilyReport report;
  report.instance = io::ToJson(inst);
  report.alpha = nullptr;
  report.profiles = Json{{"optimum", io::ProfileJson(MftSchedule(inst))},
                         {"mixed", io::ToJson(MixedStrategyProfile::Uniform(std::vector<int>(m, m)))}};
  report.verified = nash && mixed == MakeRational(3 * m - 1, 2) && optimum == m && mft == optimum &&
                    ratio == MakeRational(3, 2) - MakeRational(1, 2 * m);
  report.results = Json{{"family", "mixedLB"},
                        {"machines", m},
                        {"uniform_is_mixed_nash", nash},
                        {"mixed_cost", io::ToJson(mixed)},
                        {"optimum_cost", io::ToJson(optimum)},
                        {"ratio", io::ToJson(ratio)},
                        {"verified", report.verified}};
  return report;
}

// ---- table1 ----

FriendshipMatrix RandomFriendship(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> level(0, 2);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = i == j ? Rational(1) : MakeRational(level(rng), 2);
  }
  return FriendshipMatrix(std::move(rows));
}

SmoothnessCertificate PureCert(Rational lambda, Rational mu, const Profile& sstar) {
  return SmoothnessCertificate{std::move(lambda), std::move(mu), MixedStrategyProfile::Pure(sstar), sstar,
                               SmoothnessFlavor::kBase};
}

Table1Row WeightedSchedulingRow(std::mt19937_64& rng, const RunOptions& options) {
  Table1Row row{"R||sum w_j C_j (weight condition)", Rational(4), Rational(0), false, Json::object()};
  int passed = 0;
  const int total = 30;
  for (int t = 0; t < total; ++t) {
    const SchedulingInstance inst = RandomWeightConditionInstance(rng, 2 + t % 2, 3);
    const GameWithDefaults g = SchedulingGame(inst);
    const Profile opt = SocialOptimum(g.game, options.budget).profile;
    const SmoothnessCertificate cert = PureCert(Rational(2), MakeRational(1, 2), opt);
    const FriendshipMatrix alpha = RandomFriendship(rng, inst.num_jobs());
    if (ReductionTransferCheck(g.game, g.defaults, alpha, inst.weights, cert, options.budget).ok) ++passed;
    row.observed = cert.RobustBound(Orientation::kMinimize);
  }
  row.pass = passed == total && row.observed == row.claimed;
  row.detail = Json{{"certificate", Json{{"lambda", "2/1"}, {"mu", "1/2"}}},
                    {"instances", total},
                    {"transfers_passed", passed},
                    {"observed_is", "certificate bound"}};
  return row;
}

Table1Row IdenticalFriendshipRow(std::mt19937_64& rng, const RunOptions& options) {
  Table1Row row{"P||sum C_j", Rational(2), Rational(0), false, Json::object()};
  int passed = 0;
  const int total = 30;
  PoaValue worst;
  for (int t = 0; t < total; ++t) {
    SchedulingInstance inst = RandomFlowTimeInstance(rng, Environment::kP, 2 + t % 2, 3 + t % 2);
    std::sort(inst.sizes.begin(), inst.sizes.end());
    inst = SchedulingInstance::Identical(inst.num_machines(), inst.sizes);
    const GameWithDefaults g = SchedulingGame(inst);
    const Profile xstar = MftSchedule(inst);
    const SmoothnessCertificate cert{
        Rational(2), Rational(0), MixedStrategyProfile::Uniform(std::vector<int>(inst.num_jobs(), inst.num_machines())),
        xstar, SmoothnessFlavor::kBase};
    const FriendshipMatrix alpha = RandomFriendship(rng, inst.num_jobs());
    if (ReductionTransferCheck(g.game, g.defaults, alpha, inst.weights, cert, options.budget).ok) ++passed;
    worst = MaxPoa(worst, PurePoa(FriendshipExtension(g.game, alpha), options.budget));
    row.observed = cert.RobustBound(Orientation::kMinimize);
  }
  row.pass = passed == total && row.observed == row.claimed && (!worst.finite() || worst.value <= row.claimed) &&
             worst.kind != PoaValue::Kind::kInfinite;
  row.detail = Json{{"certificate", Json{{"lambda", "2/1"}, {"mu", "0/1"}, {"sbar", "uniform"}}},
                    {"instances", total},
                    {"transfers_passed", passed},
                    {"max_pure_poa_of_extensions", PoaJson(worst)},
                    {"observed_is", "certificate bound"}};
  return row;
}

Table1Row IdenticalSelfishRow(std::mt19937_64& rng, const RunOptions& options) {
  const int m = 4;
  Table1Row row{"P||sum C_j selfish m=4", IdenticalMachinesRobustBound(m), Rational(0), false, Json::object()};
  int passed = 0;
  const int total = 20;
  for (int t = 0; t < total; ++t) {
    SchedulingInstance inst = RandomFlowTimeInstance(rng, Environment::kP, m, 2 + t % 3);
    std::sort(inst.sizes.begin(), inst.sizes.end());
    inst = SchedulingInstance::Identical(m, inst.sizes);
    const GameWithDefaults g = SchedulingGame(inst);
    const SmoothnessCertificate cert = RpoaPCertificate(inst);
    if (CheckSmoothnessBase(g.game, cert, options.budget).ok &&
        cert.RobustBound(Orientation::kMinimize) <= row.claimed) {
      ++passed;
    }
  }
  const FamilyReport lb = MixedFamily(m);
  row.observed = io::RationalFrom(lb.results["ratio"]);
  row.pass = passed == total && lb.verified && row.observed == row.claimed;
  row.detail = Json{{"instances", total}, {"certificates_passed", passed}, {"lower_bound", lb.results},
                    {"observed_is", "mixed lower-bound ratio"}};
  return row;
}

Table1Row CongestionRow(std::mt19937_64& rng, const RunOptions& options) {
  Table1Row row{"linear congestion games", MakeRational(17, 3), Rational(0), false, Json::object()};
  std::vector<CongestionGame> games = EnumerateSmallIdentityGames(2, 2, 3);
  for (int t = 0; t < 20; ++t) games.push_back(RandomIdentityGame(rng, 3, 4, 2));
  int passed = 0;
  for (const auto& cg : games) {
    const GameWithDefaults g = MakeCongestionGame(cg);
    const GameWithDefaults scg = CorrespondingScg(g.game, g.defaults);
    const Profile opt = SocialOptimum(g.game, options.budget).profile;
    const SmoothnessVerdict v = CheckSmoothnessBase(scg.game, PureCert(MakeRational(17, 5), MakeRational(2, 5), opt),
                                                    options.budget);
    const RobustPoaResult r =
        RobustPoaBound(scg.game, {MixedStrategyProfile::Pure(opt)}, DeviationModel{}, options.budget);
    if (v.ok && (r.status != RobustPoaResult::Status::kOk || r.value <= row.claimed)) ++passed;
  }
  const FamilyReport fam = CongestionFamily(kTable1CongestionBlocks, options);
  row.observed = io::RationalFrom(fam.results["ratio"]);
  const Rational gap = (row.claimed - row.observed) / row.claimed;
  row.pass = passed == static_cast<int>(games.size()) && fam.verified && row.observed <= row.claimed &&
             gap <= MakeRational(5, 100);
  row.detail = Json{{"certificate", Json{{"lambda", "17/5"}, {"mu", "2/5"}}},
                    {"instances", games.size()},
                    {"certificates_passed", passed},
                    {"family", fam.results},
                    {"relative_gap", ToDouble(gap)},
                    {"observed_is", "family ratio"}};
  return row;
}

Table1Row AuctionRow(std::mt19937_64& rng, const RunOptions& options) {
  Table1Row row{"second price auctions", Rational(2), Rational(0), false, Json::object()};
  std::uniform_int_distribution<int> value(0, 6);
  int passed = 0;
  const int total = 30;
  for (int t = 0; t < total; ++t) {
    std::vector<Rational> v(1 + t % 3);
    for (auto& x : v) x = MakeRational(value(rng), 2);
    const CertifiedBound c = AuctionPoa2Certificate(MakeAuction(v), options.budget);
    if (c.verdict.ok && c.cert.RobustBound(Orientation::kMaximize) == row.claimed) ++passed;
  }
  const FamilyReport tight = AuctionFamily();
  row.observed = io::RationalFrom(tight.results["ratio"]["value"]);
  row.pass = passed == total && tight.verified && row.observed == row.claimed;
  row.detail = Json{{"certificate", Json{{"lambda", "1/1"}, {"mu", "-1/1"}}},
                    {"instances", total},
                    {"certificates_passed", passed},
                    {"tight_example", tight.results},
                    {"observed_is", "tight example ratio"}};
  return row;
}

Table1Row UtilityRow(std::mt19937_64& rng, const RunOptions& options) {
  Table1Row row{"valid utility games", Rational(2), Rational(0), false, Json::object()};
  std::uniform_int_distribution<int> level(0, 4);
  int passed = 0;
  const int total = 30;
  PoaValue worst;
  worst.kind = PoaValue::Kind::kFinite;
  worst.value = 1;
  for (int t = 0; t < total; ++t) {
    const UtilityGame game =
        RandomCoverageGame(rng, 6, 5, 2 + t % 2, 2, t % 2 ? PayoffRule::kFairShare : PayoffRule::kBasic);
    const GameWithDefaults g = MakeUtilityGame(game);
    const UtilityCertificate c = UtilityPoa2Certificate(game, options.budget);
    const GameWithDefaults scg = CorrespondingScg(g.game, g.defaults);
    std::vector<Rational> a(game.num_players());
    for (auto& x : a) x = MakeRational(level(rng), 4);
    const AltruismVector alpha(a);
    const bool ok = c.verdict.ok && CheckValidUtility(game.v, game.strategies, scg.game, scg.defaults).ok &&
                    ReductionTransferCheck(g.game, g.defaults, alpha, c.cert, options.budget).ok;
    if (ok) ++passed;
    worst = MaxPoa(worst, PurePoa(AltruisticExtension(g.game, alpha), options.budget));
  }
  row.observed = worst.finite() ? worst.value : Rational(-1);
  row.pass = passed == total && worst.finite() && worst.value <= row.claimed;
  row.detail = Json{{"certificate", Json{{"lambda", "1/1"}, {"mu", "-1/1"}}},
                    {"instances", total},
                    {"certificates_passed", passed},
                    {"max_pure_poa_of_extensions", PoaJson(worst)},
                    {"observed_is", "largest observed pure PoA"}};
  return row;
}

// ---- subcommands ----

struct GameArgs {
  std::string file;
  std::string extension = "none";
  std::string alpha;
  bool extended = false;
};

void AddGameArgs(CLI::App* sub, GameArgs& args, bool with_extension) {
  sub->add_option("game", args.file, "game file (JSON)")->required();
  if (with_extension) {
    sub->add_option("--extension", args.extension, "none, altruism or friendship")
        ->check(CLI::IsMember({"none", "altruism", "friendship"}));
    sub->add_option("--alpha", args.alpha, "alpha file, inline JSON or uniform:<q>");
    sub->add_flag("--extended", args.extended, "admit altruism levels outside [0, 1]");
  }
}

int CmdPoa(const Context& ctx, const GameArgs& args, const std::string& solution) {
  const auto start = std::chrono::steady_clock::now();
  if (solution != "pure") throw UnsupportedError("only --solution pure enumerates equilibria");
  const io::Instance inst = io::LoadInstance(args.file);
  const GameWithDefaults g = inst.Build(ctx.options.budget);
  const FiniteGame h = Extend(g.game, args.extension, args.alpha, args.extended);
  const OutcomeTable table = OutcomeTable::Build(h, ctx.options.budget);
  const EquilibriumReport rep = AnalyzeEquilibria(table);
  Json eqs = Json::array();
  for (std::size_t k = 0; k < rep.equilibria.size(); ++k) {
    eqs.push_back(Json{{"profile", io::ProfileJson(rep.equilibria[k])}, {"social", io::ToJson(rep.equilibrium_costs[k])}});
  }
  Json optima = Json::array();
  for (const auto& p : rep.optima) optima.push_back(io::ProfileJson(p));
  const Json results{{"kind", io::KindName(inst.kind)},
                     {"extension", args.extension},
                     {"solution", solution},
                     {"optimum", io::ToJson(rep.optimum_value)},
                     {"optima", optima},
                     {"equilibria_count", rep.equilibria.size()},
                     {"equilibria", eqs},
                     {"pure_poa", PoaJson(rep.pure_poa)}};
  return Emit(ctx, "poa", inst.digest, results, start, kSuccess);
}

struct SmoothArgs {
  std::string lambda;
  std::string mu;
  std::string sbar;
  std::string sstar;
  std::string certificate;
  std::string flavor = "base";
  bool scg = false;
  std::string weights;
};

int CmdSmoothness(const Context& ctx, const GameArgs& args, const SmoothArgs& s) {
  const auto start = std::chrono::steady_clock::now();
  const io::Instance inst = io::LoadInstance(args.file);
  const GameWithDefaults base = inst.Build(ctx.options.budget);
  const GameWithDefaults target = s.scg ? CorrespondingScg(base.game, base.defaults) : base;
  const SmoothnessCertificate cert = [&]() -> SmoothnessCertificate {
    if (!s.certificate.empty()) return io::CertificateFrom(JsonArgument(s.certificate));
    if (s.lambda.empty() || s.mu.empty()) throw ParameterError("give --lambda and --mu or --certificate");
    Profile sstar;
    if (!s.sstar.empty()) {
      sstar = io::ProfileFrom(JsonArgument(s.sstar));
    } else if (inst.kind == io::InstanceKind::kAuction) {
      sstar = WelfareOptimalBids(*inst.auction);
    } else {
      sstar = SocialOptimum(target.game, ctx.options.budget).profile;
    }
    return SmoothnessCertificate{ParseRational(s.lambda), ParseRational(s.mu),
                                 s.sbar.empty() ? MixedStrategyProfile::Pure(sstar) : io::MixedFrom(JsonArgument(s.sbar)),
                                 sstar, ParseFlavor(s.flavor)};
  }();
  const int n = target.game.num_players();
  DeviationModel model;
  model.flavor = cert.flavor;
  SmoothnessVerdict verdict;
  switch (cert.flavor) {
    case SmoothnessFlavor::kBase:
      verdict = CheckSmoothnessBase(target.game, cert, ctx.options.budget);
      break;
    case SmoothnessFlavor::kAltruistic: {
      const AltruismVector alpha = AltruismArgument(args.alpha, n, args.extended);
      model.altruism = alpha;
      verdict = CheckSmoothnessAltruistic(target.game, alpha, cert, ctx.options.budget);
      break;
    }
    case SmoothnessFlavor::kFriendship: {
      const FriendshipMatrix alpha = FriendshipArgument(args.alpha, n);
      const std::vector<Rational> weights =
          s.weights.empty() ? inst.Weights(ctx.options.budget) : io::RationalsFrom(JsonArgument(s.weights));
      model.friendship = alpha;
      model.weights = weights;
      verdict = CheckSmoothnessFriendship(target.game, alpha, weights, cert, ctx.options.budget);
      break;
    }
  }
  Json results{{"kind", io::KindName(inst.kind)},
               {"target", s.scg ? "social contribution game" : "game"},
               {"certificate", io::ToJson(cert)},
               {"robust_bound", io::ToJson(cert.RobustBound(target.game.orientation()))}};
  results.update(VerdictJson(verdict));
  if (cert.flavor != SmoothnessFlavor::kAltruistic || cert.sbar.is_pure()) {
    results["best_bound_for_sbar"] =
        RobustJson(RobustPoaBound(target.game, {cert.sbar}, model, ctx.options.budget));
  }
  return Emit(ctx, "smoothness", inst.digest, results, start, verdict.ok ? kSuccess : kVerificationFailure);
}

int CmdScgCheck(const Context& ctx, const GameArgs& args, const std::string& weights_arg, const std::string& emit) {
  const auto start = std::chrono::steady_clock::now();
  const io::Instance inst = io::LoadInstance(args.file);
  const GameWithDefaults g = inst.Build(ctx.options.budget);
  const std::vector<Rational> weights =
      weights_arg.empty() ? inst.Weights(ctx.options.budget) : io::RationalsFrom(JsonArgument(weights_arg));
  const ScBoundedCheck sc = CheckScBounded(g.game, g.defaults, ctx.options.budget);
  const ScBoundedCheck is = CheckIsScg(g.game, g.defaults, ctx.options.budget);
  Json results{{"kind", io::KindName(inst.kind)}, {"sc_bounded", sc.ok}, {"is_scg", is.ok}};
  if (sc.witness) results["sc_witness"] = Json{{"player", sc.witness->player}, {"profile", sc.witness->profile}};
  bool positive = true;
  for (const auto& w : weights) positive = positive && w > 0;
  if (positive) {
    const StrongScCheck strong = CheckStronglyScBounded(g.game, g.defaults, weights, ctx.options.budget);
    results["strongly_sc_bounded"] = strong.ok;
    if (!strong.ok) {
      results["strong_witness"] = Json{{"condition", strong.condition},
                                       {"player", OptionalInt(strong.player)},
                                       {"other", OptionalInt(strong.other)},
                                       {"profile", OptionalProfile(strong.profile)}};
    }
  } else {
    results["strongly_sc_bounded"] = nullptr;
  }
  const IdentityCheck id = CheckAltruismIndependenceIdentity(g.game, g.defaults, ctx.options.budget);
  results["altruism_identity"] = Json{{"ok", id.ok},
                                      {"player", OptionalInt(id.player)},
                                      {"profile", OptionalProfile(id.profile)},
                                      {"deviation", OptionalInt(id.deviation)}};
  if (!emit.empty()) {
    const GameWithDefaults scg = CorrespondingScg(g.game, g.defaults);
    io::WriteJsonFile(emit, io::TableGameJson(scg.game, scg.defaults, ctx.options.budget));
    results["scg_file"] = emit;
  }
  return Emit(ctx, "scg-check", inst.digest, results, start, sc.ok ? kSuccess : kVerificationFailure);
}

int CmdFamily(const Context& ctx, const std::string& family, std::optional<int> param, const std::string& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  const int defaults = family == "congestion17" ? 20 : family == "schedB" ? 4 : family == "mixedLB" ? 6 : 0;
  const FamilyReport report = RunFamily(family, param.value_or(defaults), ctx.options);
  Json results = report.results;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    io::WriteJsonFile((dir / "instance.json").string(), report.instance);
    if (!report.alpha.is_null()) io::WriteJsonFile((dir / "alpha.json").string(), report.alpha);
    io::WriteJsonFile((dir / "profiles.json").string(), report.profiles);
    io::WriteJsonFile((dir / "report.json").string(), report.results);
    results["written_to"] = out_dir;
  }
  return Emit(ctx, "family", io::Digest(report.instance), results, start,
              report.verified ? kSuccess : kVerificationFailure);
}

int CmdTable1(const Context& ctx, const std::string& scale) {
  const auto start = std::chrono::steady_clock::now();
  if (scale != "small") throw ParameterError("--scale supports only small");
  const std::vector<Table1Row> rows = ComputeTable1(ctx.options);
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  const int code = all ? kSuccess : kVerificationFailure;
  if (ctx.format == "csv") {
    *ctx.out << "row,claimed,observed,verdict\n";
    for (const auto& r : rows) {
      *ctx.out << CsvField(r.row) << "," << ToString(r.claimed) << "," << ToString(r.observed) << ","
               << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    return code;
  }
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"row", r.row},
                       {"claimed", io::ToJson(r.claimed)},
                       {"observed", io::ToJson(r.observed)},
                       {"observed_decimal", ToDouble(r.observed)},
                       {"verdict", r.pass ? "PASS" : "FAIL"},
                       {"detail", r.detail}});
  }
  return Emit(ctx, "table1", ParamsDigest("table1:" + scale), Json{{"rows", out}}, start, code);
}

int CmdDynamics(const Context& ctx, const GameArgs& args, const std::string& start_arg, int max_steps, bool trace) {
  const auto start = std::chrono::steady_clock::now();
  if (max_steps < 0) throw ParameterError("--max-steps must be nonnegative");
  const io::Instance inst = io::LoadInstance(args.file);
  const GameWithDefaults g = inst.Build(ctx.options.budget);
  const FiniteGame h = Extend(g.game, args.extension, args.alpha, args.extended);
  const Profile initial =
      start_arg.empty() ? Profile(h.num_players(), 0) : io::ProfileFrom(JsonArgument(start_arg));
  const DynamicsResult dyn = BestResponseDynamics(h, initial, max_steps);
  const Profile& last = dyn.trajectory.back();
  Json results{{"kind", io::KindName(inst.kind)},
               {"extension", args.extension},
               {"status", dyn.status == DynamicsStatus::kConverged ? "converged" : "step-limit"},
               {"steps", dyn.steps},
               {"final", io::ProfileJson(last)},
               {"final_social", io::ToJson(g.game.SocialCost(last))},
               {"final_is_nash", IsPureNash(h, last).is_nash}};
  if (trace) {
    Json t = Json::array();
    for (const auto& p : dyn.trajectory) t.push_back(io::ProfileJson(p));
    results["trajectory"] = t;
  }
  return Emit(ctx, "dynamics", inst.digest, results, start, kSuccess);
}

}  // namespace

FamilyReport RunFamily(const std::string& family, int param, const RunOptions& options) {
  if (family == "congestion17") return CongestionFamily(param, options);
  if (family == "schedB") return SchedulingFamily(param);
  if (family == "auctionTight") return AuctionFamily();
  if (family == "mixedLB") return MixedFamily(param);
  throw ParameterError("unknown family \"" + family + "\"");
}

std::vector<Table1Row> ComputeTable1(const RunOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<Table1Row> rows;
  rows.push_back(WeightedSchedulingRow(rng, options));
  rows.push_back(IdenticalFriendshipRow(rng, options));
  rows.push_back(IdenticalSelfishRow(rng, options));
  rows.push_back(CongestionRow(rng, options));
  rows.push_back(AuctionRow(rng, options));
  rows.push_back(UtilityRow(rng, options));
  return rows;
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Social contribution games: equilibria, smoothness certificates and robust price of anarchy"};
  app.set_version_flag("--version", "scg 1.0.0");
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  ctx.out = &out;
  app.add_option("--format", ctx.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", ctx.options.seed, "seed for generated instances");
  app.add_option("--budget", ctx.options.budget, "maximum number of enumerated profiles");

  GameArgs poa_args;
  std::string solution = "pure";
  auto* poa = app.add_subcommand("poa", "enumerate pure equilibria and report the price of anarchy");
  AddGameArgs(poa, poa_args, true);
  poa->add_option("--solution", solution, "solution concept (pure)");

  GameArgs smooth_args;
  SmoothArgs smooth;
  auto* sm = app.add_subcommand("smoothness", "verify a (lambda, mu) smoothness certificate");
  AddGameArgs(sm, smooth_args, true);
  sm->add_option("--lambda", smooth.lambda, "lambda as p/q");
  sm->add_option("--mu", smooth.mu, "mu as p/q");
  sm->add_option("--sbar", smooth.sbar, "deviation profile (file or inline JSON)");
  sm->add_option("--sstar", smooth.sstar,
                 "optimal profile (file or inline JSON); default: the optimum, or the truthful top bid for auctions");
  sm->add_option("--certificate", smooth.certificate, "certificate file or inline JSON");
  sm->add_option("--flavor", smooth.flavor, "base, altruistic or friendship")
      ->check(CLI::IsMember({"base", "altruistic", "friendship"}));
  sm->add_option("--weights", smooth.weights, "player weights for the friendship flavor");
  sm->add_flag("--scg", smooth.scg, "check the corresponding social contribution game");

  GameArgs scg_args;
  std::string scg_weights;
  std::string emit;
  auto* sc = app.add_subcommand("scg-check", "check SC-boundedness and build the social contribution game");
  AddGameArgs(sc, scg_args, false);
  sc->add_option("--weights", scg_weights, "player weights (file or inline JSON)");
  sc->add_option("--emit-scg", emit, "write the social contribution game as a table game file");

  std::string family;
  std::optional<int> param;
  std::string out_dir;
  auto* fam = app.add_subcommand("family", "build and verify a lower-bound construction");
  fam->add_option("--family", family, "congestion17, schedB, auctionTight or mixedLB")
      ->required()
      ->check(CLI::IsMember({"congestion17", "schedB", "auctionTight", "mixedLB"}));
  fam->add_option("--param", param, "n for congestion17, m for schedB and mixedLB");
  fam->add_option("--out", out_dir, "directory for instance, alpha and profile files");

  std::string scale = "small";
  auto* t1 = app.add_subcommand("table1", "reproduce the robust price of anarchy bounds");
  t1->add_option("--scale", scale, "instance scale (small)");

  GameArgs dyn_args;
  std::string dyn_start;
  int max_steps = 1000;
  bool trace = false;
  auto* dyn = app.add_subcommand("dynamics", "run best-response dynamics");
  AddGameArgs(dyn, dyn_args, true);
  dyn->add_option("--start", dyn_start, "start profile (file or inline JSON); default all zeros");
  dyn->add_option("--max-steps", max_steps, "step limit");
  dyn->add_flag("--trace", trace, "print the trajectory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  for (int i = 0; i < argc; ++i) ctx.command_line += (i ? " " : "") + std::string(argv[i]);
  try {
    if (poa->parsed()) return CmdPoa(ctx, poa_args, solution);
    if (sm->parsed()) return CmdSmoothness(ctx, smooth_args, smooth);
    if (sc->parsed()) return CmdScgCheck(ctx, scg_args, scg_weights, emit);
    if (fam->parsed()) return CmdFamily(ctx, family, param, out_dir);
    if (t1->parsed()) return CmdTable1(ctx, scale);
    if (dyn->parsed()) return CmdDynamics(ctx, dyn_args, dyn_start, max_steps, trace);
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"scg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace scg::cli
