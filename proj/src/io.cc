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

#include "scg/io.h"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "scg/errors.h"

namespace scg::io {
namespace {

const Json& Need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int IntFrom(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) throw ParseError(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

std::vector<int> IntsFrom(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(IntFrom(e, what));
  return out;
}

Orientation OrientationFrom(const Json& j) {
  if (!j.contains("orientation")) return Orientation::kMinimize;
  const auto& o = j.at("orientation");
  if (o == "min") return Orientation::kMinimize;
  if (o == "max") return Orientation::kMaximize;
  throw ParseError("orientation must be \"min\" or \"max\"");
}

std::vector<Outcome> OutcomesFrom(const Json& costs, const Json* social, std::size_t rows, std::size_t players,
                                  const char* what) {
  if (!costs.is_array() || costs.size() != rows) {
    throw ParseError(std::string(what) + " must have one row per profile (" + std::to_string(rows) + ")");
  }
  const bool sum = social == nullptr || (social->is_string() && *social == "sum");
  if (!sum && (!social->is_array() || social->size() != rows)) {
    throw ParseError(std::string(what) + ": social must be \"sum\" or one value per profile");
  }
  std::vector<Outcome> out(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    out[r].costs = RationalsFrom(costs[r]);
    if (out[r].costs.size() != players) throw ParseError(std::string(what) + " rows need one entry per player");
    out[r].social = sum ? Sum(out[r].costs) : RationalFrom((*social)[r]);
  }
  return out;
}

InstanceKind DetectKind(const Json& j) {
  if (!j.is_object()) throw ParseError("a game file must hold a JSON object");
  if (j.contains("kind")) {
    const std::string k = j.at("kind").get<std::string>();
    if (k == "table") return InstanceKind::kTable;
    if (k == "scheduling") return InstanceKind::kScheduling;
    if (k == "congestion") return InstanceKind::kCongestion;
    if (k == "auction") return InstanceKind::kAuction;
    if (k == "utility") return InstanceKind::kUtility;
    throw ParseError("unknown game kind \"" + k + "\"");
  }
  if (j.contains("costs")) return InstanceKind::kTable;
  if (j.contains("env")) return InstanceKind::kScheduling;
  if (j.contains("resources")) return InstanceKind::kCongestion;
  if (j.contains("valuations")) return InstanceKind::kAuction;
  if (j.contains("ground")) return InstanceKind::kUtility;
  throw ParseError("cannot tell which kind of game the file describes");
}

}  // namespace

Rational RationalFrom(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  throw ParseError("rationals must be integers or \"p/q\" strings");
}

Json ToJson(const Rational& value) { return ToString(value); }

std::vector<Rational> RationalsFrom(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(RationalFrom(e));
  return out;
}

Json ToJson(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(ToJson(v));
  return out;
}

Profile ProfileFrom(const Json& j) { return IntsFrom(j, "profile entries"); }

Json ProfileJson(const Profile& profile) { return Json(profile); }

const char* KindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kTable: return "table";
    case InstanceKind::kScheduling: return "scheduling";
    case InstanceKind::kCongestion: return "congestion";
    case InstanceKind::kAuction: return "auction";
    case InstanceKind::kUtility: return "utility";
  }
  return "unknown";
}

GameWithDefaults Instance::Build(std::uint64_t budget) const {
  switch (kind) {
    case InstanceKind::kTable: return *table;
    case InstanceKind::kScheduling: return SchedulingGame(*scheduling);
    case InstanceKind::kCongestion: return MakeCongestionGame(*congestion);
    case InstanceKind::kAuction: return AuctionGame(*auction, budget);
    case InstanceKind::kUtility: return MakeUtilityGame(*utility);
  }
  throw UnsupportedError("unknown game kind");
}

std::vector<Rational> Instance::Weights(std::uint64_t budget) const {
  if (kind == InstanceKind::kScheduling) return scheduling->weights;
  return Build(budget).game.WeightsOrOnes();
}

Instance ParseInstance(const Json& j) {
  Instance inst;
  inst.kind = DetectKind(j);
  try {
    switch (inst.kind) {
      case InstanceKind::kTable: inst.table = TableGameFrom(j); break;
      case InstanceKind::kScheduling: inst.scheduling = SchedulingFrom(j); break;
      case InstanceKind::kCongestion: inst.congestion = CongestionFrom(j); break;
      case InstanceKind::kAuction: inst.auction = AuctionFrom(j); break;
      case InstanceKind::kUtility: inst.utility = UtilityFrom(j); break;
    }
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
  inst.digest = Digest(j);
  return inst;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

Instance LoadInstance(const std::string& path) { return ParseInstance(ReadJsonFile(path)); }

Json ToJson(const SchedulingInstance& inst) {
  Json j;
  j["kind"] = "scheduling";
  j["env"] = EnvironmentName(inst.env);
  j["m"] = inst.num_machines();
  j["n"] = inst.num_jobs();
  if (inst.env == Environment::kR) {
    Json rows = Json::array();
    for (const auto& row : inst.p) rows.push_back(ToJson(row));
    j["p"] = rows;
  } else {
    j["p"] = ToJson(inst.sizes);
    if (inst.env == Environment::kQ) j["speeds"] = ToJson(inst.speeds);
  }
  j["weights"] = ToJson(inst.weights);
  return j;
}

SchedulingInstance SchedulingFrom(const Json& j) {
  const std::string env = Need(j, "env").get<std::string>();
  const Json& p = Need(j, "p");
  std::optional<std::vector<Rational>> weights;
  if (j.contains("weights")) weights = RationalsFrom(j.at("weights"));
  SchedulingInstance inst;
  if (env == "R") {
    if (!p.is_array()) throw ParseError("p must be an m x n array");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : p) rows.push_back(RationalsFrom(row));
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    inst = SchedulingInstance::Unrelated(std::move(rows), weights ? *weights : std::vector<Rational>(n, Rational(1)));
  } else if (env == "Q") {
    auto sizes = RationalsFrom(p);
    const std::size_t n = sizes.size();
    inst = SchedulingInstance::Related(std::move(sizes), RationalsFrom(Need(j, "speeds")),
                                       weights ? *weights : std::vector<Rational>(n, Rational(1)));
  } else if (env == "P") {
    inst = SchedulingInstance::Identical(IntFrom(Need(j, "m"), "m"), RationalsFrom(p), weights);
  } else {
    throw ParseError("env must be \"R\", \"Q\" or \"P\"");
  }
  if (j.contains("m") && IntFrom(j.at("m"), "m") != inst.num_machines()) throw ParseError("m does not match p");
  if (j.contains("n") && IntFrom(j.at("n"), "n") != inst.num_jobs()) throw ParseError("n does not match p");
  return inst;
}

Json ToJson(const CongestionGame& cg) {
  Json j;
  j["kind"] = "congestion";
  j["resources"] = cg.num_resources;
  Json delays = Json::array();
  for (const auto& d : cg.delays) delays.push_back({{"a", ToJson(d.a)}, {"b", ToJson(d.b)}});
  j["delays"] = delays;
  j["strategies"] = cg.strategies;
  return j;
}

CongestionGame CongestionFrom(const Json& j) {
  CongestionGame cg;
  cg.num_resources = IntFrom(Need(j, "resources"), "resources");
  if (j.contains("delays")) {
    for (const auto& d : j.at("delays")) {
      cg.delays.push_back(LinearDelay{d.contains("a") ? RationalFrom(d.at("a")) : Rational(1),
                                      d.contains("b") ? RationalFrom(d.at("b")) : Rational(0)});
    }
  } else {
    cg.delays.assign(cg.num_resources, LinearDelay{});
  }
  for (const auto& player : Need(j, "strategies")) {
    std::vector<std::vector<int>> sets;
    for (const auto& set : player) sets.push_back(IntsFrom(set, "resource indices"));
    cg.strategies.push_back(std::move(sets));
  }
  cg.Validate();
  return cg;
}

Json ToJson(const Auction& auction) {
  Json j;
  j["kind"] = "auction";
  j["valuations"] = ToJson(auction.valuations);
  Json grids = Json::array();
  for (const auto& g : auction.grids) grids.push_back(ToJson(g));
  j["grids"] = grids;
  j["pricing"] = "second-price";
  return j;
}

Auction AuctionFrom(const Json& j) {
  if (j.contains("pricing") && j.at("pricing") != "second-price") {
    throw UnsupportedError("only second-price pricing can be read from a file");
  }
  std::optional<std::vector<std::vector<Rational>>> grids;
  if (j.contains("grids")) {
    grids.emplace();
    for (const auto& g : j.at("grids")) grids->push_back(RationalsFrom(g));
  }
  return MakeAuction(RationalsFrom(Need(j, "valuations")), grids);
}

Json ToJson(const SetFunction& v) {
  Json j;
  j["ground"] = v.ground();
  Json values = Json::object();
  for (Subset s = 0; s < v.values().size(); ++s) values[std::to_string(s)] = ToJson(v(s));
  j["values"] = values;
  return j;
}

SetFunction SetFunctionFrom(const Json& j) {
  const int ground = IntFrom(Need(j, "ground"), "ground");
  if (ground < 0 || ground > 16) throw ParseError("ground must be between 0 and 16");
  const Json& values = Need(j, "values");
  const std::size_t size = std::size_t{1} << ground;
  std::vector<Rational> table(size);
  if (values.is_array()) {
    if (values.size() != size) throw ParseError("the value table must list every subset");
    for (std::size_t s = 0; s < size; ++s) table[s] = RationalFrom(values[s]);
  } else {
    if (!values.is_object() || values.size() != size) throw ParseError("the value table must list every subset");
    std::vector<bool> seen(size, false);
    for (const auto& [key, value] : values.items()) {
      std::size_t pos = 0;
      unsigned long mask = 0;
      try {
        mask = std::stoul(key, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != key.size() || pos == 0 || mask >= size) throw ParseError("bad subset key \"" + key + "\"");
      if (seen[mask]) throw ParseError("duplicate subset key \"" + key + "\"");
      seen[mask] = true;
      table[mask] = RationalFrom(value);
    }
  }
  return SetFunction(ground, std::move(table));
}

Json ToJson(const UtilityGame& game) {
  Json j = ToJson(game.v);
  j["kind"] = "utility";
  j["strategies"] = game.strategies;
  j["rule"] = game.rule == PayoffRule::kBasic ? "basic" : "fair-share";
  return j;
}

UtilityGame UtilityFrom(const Json& j) {
  UtilityGame game{SetFunctionFrom(j), {}, PayoffRule::kBasic};
  for (const auto& player : Need(j, "strategies")) {
    std::vector<Subset> sets;
    for (const auto& s : player) {
      const int mask = IntFrom(s, "strategy subsets");
      if (mask < 0 || mask >= (1 << game.v.ground())) throw ParseError("strategy subset outside the ground set");
      sets.push_back(static_cast<Subset>(mask));
    }
    if (sets.empty()) throw ParseError("every player needs a strategy");
    game.strategies.push_back(std::move(sets));
  }
  if (j.contains("rule")) {
    const auto& rule = j.at("rule");
    if (rule == "basic") {
      game.rule = PayoffRule::kBasic;
    } else if (rule == "fair-share") {
      game.rule = PayoffRule::kFairShare;
    } else {
      throw ParseError("rule must be \"basic\" or \"fair-share\"");
    }
  }
  return game;
}

Json TableGameJson(const FiniteGame& game, const DefaultStrategyMap& defaults, std::uint64_t budget) {
  Json j;
  j["kind"] = "table";
  j["players"] = game.num_players();
  j["strategies"] = game.strategy_counts();
  j["orientation"] = game.orientation() == Orientation::kMinimize ? "min" : "max";
  if (game.weights()) j["weights"] = ToJson(*game.weights());
  auto dump = [&](const std::vector<int>& counts, auto&& eval) {
    const ProfileSpace space = ProfileSpace::Checked(counts, budget);
    Json costs = Json::array();
    Json social = Json::array();
    Profile p(counts.size(), 0);
    do {
      const Outcome out = eval(p);
      costs.push_back(ToJson(out.costs));
      social.push_back(ToJson(out.social));
    } while (space.Next(p));
    return std::make_pair(costs, social);
  };
  auto [costs, social] = dump(game.strategy_counts(), [&](const Profile& p) { return game.Evaluate(p); });
  j["costs"] = costs;
  j["social"] = social;
  if (defaults.num_players() == game.num_players() && defaults.all_registered()) {
    std::vector<int> ext = game.strategy_counts();
    for (int& k : ext) ++k;
    auto [ecosts, esocial] = dump(ext, [&](Profile p) {
      for (int i = 0; i < game.num_players(); ++i) {
        if (p[i] == game.strategy_counts()[i]) p[i] = kDefault;
      }
      return EvaluateWithDefaults(game, defaults, p);
    });
    j["extended_costs"] = ecosts;
    j["extended_social"] = esocial;
  }
  return j;
}

GameWithDefaults TableGameFrom(const Json& j) {
  const std::vector<int> counts = IntsFrom(Need(j, "strategies"), "strategy counts");
  if (j.contains("players") && IntFrom(j.at("players"), "players") != static_cast<int>(counts.size())) {
    throw ParseError("players does not match strategies");
  }
  const ProfileSpace space = ProfileSpace::Checked(counts, kDefaultBudget);
  const Json* social = j.contains("social") ? &j.at("social") : nullptr;
  auto outcomes = OutcomesFrom(Need(j, "costs"), social, space.size(), counts.size(), "costs");
  std::optional<std::vector<Rational>> weights;
  if (j.contains("weights")) weights = RationalsFrom(j.at("weights"));
  std::optional<std::vector<Outcome>> extended;
  if (j.contains("extended_costs")) {
    std::vector<int> ext = counts;
    for (int& k : ext) ++k;
    const ProfileSpace espace = ProfileSpace::Checked(ext, kDefaultBudget);
    const Json* esocial = j.contains("extended_social") ? &j.at("extended_social") : nullptr;
    extended = OutcomesFrom(j.at("extended_costs"), esocial, espace.size(), counts.size(), "extended_costs");
  }
  return MakeTableGame(counts, OrientationFrom(j), std::move(outcomes), std::move(weights), std::move(extended));
}

MixedStrategyProfile MixedFrom(const Json& j) {
  if (!j.is_array()) throw ParseError("sbar must be an array");
  std::vector<std::vector<StrategyWeight>> marginals;
  for (const auto& entry : j) {
    if (entry.is_number_integer()) {
      marginals.push_back({StrategyWeight{IntFrom(entry, "strategy"), Rational(1)}});
      continue;
    }
    if (!entry.is_array()) throw ParseError("sbar entries must be integers or [strategy, probability] lists");
    std::vector<StrategyWeight> m;
    for (const auto& pair : entry) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("mixed entries must be [strategy, probability]");
      m.push_back(StrategyWeight{IntFrom(pair[0], "strategy"), RationalFrom(pair[1])});
    }
    marginals.push_back(std::move(m));
  }
  return MixedStrategyProfile(std::move(marginals));
}

Json ToJson(const MixedStrategyProfile& mixed) {
  if (const auto pure = mixed.AsPure()) return ProfileJson(*pure);
  Json out = Json::array();
  for (int i = 0; i < mixed.num_players(); ++i) {
    Json m = Json::array();
    for (const auto& w : mixed.of(i)) m.push_back(Json::array({w.strategy, ToJson(w.probability)}));
    out.push_back(m);
  }
  return out;
}

Json ToJson(const SmoothnessCertificate& cert) {
  return Json{{"lambda", ToJson(cert.lambda)},
              {"mu", ToJson(cert.mu)},
              {"sbar", ToJson(cert.sbar)},
              {"sstar", ProfileJson(cert.sstar)},
              {"flavor", FlavorName(cert.flavor)}};
}

SmoothnessCertificate CertificateFrom(const Json& j) {
  const Profile sstar = ProfileFrom(Need(j, "sstar"));
  return SmoothnessCertificate{RationalFrom(Need(j, "lambda")), RationalFrom(Need(j, "mu")),
                               j.contains("sbar") ? MixedFrom(j.at("sbar")) : MixedStrategyProfile::Pure(sstar), sstar,
                               j.contains("flavor") ? ParseFlavor(j.at("flavor").get<std::string>())
                                                    : SmoothnessFlavor::kBase};
}

AltruismVector AltruismFrom(const Json& j) {
  if (j.is_object()) return AltruismVector(RationalsFrom(Need(j, "alpha")), j.value("extended", false));
  return AltruismVector(RationalsFrom(j));
}

FriendshipMatrix FriendshipFrom(const Json& j) {
  const Json& rows = j.is_object() ? Need(j, "alpha") : j;
  if (!rows.is_array()) throw ParseError("a friendship matrix must be an array of rows");
  std::vector<std::vector<Rational>> alpha;
  for (const auto& row : rows) alpha.push_back(RationalsFrom(row));
  return FriendshipMatrix(std::move(alpha));
}

Json ToJson(const FriendshipMatrix& alpha) {
  Json rows = Json::array();
  for (const auto& row : alpha.rows()) rows.push_back(ToJson(row));
  return rows;
}

std::string Digest(const Json& j) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace scg::io
