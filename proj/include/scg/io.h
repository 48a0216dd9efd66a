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

#ifndef SCG_IO_H_
#define SCG_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scg/auctions.h"
#include "scg/congestion.h"
#include "scg/game.h"
#include "scg/rational.h"
#include "scg/scheduling.h"
#include "scg/social_contribution.h"
#include "scg/utility_games.h"

namespace scg::io {

using Json = nlohmann::json;

// Rationals are read from "p/q" strings or JSON integers and always written
// as "p/q" strings. Floating point input is rejected.
Rational RationalFrom(const Json& j);
Json ToJson(const Rational& value);
std::vector<Rational> RationalsFrom(const Json& j);
Json ToJson(const std::vector<Rational>& values);

Profile ProfileFrom(const Json& j);
Json ProfileJson(const Profile& profile);

enum class InstanceKind { kTable, kScheduling, kCongestion, kAuction, kUtility };
const char* KindName(InstanceKind kind);

// A parsed game file. Exactly the field matching `kind` is set, except for
// table games, which are stored as the built game.
struct Instance {
  InstanceKind kind = InstanceKind::kTable;
  std::optional<GameWithDefaults> table;
  std::optional<SchedulingInstance> scheduling;
  std::optional<CongestionGame> congestion;
  std::optional<Auction> auction;
  std::optional<UtilityGame> utility;
  std::string digest;

  GameWithDefaults Build(std::uint64_t budget = kDefaultBudget) const;
  // Declared per-player weights, or all ones.
  std::vector<Rational> Weights(std::uint64_t budget = kDefaultBudget) const;
};

// The kind comes from an optional "kind" field, else from the keys present.
Instance ParseInstance(const Json& j);
Instance LoadInstance(const std::string& path);
Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

Json ToJson(const SchedulingInstance& inst);
Json ToJson(const CongestionGame& cg);
Json ToJson(const Auction& auction);
Json ToJson(const SetFunction& v);
Json ToJson(const UtilityGame& game);
// Full cost table in lexicographic profile order, with the extended table
// when every player has a default.
Json TableGameJson(const FiniteGame& game, const DefaultStrategyMap& defaults, std::uint64_t budget = kDefaultBudget);

SchedulingInstance SchedulingFrom(const Json& j);
CongestionGame CongestionFrom(const Json& j);
Auction AuctionFrom(const Json& j);
SetFunction SetFunctionFrom(const Json& j);
UtilityGame UtilityFrom(const Json& j);
GameWithDefaults TableGameFrom(const Json& j);

// A pure profile is an integer array; a mixed one lists, per player, either
// an integer or an array of [strategy, "p/q"] pairs.
MixedStrategyProfile MixedFrom(const Json& j);
Json ToJson(const MixedStrategyProfile& mixed);

Json ToJson(const SmoothnessCertificate& cert);
SmoothnessCertificate CertificateFrom(const Json& j);

// An array of rationals is an altruism vector, an array of arrays a
// friendship matrix.
AltruismVector AltruismFrom(const Json& j);
FriendshipMatrix FriendshipFrom(const Json& j);
Json ToJson(const FriendshipMatrix& alpha);

// FNV-1a over the canonical (sorted-key, compact) serialization.
std::string Digest(const Json& j);

}  // namespace scg::io

#endif  // SCG_IO_H_
