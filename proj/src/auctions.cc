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

#include "scg/auctions.h"

#include <algorithm>
#include <string>
#include <utility>

#include "scg/errors.h"

namespace scg {

void Auction::Validate() const {
  const int n = num_bidders();
  if (n < 1) throw ParameterError("an auction needs at least one bidder");
  if (static_cast<int>(grids.size()) != n) throw ParameterError("one bid grid per bidder required");
  for (int i = 0; i < n; ++i) {
    if (valuations[i] < 0) throw ParameterError("valuations must be nonnegative");
    if (grids[i].empty()) throw ParameterError("bid grid of bidder " + std::to_string(i) + " is empty");
    for (std::size_t t = 0; t < grids[i].size(); ++t) {
      const Rational& bid = grids[i][t];
      if (bid < 0) throw ParameterError("bids must be nonnegative");
      if (bid > valuations[i]) {
        throw ParameterError("bidder " + std::to_string(i) + " would overbid with " + ToString(bid));
      }
      if (t > 0 && grids[i][t - 1] >= bid) throw ParameterError("bid grids must be strictly increasing");
    }
  }
}

Auction MakeAuction(std::vector<Rational> valuations, std::optional<std::vector<std::vector<Rational>>> grids) {
  Auction auction;
  if (grids) {
    auction.grids = std::move(*grids);
  } else {
    for (const auto& vi : valuations) {
      std::vector<Rational> grid{Rational(0)};
      for (const auto& vj : valuations) {
        if (vj <= vi) grid.push_back(vj);
      }
      std::sort(grid.begin(), grid.end());
      grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
      auction.grids.push_back(std::move(grid));
    }
  }
  auction.valuations = std::move(valuations);
  auction.Validate();
  return auction;
}

std::optional<int> Winner(std::span<const Rational> bids) {
  std::optional<int> best;
  for (int i = 0; i < static_cast<int>(bids.size()); ++i) {
    if (bids[i] > 0 && (!best || bids[i] > bids[*best])) best = i;
  }
  return best;
}

Rational SecondPrice(std::span<const Rational> bids, int winner) {
  Rational second = 0;
  for (int i = 0; i < static_cast<int>(bids.size()); ++i) {
    if (i != winner && bids[i] > second) second = bids[i];
  }
  return second;
}

AuctionOutcome ResolveBids(const Auction& auction, std::span<const Rational> bids) {
  AuctionOutcome out;
  out.payoffs.assign(auction.num_bidders(), Rational(0));
  out.winner = Winner(bids);
  if (!out.winner) return out;
  const int w = *out.winner;
  out.price = auction.pricing ? auction.pricing(bids, w) : SecondPrice(bids, w);
  out.payoffs[w] = auction.valuations[w] - out.price;
  out.welfare = auction.valuations[w];
  return out;
}

std::vector<Rational> BidsOf(const Auction& auction, std::span<const int> profile) {
  std::vector<Rational> bids(auction.num_bidders(), Rational(0));
  for (int i = 0; i < auction.num_bidders(); ++i) {
    if (profile[i] != kDefault) bids[i] = auction.grids[i].at(profile[i]);
  }
  return bids;
}

GameWithDefaults AuctionGame(const Auction& auction, std::uint64_t budget) {
  auction.Validate();
  auto shared = std::make_shared<const Auction>(auction);
  Evaluator eval = [shared](std::span<const int> profile) {
    const AuctionOutcome out = ResolveBids(*shared, BidsOf(*shared, profile));
    return Outcome{out.payoffs, out.welfare};
  };
  std::vector<int> counts;
  for (const auto& g : auction.grids) counts.push_back(static_cast<int>(g.size()));
  FiniteGame game(counts, Orientation::kMaximize, eval);
  if (auction.pricing) {
    const ProfileSpace space = ProfileSpace::Checked(counts, budget);
    Profile profile(counts.size(), 0);
    do {
      const auto bids = BidsOf(auction, profile);
      const auto w = Winner(bids);
      if (!w) continue;
      const Rational price = auction.pricing(bids, *w);
      if (price < 0 || price > SecondPrice(bids, *w)) {
        throw PreconditionError("pricing rule leaves the second-price class");
      }
    } while (space.Next(profile));
  }
  return {std::move(game), DefaultStrategyMap::All(auction.num_bidders(), eval)};
}

Rational ScgPayoff(const Auction& auction, int bidder, std::span<const int> profile) {
  auto bids = BidsOf(auction, profile);
  const Rational with = ResolveBids(auction, bids).welfare;
  bids[bidder] = 0;
  return with - ResolveBids(auction, bids).welfare;
}

Profile WelfareOptimalBids(const Auction& auction) {
  int top = 0;
  for (int i = 1; i < auction.num_bidders(); ++i) {
    if (auction.valuations[i] > auction.valuations[top]) top = i;
  }
  Profile b(auction.num_bidders(), 0);
  for (int i = 0; i < auction.num_bidders(); ++i) {
    const auto& grid = auction.grids[i];
    const Rational target = i == top ? auction.valuations[i] : Rational(0);
    const auto it = std::find(grid.begin(), grid.end(), target);
    if (it == grid.end()) {
      throw PreconditionError("bid grid of bidder " + std::to_string(i) + " lacks " + ToString(target));
    }
    b[i] = static_cast<int>(it - grid.begin());
  }
  return b;
}

CertifiedBound AuctionPoa2Certificate(const Auction& auction, std::uint64_t budget) {
  const GameWithDefaults g = AuctionGame(auction, budget);
  const GameWithDefaults scg = CorrespondingScg(g.game, g.defaults);
  const Profile bstar = WelfareOptimalBids(auction);
  CertifiedBound out{SmoothnessCertificate{Rational(1), Rational(-1), MixedStrategyProfile::Pure(bstar), bstar,
                                           SmoothnessFlavor::kBase},
                     {}};
  out.verdict = CheckSmoothnessBase(scg.game, out.cert, budget);
  return out;
}

PoaValue FriendshipCoarsePoaCheck(const Auction& auction, const FriendshipMatrix& alpha,
                                  const std::vector<FiniteSupportDistribution>& candidates, std::uint64_t budget) {
  const GameWithDefaults g = AuctionGame(auction, budget);
  const FiniteGame extension = FriendshipExtension(g.game, alpha);
  const Rational optimum = SocialOptimum(g.game, budget).value;
  PoaValue worst;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (!IsCoarseEquilibrium(extension, candidates[k])) {
      throw PreconditionError("candidate " + std::to_string(k) + " is not a coarse equilibrium");
    }
    worst = MaxPoa(worst, EfficiencyRatio(Orientation::kMaximize, ExpectedSocialCost(g.game, candidates[k]),
                                          optimum));
  }
  return worst;
}

TightAuctionExample MakeTightAuctionExample() {
  Auction auction = MakeAuction({Rational(1), Rational(2)});
  // Grids {0, 1} and {0, 1, 2}.
  return {std::move(auction), FriendshipMatrix::AllOnes(2), Profile{1, 0}};
}

}  // namespace scg
