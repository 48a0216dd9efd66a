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

// Single-item auctions where the highest bid wins and the winner pays at
// most the second-highest bid. Bidders never overbid. A bid of 0 is
// abstention: it never wins, and with no positive bid nobody gets the item.

#ifndef SCG_AUCTIONS_H_
#define SCG_AUCTIONS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "scg/distribution.h"
#include "scg/equilibria.h"
#include "scg/game.h"
#include "scg/rational.h"
#include "scg/social_contribution.h"

namespace scg {

// Payment of `winner` under bids; must never exceed the second-highest bid.
using PricingRule = std::function<Rational(std::span<const Rational> bids, int winner)>;

struct Auction {
  std::vector<Rational> valuations;
  // Ascending distinct bids per bidder, each within [0, v_i].
  std::vector<std::vector<Rational>> grids;
  // Second-price when unset.
  PricingRule pricing;

  int num_bidders() const { return static_cast<int>(valuations.size()); }
  void Validate() const;
};

// Grid {0, v_1, ..., v_n} intersected with [0, v_i] unless grids are given.
Auction MakeAuction(std::vector<Rational> valuations,
                    std::optional<std::vector<std::vector<Rational>>> grids = std::nullopt);

struct AuctionOutcome {
  std::optional<int> winner;
  Rational price;
  std::vector<Rational> payoffs;
  Rational welfare;  // v of the winner, 0 without one
};

// Highest positive bid wins, lowest index among ties.
std::optional<int> Winner(std::span<const Rational> bids);

// Highest bid among the other bidders, 0 if there is none.
Rational SecondPrice(std::span<const Rational> bids, int winner);

AuctionOutcome ResolveBids(const Auction& auction, std::span<const Rational> bids);

// Strategies index the grids; the default bids 0.
std::vector<Rational> BidsOf(const Auction& auction, std::span<const int> profile);

// Payoff maximization with welfare Pi = v_winner. Throws PreconditionError
// if a custom pricing rule charges more than the second price somewhere on
// the grid.
GameWithDefaults AuctionGame(const Auction& auction, std::uint64_t budget = kDefaultBudget);

// Pi(b) - Pi(0, b_-i): v_winner - v_runner-up for the winner, else 0.
Rational ScgPayoff(const Auction& auction, int bidder, std::span<const int> profile);

// b*: the highest-valuation bidder bids v_i (lowest index on ties), the
// others bid 0.
Profile WelfareOptimalBids(const Auction& auction);

struct CertifiedBound {
  SmoothnessCertificate cert;
  SmoothnessVerdict verdict;
};

// (lambda, mu) = (1, -1) with sbar = s* = b* on the social contribution
// game, i.e. sum_i Pibar_i(b*_i, b_-i) >= Pi(b*) - Pi(b) for all b; robust
// bound 2.
CertifiedBound AuctionPoa2Certificate(const Auction& auction, std::uint64_t budget = kDefaultBudget);

// Largest Pi(b*) / E_sigma[Pi] over the candidates. Throws
// PreconditionError if a candidate is not a coarse equilibrium of the
// friendship extension.
PoaValue FriendshipCoarsePoaCheck(const Auction& auction, const FriendshipMatrix& alpha,
                                  const std::vector<FiniteSupportDistribution>& candidates,
                                  std::uint64_t budget = kDefaultBudget);

struct TightAuctionExample {
  Auction auction;
  FriendshipMatrix alpha;
  Profile equilibrium;  // bidder 0 bids 1, bidder 1 bids 0
};

// v = (1, 2) on the default grids, all affections 1.
TightAuctionExample MakeTightAuctionExample();

}  // namespace scg

#endif  // SCG_AUCTIONS_H_
