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

// Min-sum machine scheduling games: jobs pick machines, each machine runs
// its jobs by Smith's rule, a job pays its completion time and the social
// cost is the weighted sum of completion times.

#ifndef SCG_SCHEDULING_H_
#define SCG_SCHEDULING_H_

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "scg/game.h"
#include "scg/rational.h"
#include "scg/social_contribution.h"

namespace scg {

enum class Environment { kR, kQ, kP };

const char* EnvironmentName(Environment env);

// Machines and jobs are 0-based. p[i][j] is the processing time of job j on
// machine i; for Q and P instances it is sizes[j] / speeds[i].
struct SchedulingInstance {
  Environment env = Environment::kR;
  std::vector<std::vector<Rational>> p;
  std::vector<Rational> weights;
  std::vector<Rational> sizes;   // Q and P only
  std::vector<Rational> speeds;  // Q and P only; all 1 for P

  int num_machines() const { return static_cast<int>(p.size()); }
  int num_jobs() const { return static_cast<int>(weights.size()); }

  // Throws ParameterError on nonpositive times, negative weights or
  // inconsistent Q/P data.
  void Validate() const;

  static SchedulingInstance Unrelated(std::vector<std::vector<Rational>> p, std::vector<Rational> weights);
  static SchedulingInstance Related(std::vector<Rational> sizes, std::vector<Rational> speeds,
                                    std::vector<Rational> weights);
  static SchedulingInstance Identical(int machines, std::vector<Rational> sizes,
                                      std::optional<std::vector<Rational>> weights = std::nullopt);
};

// Machine index per job, or kDefault for a job that uses no machine.
using Schedule = std::vector<int>;

// True if job j runs before job k on machine i: smaller p_ij / w_j first,
// weight-0 jobs last, ties by job index.
bool SmithBefore(const SchedulingInstance& inst, int machine, int j, int k);

std::vector<int> MachineOrder(const SchedulingInstance& inst, int machine, std::vector<int> jobs);

// C_j(x); 0 for jobs that use no machine.
std::vector<Rational> CompletionTimes(const SchedulingInstance& inst, std::span<const int> x);

Rational WeightedSocialCost(const SchedulingInstance& inst, std::span<const int> x);

struct WeightConditionCheck {
  bool ok = true;
  // (machine, j, k) with rho_ij <= rho_ik but w_j > w_k.
  std::optional<std::array<int, 3>> witness;
};

WeightConditionCheck CheckWeightCondition(const SchedulingInstance& inst);

// Strategies are machines, defaults leave the job unscheduled. Player
// weights are attached when all job weights are positive.
GameWithDefaults SchedulingGame(const SchedulingInstance& inst);

// w_j C_j(x) + sum of w_k p_ij over jobs k after j on j's machine.
Rational ScheduledContribution(const SchedulingInstance& inst, std::span<const int> x, int job);

// sum_i sum_{j in X*_i} w_j p_ij + sum_i sum_{j in X*_i} sum_{k in X_i}
// w_j w_k min(rho_ij, rho_ik) <= 2 C(x*) + C(x) / 2.
InequalityCheck ColeInequality(const SchedulingInstance& inst, std::span<const int> x, std::span<const int> xstar);

// sum_j Cbar_j(x*_j, x_-j) <= 2 C(x*) + C(x) / 2 on the social contribution
// game.
InequalityCheck ScgSmoothnessChain(const SchedulingInstance& inst, std::span<const int> x,
                                   std::span<const int> xstar);

// Longest job first onto the machine minimizing (h_i + 1) / s_i, lowest
// machine on ties. Throws UnsupportedError for R instances and
// PreconditionError unless all weights are equal.
Schedule MftSchedule(const SchedulingInstance& inst);

// sum_j p_j (1 + floor((n - j) / m)), jobs 1-based with p nondecreasing.
Rational OptimalCostClosedForm(const SchedulingInstance& inst);

// (1/m) sum_j p_j (m + n - j). Requires a P instance with nondecreasing
// sizes and unit weights.
Rational UniformMixedCostClosedForm(const SchedulingInstance& inst);

// sum_j (1/m) sum_i C_j(i, x_-j), evaluated by rescheduling.
Rational UniformMixedCostDirect(const SchedulingInstance& inst, std::span<const int> x);

// Expected weighted social cost when every job picks a machine uniformly at
// random, by linearity over job pairs.
Rational FullyMixedExpectedCost(const SchedulingInstance& inst);

// Every job is indifferent among all machines against the uniform mixture
// of the others, so the uniform mixed profile is a mixed equilibrium.
bool IsUniformMixedNash(const SchedulingInstance& inst);

// 3/2 - 1/(2m).
Rational IdenticalMachinesRobustBound(int machines);

// sum_j E[C_j(xbar_j, x_-j)] <= C(x*) + (1/2 - 1/(2m)) sum_j p_j.
InequalityCheck RpoaPInequality(const SchedulingInstance& inst, std::span<const int> x);

// lambda = 1 + (1/2 - 1/(2m)) sum_j p_j / C(x*), mu = 0, sbar uniform over
// machines, s* the MFT schedule. Its robust bound never exceeds
// IdenticalMachinesRobustBound(m).
SmoothnessCertificate RpoaPCertificate(const SchedulingInstance& inst);

// (1/2 - 1/(2m)) sum_j p_j >= sum_j ((m - j) / m) p_j for nondecreasing p of
// length m. Throws PreconditionError on unsorted input.
bool LinearWeightsInequality(const std::vector<Rational>& p);

// sum_j w_j min_i p_ij, a lower bound on every schedule's social cost.
Rational SocialCostLowerBound(const SchedulingInstance& inst);

struct WeightCounterexample {
  SchedulingInstance instance;
  FriendshipMatrix alpha;
  Schedule x;      // equilibrium of the friendship extension
  Schedule xstar;  // optimum
};

// m unit jobs of weight 1 and m(m - 1) unit jobs of weight 0; weight-1 jobs
// care fully about weight-0 jobs. x stacks the weight-1 jobs on machine 0
// and deals the weight-0 jobs round-robin onto machines 1..m-1. Throws
// ParameterError for m < 2.
WeightCounterexample MakeWeightCounterexample(int machines);

// Forbidden machines get processing time 1 + sum_k max_i p_ik, which no
// job can profitably accept.
SchedulingInstance RestrictedInstance(const std::vector<Rational>& sizes,
                                      const std::vector<std::vector<bool>>& allowed,
                                      std::vector<Rational> weights);

// Random R instance meeting the weight condition: integer weights in
// [1, 4] and p_ij = w_j (c_i w_j + e_ij) with 0 <= e_ij < c_i.
SchedulingInstance RandomWeightConditionInstance(std::mt19937_64& rng, int machines, int jobs);

// Random P or Q instance with small rational sizes, unit weights and, for
// Q, speeds in {1, 2, 3} / {1, 2}.
SchedulingInstance RandomFlowTimeInstance(std::mt19937_64& rng, Environment env, int machines, int jobs);

}  // namespace scg

#endif  // SCG_SCHEDULING_H_
