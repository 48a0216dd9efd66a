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

#ifndef SCG_CLI_H_
#define SCG_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "scg/io.h"
#include "scg/rational.h"

namespace scg::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2, kBudgetExceeded = 3 };

struct RunOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
};

// Family construction plus its verification.
struct FamilyReport {
  bool verified = false;
  io::Json instance;  // game file of the constructed instance
  io::Json alpha;     // null when the family has no alpha
  io::Json profiles;  // named profiles, e.g. "equilibrium" and "optimum"
  io::Json results;
};

// family is one of congestion17, schedB, auctionTight, mixedLB.
FamilyReport RunFamily(const std::string& family, int param, const RunOptions& options);

struct Table1Row {
  std::string row;
  Rational claimed;
  Rational observed;
  bool pass = false;
  io::Json detail;
};

// Family size of the congestion row.
inline constexpr int kTable1CongestionBlocks = 500;

std::vector<Table1Row> ComputeTable1(const RunOptions& options);

// Parses argv and runs one subcommand; returns the process exit code.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scg::cli

#endif  // SCG_CLI_H_
