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

#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "scg/cli.h"
#include "scg/io.h"

namespace scg::cli {
namespace {

using io::Json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) { return std::string(SCG_DATA_DIR) + "/" + name; }

Json Results(const Run& run) { return Json::parse(run.out).at("results"); }

TEST_CASE("families verify") {
  const Run c = Invoke({"family", "--family", "congestion17", "--param", "3"});
  CHECK(c.code == kSuccess);
  const Json r = Results(c);
  CHECK(r["equilibrium_is_nash"] == true);
  CHECK(r["ratio"] == "96/43");
  const Run b = Invoke({"family", "--family", "schedB", "--param", "4"});
  CHECK(b.code == kSuccess);
  CHECK(Results(b)["ratio"] == "5/2");
  const Run m = Invoke({"family", "--family", "mixedLB", "--param", "6"});
  CHECK(Results(m)["mixed_cost"] == "17/2");
  const Run a = Invoke({"family", "--family", "auctionTight"});
  CHECK(Results(a)["ratio"]["value"] == "2/1");
  CHECK(Invoke({"family", "--family", "schedB", "--param", "1"}).code == kInputError);
  CHECK(Invoke({"family", "--family", "other"}).code == kInputError);
}

TEST_CASE("family output files") {
  const auto dir = std::filesystem::temp_directory_path() / "scg_cli_test_family";
  std::filesystem::remove_all(dir);
  CHECK(Invoke({"family", "--family", "schedB", "--param", "3", "--out", dir.string()}).code == kSuccess);
  const io::Instance inst = io::LoadInstance((dir / "instance.json").string());
  CHECK(inst.kind == io::InstanceKind::kScheduling);
  const Json profiles = io::ReadJsonFile((dir / "profiles.json").string());
  const std::string alpha = (dir / "alpha.json").string();
  const Run poa = Invoke({"poa", (dir / "instance.json").string(), "--extension", "friendship", "--alpha", alpha,
                          "--budget", "100000000"});
  CHECK(poa.code == kSuccess);
  const Json results = Results(poa);
  bool found = false;
  for (const auto& e : results["equilibria"]) found = found || e["profile"] == profiles["equilibrium"];
  CHECK(found);
  std::filesystem::remove_all(dir);
}

TEST_CASE("poa and dynamics") {
  const Run p = Invoke({"poa", Data("prisoners.json")});
  CHECK(p.code == kSuccess);
  CHECK(Results(p)["pure_poa"]["value"] == "2/1");
  const Run alt = Invoke({"poa", Data("prisoners.json"), "--extension", "altruism", "--alpha", "uniform:1"});
  CHECK(Results(alt)["pure_poa"]["value"] == "1/1");
  const Run d = Invoke({"dynamics", Data("prisoners.json"), "--start", "[0,0]"});
  CHECK(d.code == kSuccess);
  CHECK(Results(d)["final"] == Json::parse("[1,1]"));
  CHECK(Results(d)["final_is_nash"] == true);
  CHECK(Invoke({"poa", Data("prisoners.json"), "--solution", "mixed"}).code == kInputError);
}

TEST_CASE("smoothness verdicts and exit codes") {
  CHECK(Invoke({"smoothness", Data("congestion_small.json"), "--scg", "--lambda", "17/5", "--mu", "2/5"}).code ==
        kSuccess);
  CHECK(Invoke({"smoothness", Data("scheduling_weighted.json"), "--scg", "--lambda", "2", "--mu", "1/2"}).code ==
        kSuccess);
  CHECK(Invoke({"smoothness", Data("auction.json"), "--scg", "--lambda", "1", "--mu", "-1"}).code == kSuccess);
  const Run fail = Invoke({"smoothness", Data("congestion_small.json"), "--scg", "--lambda", "1/10", "--mu", "0"});
  CHECK(fail.code == kVerificationFailure);
  CHECK(Results(fail)["verdict"] == "FAIL");
  CHECK(Results(fail)["violating"].is_array());
  const Run cert = Invoke({"smoothness", Data("scheduling_weighted.json"), "--certificate",
                           R"({"lambda": "2", "mu": "1/2", "sstar": [0, 0, 0], "flavor": "base"})"});
  CHECK(cert.code != kSuccess);
  CHECK(Invoke({"smoothness", Data("prisoners.json"), "--lambda", "1", "--mu", "1"}).code == kInputError);
  CHECK(Invoke({"smoothness", Data("prisoners.json")}).code == kInputError);
}

TEST_CASE("scg-check and emitted table game") {
  const auto file = std::filesystem::temp_directory_path() / "scg_cli_test_scg.json";
  const Run r = Invoke({"scg-check", Data("congestion_small.json"), "--emit-scg", file.string()});
  CHECK(r.code == kSuccess);
  CHECK(Results(r)["sc_bounded"] == true);
  CHECK(Results(r)["strongly_sc_bounded"] == true);
  CHECK(Results(r)["is_scg"] == false);
  const Run again = Invoke({"scg-check", file.string()});
  CHECK(Results(again)["is_scg"] == true);
  CHECK(Results(again)["altruism_identity"]["ok"] == true);
  std::filesystem::remove(file);
  CHECK(Results(Invoke({"scg-check", Data("coverage.json")}))["is_scg"] == true);
}

TEST_CASE("input errors and budget") {
  CHECK(Invoke({"poa", "/nonexistent/game.json"}).code == kInputError);
  CHECK(Invoke({"poa", Data("prisoners.json"), "--bogus"}).code == kInputError);
  CHECK(Invoke({}).code == kInputError);
  CHECK(Invoke({"--budget", "2", "poa", Data("prisoners.json")}).code == kBudgetExceeded);
  CHECK(Invoke({"poa", Data("prisoners.json"), "--format", "xml"}).code == kInputError);
  CHECK(Invoke({"--help"}).code == kSuccess);
}

TEST_CASE("csv output and determinism") {
  const Run csv = Invoke({"--format", "csv", "family", "--family", "mixedLB", "--param", "4"});
  CHECK(csv.out.rfind("field,value\n", 0) == 0);
  CHECK(csv.out.find("ratio,11/8") != std::string::npos);
  const Json a = Results(Invoke({"family", "--family", "congestion17", "--param", "7", "--seed", "5"}));
  const Json b = Results(Invoke({"family", "--family", "congestion17", "--param", "7", "--seed", "5"}));
  CHECK(a == b);
}

}  // namespace
}  // namespace scg::cli
