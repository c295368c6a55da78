// Copyright 2026 The Credible Authors
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

#include "credible/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "test_support.h"

namespace credible {
namespace {

using testing::Fixture;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool Has(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

std::filesystem::path Scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "credible_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST_CASE("credible verify reports both players on the punishment profile") {
  const Run r = Invoke({"credible", "verify", Fixture("twice_cde.game"),
                        Fixture("pstar.profile")});
  CHECK(r.code == kExitVerdictFail);
  CHECK(Has(r.out, "credible: FAIL"));
  CHECK(Has(r.out, "Row behaves differently at histories [(C,C)] and [(C,D)]"));
  CHECK(Has(r.out, "3 vs 1"));
  CHECK(Has(r.out, "Column"));

  const Run spne = Invoke({"spne", "verify", Fixture("twice_cde.game"),
                           Fixture("pstar.profile")});
  CHECK(spne.code == kExitOk);
}

TEST_CASE("structured verdict carries the witnesses") {
  const Run r = Invoke({"credible", "verify", Fixture("twice_cde.game"),
                        Fixture("pstar.profile"), "--format", "structured"});
  CHECK(r.code == kExitVerdictFail);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"]["pass"] == false);
  CHECK(j["verdict"]["witnesses"].size() == 2);
}

TEST_CASE("threat profile passes both checks") {
  for (const char* kind : {"spne", "credible"}) {
    const Run r = Invoke({kind, "verify", Fixture("threat.game"),
                          Fixture("threat.profile")});
    CHECK(r.code == kExitOk);
  }
  const Run stage = Invoke({"nash", Fixture("threat_stage1.game"), "--check", "B,B"});
  CHECK(stage.code == kExitVerdictFail);
}

TEST_CASE("nash lists pure and mixed equilibria") {
  const Run r = Invoke({"nash", Fixture("cde.game")});
  CHECK(r.code == kExitOk);
  CHECK(Has(r.out, "(D,D) payoffs (1, 1)"));
  CHECK(Has(r.out, "(E,E) payoffs (3, 3)"));
  CHECK(Has(r.out, "(3/4 D + 1/4 E, 3/4 D + 1/4 E) payoffs (3/4, 3/4)"));
  CHECK(Invoke({"nash", Fixture("cde.game"), "--check", "D,D"}).code == kExitOk);
  CHECK(Invoke({"nash", Fixture("cde.game"), "--check", "C,C"}).code ==
        kExitVerdictFail);
}

TEST_CASE("automaton commands") {
  const Run credible = Invoke({"auto", "credible", Fixture("pd.game"),
                               Fixture("grim.auto"), "--delta", "3/5"});
  CHECK(credible.code == kExitVerdictFail);
  CHECK(Has(credible.out, "15/2 vs 5/2"));
  CHECK(Invoke({"auto", "spne", Fixture("pd.game"), Fixture("grim.auto")}).code ==
        kExitOk);
  const Run low = Invoke({"auto", "spne", Fixture("pd.game"),
                          Fixture("grim.auto"), "--delta", "1/4"});
  CHECK(low.code == kExitVerdictFail);
  CHECK(Has(low.out, "deviates to D: 4 -> 16/3"));
  const Run values = Invoke({"auto", "values", Fixture("pd.game"),
                             Fixture("grim.auto"), "--format", "structured"});
  CHECK(values.code == kExitOk);
  const auto j = nlohmann::json::parse(values.out);
  CHECK(j["residuals_zero"] == true);
  CHECK(Invoke({"auto", "spne", Fixture("pd.game"),
                Fixture("always_defect.auto")}).code == kExitOk);
  CHECK(Invoke({"auto", "spne", Fixture("pd.game"),
                Fixture("tit_for_tat.auto")}).code != kExitInputError);
}

TEST_CASE("unique and construct") {
  const Run pd = Invoke({"unique", Fixture("pd_repeated.game")});
  CHECK(pd.code == kExitOk);
  CHECK(Has(pd.out, "unique credible equilibrium: always (D,D)"));
  const Run cde = Invoke({"unique", Fixture("twice_cde.game")});
  CHECK(cde.code == kExitVerdictFail);
  CHECK(Has(cde.out, "no uniqueness guarantee"));
  const Run dup = Invoke({"unique", Fixture("duplicate_column.game")});
  CHECK(dup.code == kExitVerdictFail);
  CHECK(Has(dup.out, "uniqueness unknown"));

  const auto out = Scratch("constructed.profile");
  const Run c = Invoke({"credible", "construct", Fixture("twice_cde.game"),
                        "--out", out.string()});
  CHECK(c.code == kExitOk);
  CHECK(Invoke({"credible", "verify", Fixture("twice_cde.game"), out.string()})
            .code == kExitOk);
  CHECK(Invoke({"credible", "construct", Fixture("pd.game"), "--out",
                out.string()}).code == kExitInputError);
  const Run forever = Invoke({"credible", "construct", Fixture("pd.game")});
  CHECK(forever.code == kExitOk);
  CHECK(Has(forever.out, "always (D,D)"));
}

TEST_CASE("enumeration and caps") {
  const Run r = Invoke({"spne", "enumerate", Fixture("pd_twice.game"),
                        "--format", "structured"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 1);
  CHECK(j["truncated"] == false);
  CHECK(Invoke({"spne", "enumerate", Fixture("twice_cde.game"), "--cap", "20"})
            .code == kExitCapExceeded);
  CHECK(Invoke({"spne", "verify", Fixture("twice_cde.game"),
                Fixture("pstar.profile"), "--cap", "5"}).code ==
        kExitCapExceeded);
  CHECK(Invoke({"tree", "prop3", Fixture("tied_copies.tree"), "--cap", "3"})
            .code == kExitCapExceeded);
}

TEST_CASE("tree commands") {
  const Run p3 = Invoke({"tree", "prop3", Fixture("tied_copies.tree")});
  CHECK(p3.code == kExitVerdictFail);
  CHECK(Invoke({"tree", "prop3", Fixture("take_or_pass.tree")}).code == kExitOk);
  CHECK(Invoke({"tree", "spne", Fixture("tied_copies.tree"),
                Fixture("tied_copies.strategy")}).code == kExitOk);
  CHECK(Invoke({"tree", "credible", Fixture("tied_copies.tree"),
                Fixture("tied_copies.strategy")}).code == kExitVerdictFail);
  CHECK(Invoke({"tree", "credible", Fixture("tie_copies.tree"),
                Fixture("tie_copies.strategy")}).code == kExitOk);
}

TEST_CASE("ambiguous isomorphism is an input error") {
  const auto tree = Scratch("ambiguous.tree");
  const auto strategy = Scratch("ambiguous.strategy");
  std::ofstream(tree) << R"({"players": ["P1", "P2"], "root": {"player": 0,
    "moves": {"left": {"player": 1, "moves": {"a": {"payoffs": [1, 1]},
                                               "b": {"payoffs": [1, 1]}}},
              "right": {"player": 1, "moves": {"a": {"payoffs": [1, 1]},
                                                "b": {"payoffs": [1, 1]}}}}}})";
  std::ofstream(strategy) << R"({"": "left", "left": "a", "right": "b"})";
  const Run r = Invoke({"tree", "credible", tree.string(), strategy.string()});
  CHECK(r.code == kExitInputError);
  CHECK(Has(r.err, "error:"));
}

TEST_CASE("input errors exit 2") {
  CHECK(Invoke({"nash", Fixture("missing.game")}).code == kExitInputError);
  const auto bad = Scratch("bad.game");
  std::ofstream(bad) << "{\"players\": [";
  const Run r = Invoke({"nash", bad.string(), "--format", "structured"});
  CHECK(r.code == kExitInputError);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("error"));
  CHECK(Invoke({"nash"}).code == kExitInputError);
  CHECK(Invoke({"frobnicate"}).code == kExitInputError);
  CHECK(Invoke({"auto", "values", Fixture("pd_twice.game"),
                Fixture("grim.auto")}).code == kExitInputError);
}

TEST_CASE("help exits 0") {
  CHECK(Invoke({"--help"}).code == kExitOk);
  CHECK(Invoke({"nash", "--help"}).code == kExitOk);
}

TEST_CASE("structured output is deterministic across runs and kernels") {
  const std::vector<std::vector<std::string>> commands = {
      {"credible", "verify", Fixture("twice_cde.game"), Fixture("pstar.profile")},
      {"spne", "enumerate", Fixture("twice_cde.game")},
      {"nash", Fixture("cde.game")},
      {"auto", "credible", Fixture("pd.game"), Fixture("grim.auto")},
      {"tree", "prop3", Fixture("tied_copies.tree")},
  };
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("structured");
    const Run a = Invoke(args);
    const Run b = Invoke(args);
    args.push_back("--serial");
    const Run c = Invoke(args);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.code == c.code);
  }
}

}  // namespace
}  // namespace credible
