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

#include "credible/io.h"

#include <filesystem>
#include <fstream>
#include <functional>

#include "credible/errors.h"
#include "credible/reference_games.h"
#include "doctest.h"
#include "test_support.h"

namespace credible {
namespace {

using testing::Fixture;
using testing::RandomMixed;
using testing::RandomMixedBehavior;
using testing::Uniform;

std::string InputMessage(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("fixture games load and match the reference builders") {
  CHECK(ParseGame(ReadJsonFile(Fixture("twice_cde.game"))) ==
        reference::Repeated(reference::CdeGame(), 2, Rat(1)));
  CHECK(ParseGame(ReadJsonFile(Fixture("threat.game"))) == reference::ThreatGame());
  CHECK(ParseGame(ReadJsonFile(Fixture("pd.game"))) ==
        reference::RepeatedForever(reference::PrisonersDilemma(), Rat(3, 5)));
}

TEST_CASE("fixture profiles load and match the reference builders") {
  const MultiStageGame twice = reference::Repeated(reference::CdeGame(), 2, Rat(1));
  CHECK(ParseProfile(twice, ReadJsonFile(Fixture("pstar.profile"))) ==
        reference::CooperationWithPunishment(twice));
  const MultiStageGame threat = reference::ThreatGame();
  CHECK(ParseProfile(threat, ReadJsonFile(Fixture("threat.profile"))) ==
        reference::ThreatProfile(threat));
}

TEST_CASE("fixture automata and trees load") {
  const StageGame pd = reference::PrisonersDilemma();
  const AutomatonProfile grim = ParseAutomata(pd, ReadJsonFile(Fixture("grim.auto")));
  CHECK(grim[0].states == PresetAutomaton("grim-trigger", pd, 0).states);
  CHECK(grim[0] == PresetAutomaton("grim-trigger", pd, 0));
  CHECK(grim[1] == PresetAutomaton("grim-trigger", pd, 1));
  const auto parsed = ParseTree(ReadJsonFile(Fixture("take_or_pass.tree")));
  CHECK(CanonicalForms(parsed.tree)[parsed.tree.Root()] ==
        CanonicalForms(reference::TakeOrPassTree())[reference::TakeOrPassTree().Root()]);
  CHECK(parsed.player_names == std::vector<std::string>{"P1", "P2"});
}

TEST_CASE("round trip: stage games and multi-stage games") {
  Rng rng(testing::kSeed);
  for (int k = 0; k < 40; ++k) {
    const MultiStageGame game = RandomFiniteGame(rng, RandomGameOptions{});
    CHECK(ParseGame(GameToJson(game)) == game);
    for (const auto& g : game.stages) {
      CHECK(ParseStageGame(StageGameToJson(g), "stage") == g);
    }
  }
  const auto inf = MultiStageGame::Infinite(
      {"a", "b"}, Rat(2, 3), {reference::MatchingPennies()},
      {reference::PrisonersDilemma(), reference::CdeGame()});
  CHECK(ParseGame(GameToJson(inf)) == inf);
}

TEST_CASE("round trip: mixed and behavior profiles") {
  Rng rng(testing::kSeed + 1);
  for (int k = 0; k < 40; ++k) {
    RandomGameOptions opt;
    opt.max_actions = 2;
    const MultiStageGame game = RandomFiniteGame(rng, opt);
    const BehaviorProfile p = RandomMixedBehavior(rng, game);
    CHECK(ParseProfile(game, ProfileToJson(game, p)) == p);
    const StageGame& g = game.StageAt(1);
    const MixedProfile m = RandomMixed(rng, g);
    CHECK(ParseMixed(g, MixedToJson(g, m), "m") == m);
  }
}

TEST_CASE("round trip: automata, trees and tree strategies") {
  Rng rng(testing::kSeed + 2);
  const StageGame pd = reference::PrisonersDilemma();
  for (int k = 0; k < 30; ++k) {
    const AutomatonProfile a = RandomAutomata(rng, pd, 4);
    CHECK(ParseAutomata(pd, AutomataToJson(pd, a)) == a);
    const GameTree t = RandomTree(rng, Uniform(rng, 1, 3), 8, 3);
    const ParsedTree back = ParseTree(TreeToJson(t));
    CHECK(TreeToJson(back.tree) == TreeToJson(t));
    const auto bi = BackwardInductionAll(t);
    const TreeStrategy s = bi.strategies.front();
    const TreeStrategy s2 = ParseTreeStrategy(back.tree, TreeStrategyToJson(t, s));
    CHECK(TreeStrategyToJson(back.tree, s2) == TreeStrategyToJson(t, s));
  }
}

TEST_CASE("malformed documents produce located diagnostics") {
  const auto dir = std::filesystem::temp_directory_path() / "credible-io-test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.game";
  {
    std::ofstream f(bad);
    f << "{ \"players\": [\"a\", \"b\"], ";
  }
  const std::string msg = InputMessage([&] { ReadJsonFile(bad); });
  CHECK(msg.find("bad.game") != std::string::npos);
  CHECK_THROWS_AS(ReadJsonFile(dir / "missing.game"), InputError);
  std::filesystem::remove_all(dir);

  Json game = GameToJson(reference::ThreatGame());
  game["horizon"]["stages"][0]["payoffs"][1][1] = {"1", "x"};
  CHECK(InputMessage([&] { ParseGame(game); }).find("x") != std::string::npos);

  game = GameToJson(reference::ThreatGame());
  game["delta"] = "1/0";
  CHECK_THROWS_AS(ParseGame(game), InputError);

  game = GameToJson(reference::ThreatGame());
  game.erase("horizon");
  CHECK(InputMessage([&] { ParseGame(game); }).find("horizon") != std::string::npos);

  game = GameToJson(reference::ThreatGame());
  game["horizon"]["stages"][0]["payoffs"][1][1] = nullptr;
  const MultiStageGame incomplete = ParseGame(game);
  CHECK(ValidateGame(incomplete).Join().find("payoff map not total") !=
        std::string::npos);
}

TEST_CASE("profile files must be total, unique and consistent") {
  const MultiStageGame game = reference::ThreatGame();
  Json p = ProfileToJson(game, reference::ThreatProfile(game));
  Json missing = p;
  missing.erase(missing.size() - 1);
  CHECK(InputMessage([&] { ParseProfile(game, missing); }).find("total") !=
        std::string::npos);
  Json dup = p;
  dup.push_back(p[1]);
  CHECK(InputMessage([&] { ParseProfile(game, dup); }).find("duplicate") !=
        std::string::npos);
  Json wrong_time = p;
  wrong_time[1]["time"] = 3;
  CHECK_THROWS_AS(ParseProfile(game, wrong_time), InputError);
  Json bad_label = p;
  bad_label[0]["play"][0] = "Z";
  CHECK(InputMessage([&] { ParseProfile(game, bad_label); }).find("Z") !=
        std::string::npos);
  Json bad_weights = p;
  bad_weights[0]["play"][0] = {{"A", "1/2"}, {"B", "1/3"}};
  CHECK_THROWS_AS(ParseProfile(game, bad_weights), InputError);
}

TEST_CASE("automaton files: presets, defaults and errors") {
  const StageGame pd = reference::PrisonersDilemma();
  const Json tft = ReadJsonFile(Fixture("tit_for_tat.auto"));
  CHECK(ParseAutomata(pd, tft)[1] == PresetAutomaton("tit-for-tat", pd, 1));
  CHECK_THROWS_AS(ParseAutomata(pd, Json::array({"grim-trigger"})), InputError);
  CHECK_THROWS_AS(ParseAutomata(pd, Json::array({"nope", "nope"})), InputError);
  Json partial = Json::parse(R"([{"states": ["s"], "initial": "s",
      "output": {"s": "C"}, "transition": {"s": {"C,C": "s"}}}, "always-defect"])");
  CHECK_THROWS_AS(ParseAutomata(pd, partial), InputError);
  partial[0]["transition"]["s"]["*"] = "s";
  CHECK_NOTHROW(ParseAutomata(pd, partial));
  partial[0]["transition"]["s"]["C,C"] = "t";
  CHECK_THROWS_AS(ParseAutomata(pd, partial), InputError);
}

TEST_CASE("tree files: structure errors") {
  CHECK_THROWS_AS(ParseTree(Json::parse(R"({"player": 0, "moves": {}})")),
                  InputError);
  CHECK_THROWS_AS(
      ParseTree(Json::parse(R"({"players": ["a", "b"], "root": {"player": "c",
          "moves": {"x": {"payoffs": ["1", "2"]}}}})")),
      InputError);
  CHECK_THROWS_AS(
      ParseTree(Json::parse(R"({"players": ["a", "b"], "root": {"player": 0,
          "moves": {"x": {"payoffs": ["1"]}}}})")),
      InputError);
  const auto t = ParseTree(ReadJsonFile(Fixture("take_or_pass.tree")));
  CHECK_THROWS_AS(ParseTreeStrategy(t.tree, Json::parse(R"({"": "Take"})")),
                  InputError);
  CHECK_THROWS_AS(
      ParseTreeStrategy(t.tree, Json::parse(R"({"": "Take", "Pass": "z"})")),
      InputError);
}

}  // namespace
}  // namespace credible
