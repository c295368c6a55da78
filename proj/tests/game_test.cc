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

#include "credible/game.h"

#include "credible/behavior.h"
#include "credible/errors.h"
#include "credible/oracles.h"
#include "credible/reference_games.h"
#include "doctest.h"
#include "test_support.h"

namespace credible {
namespace {

using testing::RandomHistory;
using testing::RandomMixed;
using testing::RandomMixedBehavior;
using testing::Uniform;

MixedProfile Mix(RatVector row, RatVector col) {
  return MixedProfile{{std::move(row), std::move(col)}};
}

TEST_CASE("profile indexing is lexicographic with the last player fastest") {
  const StageGame g = reference::CdeGame();
  CHECK(g.NumProfiles() == 9);
  CHECK(g.ProfileIndex({1, 2}) == 5);
  CHECK(g.ProfileAt(5) == PureProfile{1, 2});
  CHECK(g.WithAction(5, 0, 2) == g.ProfileIndex({2, 2}));
  CHECK(g.ActionOf(5, 1) == 2);
  CHECK(g.ProfileLabel(5) == "D,E");
  CHECK(g.ParseProfileLabel("E,C") == PureProfile{2, 0});
  CHECK_FALSE(g.ParseProfileLabel("E,X"));
  CHECK_FALSE(g.ParseProfileLabel("E"));
}

TEST_CASE("validation accepts the two-stage threat game") {
  CHECK(ValidateGame(reference::ThreatGame()).ok());
}

TEST_CASE("validation rejects an undiscounted infinite horizon") {
  const auto report =
      ValidateGame(reference::RepeatedForever(reference::PrisonersDilemma(), Rat(1)));
  REQUIRE_FALSE(report.ok());
  CHECK(report.Join().find("infinite horizon requires delta < 1") !=
        std::string::npos);
}

TEST_CASE("validation reports a missing payoff entry") {
  std::vector<RatVector> payoffs = {{Rat(0), Rat(0)}, {Rat(0), Rat(0)},
                                    {Rat(1), Rat(3)}, {}};
  const StageGame g({{"A", "B"}, {"A", "B"}}, payoffs);
  const auto game = MultiStageGame::Finite({"Row", "Column"}, Rat(1), {g});
  const auto report = ValidateGame(game);
  REQUIRE_FALSE(report.ok());
  CHECK(report.Join().find("payoff map not total") != std::string::npos);
  CHECK(report.Join().find("B,B") != std::string::npos);
  CHECK_THROWS_AS(RequireValid(game), InputError);
}

TEST_CASE("validation reports delta range and player mismatch") {
  const StageGame pd = reference::PrisonersDilemma();
  CHECK_FALSE(ValidateGame(MultiStageGame::Finite({"a", "b"}, Rat(3, 2), {pd})).ok());
  CHECK_FALSE(ValidateGame(MultiStageGame::Finite({"a", "b"}, Rat(-1), {pd})).ok());
  CHECK_FALSE(ValidateGame(MultiStageGame::Finite({"a", "b", "c"}, Rat(1), {pd})).ok());
  CHECK_FALSE(ValidateGame(MultiStageGame::Finite({"a", "b"}, Rat(1), {})).ok());
  CHECK(ValidateGame(MultiStageGame::Finite({"a", "b"}, Rat(0), {pd})).ok());
}

TEST_CASE("expected stage payoff examples") {
  const StageGame g = reference::CdeGame();
  CHECK(ExpectedStagePayoff(g, MixedProfile::Pure(g, PureProfile{2, 2})) ==
        RatVector{Rat(3), Rat(3)});
  const RatVector mix{Rat(0), Rat(3, 4), Rat(1, 4)};
  CHECK(ExpectedStagePayoff(g, Mix(mix, mix)) ==
        RatVector{Rat(3, 4), Rat(3, 4)});
}

TEST_CASE("a pure mixed profile yields its payoff row") {
  Rng rng(testing::kSeed);
  for (int k = 0; k < 50; ++k) {
    const StageGame g = RandomStageGame(rng, {3, 2, 2}, -5, 5);
    const std::size_t idx = Uniform(rng, 0, g.NumProfiles() - 1);
    CHECK(ExpectedStagePayoff(g, MixedProfile::Pure(g, idx)) == g.Payoff(idx));
  }
}

TEST_CASE("dimension mismatch is rejected") {
  const StageGame g = reference::PrisonersDilemma();
  CHECK_THROWS_AS(ExpectedStagePayoff(g, Mix({Rat(1)}, {Rat(1), Rat(0)})),
                  InputError);
  CHECK_THROWS_AS(CheckMixedProfile(g, Mix({Rat(1, 2), Rat(1, 3)},
                                           {Rat(1), Rat(0)})),
                  InputError);
  CHECK_THROWS_AS(CheckMixedProfile(g, Mix({Rat(3, 2), Rat(-1, 2)},
                                           {Rat(1), Rat(0)})),
                  InputError);
}

TEST_CASE("property: tensor contraction equals brute-force expectation") {
  Rng rng(testing::kSeed + 1);
  for (int k = 0; k < 300; ++k) {
    std::vector<int> counts;
    const int players = Uniform(rng, 1, 4);
    for (int p = 0; p < players; ++p) counts.push_back(Uniform(rng, 1, 3));
    const StageGame g = RandomStageGame(rng, counts, -6, 6);
    const MixedProfile m = RandomMixed(rng, g);
    CHECK(ExpectedStagePayoff(g, m) == oracle::ExpectedPayoff(g, m));
    for (int p = 0; p < players; ++p) {
      for (int a = 0; a < g.NumActions(p); ++a) {
        MixedProfile dev = m;
        dev.dist[p].assign(g.NumActions(p), Rat(0));
        dev.dist[p][a] = Rat(1);
        CHECK(DeviationPayoff(g, m, p, a) == oracle::ExpectedPayoff(g, dev)[p]);
      }
    }
  }
}

TEST_CASE("discounted payoff of the threat profile") {
  const MultiStageGame game = reference::ThreatGame();
  const BehaviorProfile p = reference::ThreatProfile(game);
  CHECK(DiscountedPayoff(game, p, History{}) == RatVector{Rat(5), Rat(5)});
  CHECK(oracle::PathPayoff(game, p, History{}) == RatVector{Rat(5), Rat(5)});
  const History ba{{{1, 0}}};
  CHECK(DiscountedPayoff(game, p, ba) == RatVector{Rat(1), Rat(1)});
  CHECK_THROWS_AS(DiscountedPayoff(game, p, History{{{1, 0}, {0, 0}}}),
                  InputError);
}

TEST_CASE("single-stage discounted payoff is the stage expectation") {
  Rng rng(testing::kSeed + 2);
  for (int k = 0; k < 50; ++k) {
    const StageGame g = RandomStageGame(rng, {2, 3}, -3, 3);
    const auto game = MultiStageGame::Finite({"a", "b"}, Rat(1, 2), {g});
    const BehaviorProfile p = RandomMixedBehavior(rng, game);
    CHECK(DiscountedPayoff(game, p, History{}) ==
          ExpectedStagePayoff(g, p.At(1, 0)));
  }
}

TEST_CASE("property: delta 1 sums the per-stage expectations") {
  Rng rng(testing::kSeed + 3);
  for (int k = 0; k < 60; ++k) {
    RandomGameOptions opt;
    opt.max_actions = 2;
    MultiStageGame game = RandomFiniteGame(rng, opt);
    game.delta = Rat(1);
    HistoryTree tree(game);
    // History-independent play: the sum splits by stage.
    OpenLoopProfile open;
    RatVector sum(game.NumPlayers(), Rat(0));
    for (int t = 1; t <= game.Horizon(); ++t) {
      open.prefix.push_back(RandomMixed(rng, game.StageAt(t)));
      const RatVector u = ExpectedStagePayoff(game.StageAt(t), open.prefix.back());
      for (int i = 0; i < game.NumPlayers(); ++i) sum[i] += u[i];
    }
    CHECK(DiscountedPayoff(game, ToBehavior(tree, open), History{}) == sum);
    // History-dependent play: compare with explicit path enumeration.
    const BehaviorProfile p = RandomMixedBehavior(rng, game);
    const History root = RandomHistory(rng, game);
    CHECK(DiscountedPayoff(game, p, root) == oracle::PathPayoff(game, p, root));
  }
}

TEST_CASE("property: discounted payoff matches path enumeration") {
  Rng rng(testing::kSeed + 4);
  for (int k = 0; k < 60; ++k) {
    RandomGameOptions opt;
    opt.max_actions = 2;
    const MultiStageGame game = RandomFiniteGame(rng, opt);
    const BehaviorProfile p = RandomMixedBehavior(rng, game);
    HistoryTree tree(game);
    const SubgameValues values = ComputeSubgameValues(tree, p);
    for (int t = 1; t <= tree.Horizon(); ++t) {
      for (std::size_t i = 0; i < tree.LevelSize(t); ++i) {
        const History h = tree.HistoryAt(t, i);
        CHECK(values.At(t, i) == oracle::PathPayoff(game, p, h));
      }
    }
  }
}

TEST_CASE("subgame equivalence examples") {
  const MultiStageGame game =
      reference::Repeated(reference::CdeGame(), 2, Rat(1));
  const History cc{{{0, 0}}}, cd{{{0, 1}}}, empty{};
  CHECK(SubgamesEquivalent(game, cc, cd));
  CHECK_FALSE(SubgamesEquivalent(game, empty, cc));
  CHECK(SubgamesEquivalent(game, cc, cc));
  CHECK_THROWS_AS(SubgamesEquivalent(game, History{{{0, 0}, {0, 0}}}, cc),
                  InputError);
}

TEST_CASE("property: subgame equivalence is an equivalence relation") {
  Rng rng(testing::kSeed + 5);
  const MultiStageGame game =
      reference::Repeated(reference::CdeGame(), 3, Rat(1, 2));
  for (int k = 0; k < 300; ++k) {
    const History a = RandomHistory(rng, game), b = RandomHistory(rng, game),
                  c = RandomHistory(rng, game);
    CHECK(SubgamesEquivalent(game, a, a));
    CHECK(SubgamesEquivalent(game, a, b) == SubgamesEquivalent(game, b, a));
    if (SubgamesEquivalent(game, a, b) && SubgamesEquivalent(game, b, c)) {
      CHECK(SubgamesEquivalent(game, a, c));
    }
  }
}

TEST_CASE("history tree indexing round-trips") {
  Rng rng(testing::kSeed + 6);
  for (int k = 0; k < 30; ++k) {
    const MultiStageGame game = RandomFiniteGame(rng, RandomGameOptions{});
    HistoryTree tree(game);
    std::size_t nodes = 0;
    for (int t = 1; t <= tree.Horizon(); ++t) {
      nodes += tree.LevelSize(t);
      for (std::size_t i = 0; i < tree.LevelSize(t); ++i) {
        const History h = tree.HistoryAt(t, i);
        CHECK(h.Time() == t);
        CHECK(tree.IndexOf(h) == i);
        CHECK(oracle::HistoryIndex(game, h) == i);
      }
    }
    CHECK(tree.NumNodes() == nodes);
  }
}

TEST_CASE("history tree enforces the node cap and finiteness") {
  const MultiStageGame game =
      reference::Repeated(reference::CdeGame(), 4, Rat(1));
  CHECK_THROWS_AS(HistoryTree(game, 100), CapExceeded);
  CHECK_NOTHROW(HistoryTree(game, 1000));
  CHECK_THROWS_AS(
      HistoryTree(reference::RepeatedForever(reference::PrisonersDilemma(), Rat(1, 2))),
      UnsupportedHorizon);
}

TEST_CASE("behavior profiles must be total and valid") {
  const MultiStageGame game = reference::ThreatGame();
  HistoryTree tree(game);
  BehaviorProfile p = reference::ThreatProfile(game);
  CHECK_NOTHROW(CheckBehaviorProfile(tree, p));
  p.levels[1].pop_back();
  CHECK_THROWS_AS(CheckBehaviorProfile(tree, p), InputError);
}

TEST_CASE("infinite schedules cycle after the prefix") {
  const StageGame a = reference::PrisonersDilemma();
  const StageGame b = reference::MatchingPennies();
  const auto game = MultiStageGame::Infinite({"x", "y"}, Rat(1, 2), {a}, {b, a});
  CHECK(game.StageAt(1) == a);
  CHECK(game.StageAt(2) == b);
  CHECK(game.StageAt(3) == a);
  CHECK(game.StageAt(4) == b);
  const auto scheduled = game.ScheduledStages();
  REQUIRE(scheduled.size() == 3);
  CHECK(scheduled[2].first == 3);
}

TEST_CASE("kernels: serial and parallel subgame values agree") {
  Rng rng(testing::kSeed + 7);
  for (int k = 0; k < 20; ++k) {
    const MultiStageGame game = RandomFiniteGame(rng, RandomGameOptions{});
    const BehaviorProfile p = RandomMixedBehavior(rng, game);
    HistoryTree tree(game);
    CHECK(ComputeSubgameValues(tree, p, Exec::kSerial).levels ==
          ComputeSubgameValues(tree, p, Exec::kParallel).levels);
  }
}

}  // namespace
}  // namespace credible
