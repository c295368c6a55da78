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

#include "credible/finite_solver.h"

#include <algorithm>

#include "credible/errors.h"
#include "credible/oracles.h"
#include "credible/reference_games.h"
#include "doctest.h"
#include "test_support.h"

namespace credible {
namespace {

using testing::RandomMixedBehavior;
using testing::Uniform;

std::string Dump(const Verdict& v) { return ToJson(v).dump(); }

bool Contains(const EquilibriumSet& set, const PureTable& t) {
  return std::binary_search(set.profiles.begin(), set.profiles.end(), t);
}

PureTable Constant(const HistoryTree& tree, std::uint32_t profile) {
  PureTable t;
  for (int time = 1; time <= tree.Horizon(); ++time) {
    t.levels.emplace_back(tree.LevelSize(time), profile);
  }
  return t;
}

const Witness* Find(const Verdict& v, WitnessKind kind, int player) {
  for (const auto& w : v.witnesses) {
    if (w.kind == kind && w.player == player) return &w;
  }
  return nullptr;
}

// Player 0 and 1 play matching pennies; player 2 is a dummy.
StageGame ThreePlayerPennies() {
  return StageGame::FromFunction(
      {{"H", "T"}, {"H", "T"}, {"X", "Y"}}, [](const PureProfile& a) {
        const int s = a[0] == a[1] ? 1 : -1;
        return RatVector{Rat(s), Rat(-s), Rat(0)};
      });
}

TEST_CASE("verify_spne and verify_credible on the twice-played coordination game") {
  const MultiStageGame game = reference::Repeated(reference::CdeGame(), 2, 1);
  const BehaviorProfile pstar = reference::CooperationWithPunishment(game);
  CHECK(VerifySpne(game, pstar).pass);
  const Verdict v = VerifyCredible(game, pstar);
  CHECK_FALSE(v.pass);
  for (int player = 0; player < 2; ++player) {
    const Witness* w = Find(v, WitnessKind::kCredibilityFailure, player);
    REQUIRE(w);
    CHECK(w->time == 2);
    CHECK(w->location == std::vector<std::string>{"C,C"});
    CHECK(w->other_location == std::vector<std::string>{"C,D"});
    CHECK(w->value == Rat(3));
    CHECK(w->other_value == Rat(1));
  }
  CHECK(Find(v, WitnessKind::kNashFailure, 0) == nullptr);
}

TEST_CASE("the threat profile is credible without being a stage equilibrium") {
  const MultiStageGame game = reference::ThreatGame();
  const BehaviorProfile p = reference::ThreatProfile(game);
  CHECK_FALSE(IsNash(game.StageAt(1), p.At(1, 0)).pass);
  CHECK(VerifySpne(game, p).pass);
  CHECK(VerifyCredible(game, p).pass);
  HistoryTree tree(game);
  const auto pure = AsPureTable(tree, p);
  REQUIRE(pure);
  CHECK(Contains(EnumeratePureCredible(game), *pure));
}

TEST_CASE("verify_spne reports a one-shot deviation with its location") {
  const MultiStageGame game = reference::Repeated(reference::CdeGame(), 2, 1);
  HistoryTree tree(game);
  // (C,C) at every history: E gains 1 at every history, the root first.
  const Verdict v = VerifySpne(game, ToBehavior(tree, Constant(tree, 0)));
  REQUIRE_FALSE(v.pass);
  const Witness& w = v.witnesses.front();
  CHECK(w.kind == WitnessKind::kNashFailure);
  CHECK(w.time == 1);
  CHECK(w.location.empty());
  CHECK(w.action == "E");
  CHECK(w.Gain() == Rat(1));
  for (std::size_t k = 1; k < v.witnesses.size(); ++k) {
    CHECK(v.witnesses[k - 1].time <= v.witnesses[k].time);
  }
}

TEST_CASE("enumeration examples") {
  const MultiStageGame pd = reference::Repeated(reference::PrisonersDilemma(), 2, 1);
  const EquilibriumSet pd_set = EnumeratePureSpne(pd);
  HistoryTree pd_tree(pd);
  REQUIRE(pd_set.profiles.size() == 1);
  CHECK(pd_set.profiles[0] == Constant(pd_tree, 3));
  CHECK(pd_set.profiles == oracle::AllPureSpne(pd));

  const MultiStageGame cde = reference::Repeated(reference::CdeGame(), 2, 1);
  HistoryTree cde_tree(cde);
  const EquilibriumSet cde_set = EnumeratePureSpne(cde);
  CHECK_FALSE(cde_set.truncated);
  const auto pstar =
      AsPureTable(cde_tree, reference::CooperationWithPunishment(cde));
  REQUIRE(pstar);
  CHECK(Contains(cde_set, *pstar));
  CHECK(Contains(cde_set, Constant(cde_tree, 4)));
  CHECK(Contains(cde_set, Constant(cde_tree, 8)));
  const EquilibriumSet cde_credible = EnumeratePureCredible(cde);
  CHECK_FALSE(Contains(cde_credible, *pstar));
  CHECK(Contains(cde_credible, Constant(cde_tree, 4)));
  CHECK(Contains(cde_credible, Constant(cde_tree, 8)));

  const MultiStageGame threat = reference::ThreatGame();
  CHECK(EnumeratePureSpne(threat).profiles == oracle::AllPureSpne(threat));

  const MultiStageGame once = reference::Repeated(reference::CdeGame(), 1, 1);
  const EquilibriumSet lifted = EnumeratePureSpne(once);
  REQUIRE(lifted.profiles.size() == 2);
  CHECK(lifted.profiles[0].levels[0][0] == 4);
  CHECK(lifted.profiles[1].levels[0][0] == 8);
}

TEST_CASE("enumeration caps") {
  const MultiStageGame cde = reference::Repeated(reference::CdeGame(), 2, 1);
  SolverCaps tight;
  tight.objects_per_stage = 2;
  const EquilibriumSet set = EnumeratePureSpne(cde, tight);
  CHECK(set.truncated);
  CHECK(set.profiles.empty());
  CHECK_FALSE(set.cap_info.empty());
  CHECK(EnumeratePureCredible(cde, tight).truncated);

  SolverCaps nodes;
  nodes.nodes = 5;
  CHECK_THROWS_AS(EnumeratePureSpne(cde, nodes), CapExceeded);
  const BehaviorProfile pstar = reference::CooperationWithPunishment(cde);
  CHECK_THROWS_AS(VerifySpne(cde, pstar, nodes), CapExceeded);
  nodes.nodes = 10;
  CHECK(VerifySpne(cde, pstar, nodes).pass);
}

TEST_CASE("history tables need a finite horizon") {
  const MultiStageGame pd =
      reference::RepeatedForever(reference::PrisonersDilemma(), Rat(3, 5));
  CHECK_THROWS_AS(EnumeratePureSpne(pd), UnsupportedHorizon);
  CHECK_THROWS_AS(VerifySpne(pd, BehaviorProfile{}), UnsupportedHorizon);
}

TEST_CASE("construct examples") {
  const MultiStageGame cde = reference::Repeated(reference::CdeGame(), 2, 1);
  const OpenLoopProfile c = ConstructCredible(cde);
  const StageGame& g = cde.StageAt(1);
  CHECK(c.At(1) == MixedProfile::Pure(g, PureProfile{1, 1}));
  CHECK(c.At(2) == MixedProfile::Pure(g, PureProfile{1, 1}));
  HistoryTree tree(cde);
  CHECK(VerifyCredible(cde, ToBehavior(tree, c)).pass);

  const MultiStageGame pd =
      reference::RepeatedForever(reference::PrisonersDilemma(), Rat(3, 5));
  CHECK(FormatOpenLoop(pd, ConstructCredible(pd)) == "always (D,D)");

  const MultiStageGame mp =
      reference::Repeated(reference::MatchingPennies(), 2, Rat(1, 2));
  const OpenLoopProfile m = ConstructCredible(mp);
  const RatVector half{Rat(1, 2), Rat(1, 2)};
  CHECK(m.At(1).dist == std::vector<RatVector>{half, half});
  HistoryTree mp_tree(mp);
  CHECK(VerifyCredible(mp, ToBehavior(mp_tree, m)).pass);
}

TEST_CASE("construct needs a stage equilibrium") {
  const MultiStageGame game = MultiStageGame::Finite(
      {"A", "B", "C"}, Rat(1), {ThreePlayerPennies()});
  CHECK_THROWS_AS(ConstructCredible(game), NoStageNashFound);
  CHECK_THROWS_AS(FirstStageEquilibrium(ThreePlayerPennies()),
                  NoStageNashFound);
}

TEST_CASE("uniqueness examples") {
  const MultiStageGame pd = reference::Repeated(reference::PrisonersDilemma(), 3, Rat(9, 10));
  const UniquenessReport u = AnalyzeUniqueness(pd);
  CHECK(u.status == UniquenessStatus::kUnique);
  CHECK(FormatOpenLoop(pd, u.profile) == "always (D,D)");
  HistoryTree tree(pd);
  const EquilibriumSet set = EnumeratePureSpne(pd);
  REQUIRE(set.profiles.size() == 1);
  CHECK(ToBehavior(tree, set.profiles[0]) == ToBehavior(tree, u.profile));

  const UniquenessReport cde =
      AnalyzeUniqueness(reference::Repeated(reference::CdeGame(), 2, 1));
  CHECK(cde.status == UniquenessStatus::kNotApplicable);
  CHECK(cde.stage_time == 1);
  CHECK(cde.equilibria.size() == 2);

  const UniquenessReport dup =
      AnalyzeUniqueness(reference::Repeated(reference::DuplicateColumnGame(), 1, 1));
  CHECK(dup.status == UniquenessStatus::kUnknown);
  CHECK_FALSE(dup.reason.empty());
}

RandomGameOptions SmallOptions() {
  RandomGameOptions o;
  o.min_players = 2;
  o.max_players = 3;
  o.min_actions = 2;
  o.max_actions = 2;
  o.max_stages = 2;
  o.payoff_hi = 3;
  return o;
}

TEST_CASE("property: one-shot verification matches best responses") {
  Rng rng(testing::kSeed + 10);
  int passes = 0;
  for (int k = 0; k < 150; ++k) {
    const MultiStageGame game = RandomFiniteGame(rng, SmallOptions());
    BehaviorProfile p;
    if (k % 3 == 0) {
      const EquilibriumSet set = EnumeratePureSpne(game);
      if (set.profiles.empty()) continue;
      HistoryTree tree(game);
      p = ToBehavior(tree, set.profiles[Uniform(rng, 0, set.profiles.size() - 1)]);
    } else if (k % 3 == 1) {
      p = RandomPureBehavior(rng, game);
    } else {
      p = RandomMixedBehavior(rng, game);
    }
    const bool pass = VerifySpne(game, p).pass;
    CAPTURE(k);
    CHECK(pass == oracle::IsSpneByBestResponse(game, p));
    passes += pass;
  }
  CHECK(passes > 20);
}

TEST_CASE("property: enumeration matches the brute-force oracle") {
  Rng rng(testing::kSeed + 11);
  RandomGameOptions o = SmallOptions();
  o.max_players = 2;
  for (int k = 0; k < 40; ++k) {
    const MultiStageGame game = RandomFiniteGame(rng, o);
    CAPTURE(k);
    CHECK(EnumeratePureSpne(game).profiles == oracle::AllPureSpne(game));
  }
}

TEST_CASE("property: credibility refines subgame perfection") {
  Rng rng(testing::kSeed + 12);
  for (int k = 0; k < 60; ++k) {
    const MultiStageGame game = RandomFiniteGame(rng, SmallOptions());
    const EquilibriumSet spne = EnumeratePureSpne(game);
    const EquilibriumSet credible = EnumeratePureCredible(game);
    CHECK(std::includes(spne.profiles.begin(), spne.profiles.end(),
                        credible.profiles.begin(), credible.profiles.end()));
    HistoryTree tree(game);
    // Evenly spaced samples: at most 500 tables against the verifier and
    // 25 of those against the slow pairwise oracle.
    const std::size_t stride = spne.profiles.size() / 500 + 1;
    const std::size_t naive_stride = stride * 20;
    for (std::size_t k = 0; k < spne.profiles.size(); k += stride) {
      const PureTable& t = spne.profiles[k];
      const BehaviorProfile p = ToBehavior(tree, t);
      const bool pass = VerifyCredible(game, p).pass;
      CHECK(Contains(credible, t) == pass);
      if (k % naive_stride == 0) {
        CHECK(oracle::CredibilityHoldsNaive(game, p) == pass);
      }
    }
    const BehaviorProfile r = RandomPureBehavior(rng, game);
    if (VerifyCredible(game, r).pass) CHECK(VerifySpne(game, r).pass);
  }
}

TEST_CASE("property: grouped credibility check matches pairwise comparison") {
  Rng rng(testing::kSeed + 13);
  for (int k = 0; k < 150; ++k) {
    RandomGameOptions o = SmallOptions();
    o.max_stages = 3;
    o.max_players = 2;
    const MultiStageGame game = RandomFiniteGame(rng, o);
    HistoryTree tree(game);
    const BehaviorProfile p = k % 2 ? RandomPureBehavior(rng, game)
                                    : RandomMixedBehavior(rng, game);
    const SubgameValues values = ComputeSubgameValues(tree, p);
    CAPTURE(k);
    CHECK(CheckCredibilityCondition(tree, p, values).pass ==
          oracle::CredibilityHoldsNaive(game, p));
  }
}

TEST_CASE("property: constructed profiles are credible") {
  Rng rng(testing::kSeed + 14);
  RandomGameOptions o;
  o.require_pure_nash = true;
  for (int k = 0; k < 60; ++k) {
    const MultiStageGame game = RandomFiniteGame(rng, o);
    HistoryTree tree(game);
    const BehaviorProfile p = ToBehavior(tree, ConstructCredible(game));
    CHECK(VerifySpne(game, p).pass);
    CHECK(VerifyCredible(game, p).pass);
  }
}

TEST_CASE("property: a unique stage sequence is the only subgame-perfect table") {
  Rng rng(testing::kSeed + 15);
  RandomGameOptions o;
  o.dominant = true;
  for (int k = 0; k < 40; ++k) {
    const MultiStageGame game = RandomFiniteGame(rng, o);
    const UniquenessReport u = AnalyzeUniqueness(game);
    REQUIRE(u.status == UniquenessStatus::kUnique);
    HistoryTree tree(game);
    const EquilibriumSet set = EnumeratePureSpne(game);
    REQUIRE(set.profiles.size() == 1);
    CHECK(ToBehavior(tree, set.profiles[0]) == ToBehavior(tree, u.profile));
    CHECK(EnumeratePureCredible(game).profiles == set.profiles);
  }
}

TEST_CASE("kernels: serial and parallel solvers agree") {
  Rng rng(testing::kSeed + 16);
  RandomGameOptions o = SmallOptions();
  o.max_actions = 3;
  for (int k = 0; k < 30; ++k) {
    const MultiStageGame game = RandomFiniteGame(rng, o);
    const BehaviorProfile p = k % 2 ? RandomPureBehavior(rng, game)
                                    : RandomMixedBehavior(rng, game);
    CHECK(Dump(VerifySpne(game, p, {}, Exec::kSerial)) ==
          Dump(VerifySpne(game, p, {}, Exec::kParallel)));
    CHECK(Dump(VerifyCredible(game, p, {}, Exec::kSerial)) ==
          Dump(VerifyCredible(game, p, {}, Exec::kParallel)));
    const EquilibriumSet a = EnumeratePureSpne(game, {}, Exec::kSerial);
    const EquilibriumSet b = EnumeratePureSpne(game, {}, Exec::kParallel);
    CHECK(a.profiles == b.profiles);
    CHECK(a.truncated == b.truncated);
  }
}

}  // namespace
}  // namespace credible
