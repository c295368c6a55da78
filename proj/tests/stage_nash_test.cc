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

#include "credible/stage_nash.h"

#include <algorithm>

#include "credible/errors.h"
#include "credible/oracles.h"
#include "credible/reference_games.h"
#include "doctest.h"
#include "test_support.h"

namespace credible {
namespace {

using testing::RandomDistribution;
using testing::RandomMixed;
using testing::Uniform;

MixedProfile Mix(RatVector row, RatVector col) {
  return MixedProfile{{std::move(row), std::move(col)}};
}

const Witness* WitnessFor(const Verdict& v, int player) {
  for (const auto& w : v.witnesses) {
    if (w.player == player) return &w;
  }
  return nullptr;
}

TEST_CASE("is_nash examples on the 3x3 coordination game") {
  const StageGame g = reference::CdeGame();
  const Verdict cc = IsNash(g, MixedProfile::Pure(g, PureProfile{0, 0}));
  CHECK_FALSE(cc.pass);
  const Witness* row = WitnessFor(cc, 0);
  REQUIRE(row);
  CHECK(row->action == "E");
  CHECK(row->value == Rat(4));
  CHECK(row->other_value == Rat(5));
  CHECK(row->Gain() == Rat(1));
  CHECK(IsNash(g, MixedProfile::Pure(g, PureProfile{1, 1})).pass);
  const RatVector mix{Rat(0), Rat(3, 4), Rat(1, 4)};
  CHECK(IsNash(g, Mix(mix, mix)).pass);
}

TEST_CASE("is_nash names the column deviation from (B,B) in the threat stage") {
  const StageGame g = reference::ThreatStageOne();
  const Verdict v = IsNash(g, MixedProfile::Pure(g, PureProfile{1, 1}));
  REQUIRE_FALSE(v.pass);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].player == 1);
  CHECK(v.witnesses[0].value == Rat(2));
  CHECK(v.witnesses[0].other_value == Rat(3));
}

TEST_CASE("pure equilibria examples") {
  CHECK(EnumeratePureNash(reference::CdeGame()) ==
        std::vector<PureProfile>{{1, 1}, {2, 2}});
  CHECK(EnumeratePureNash(reference::PrisonersDilemma()) ==
        std::vector<PureProfile>{{1, 1}});
  CHECK(EnumeratePureNash(reference::ThreatStageTwo()).size() == 4);
  CHECK(EnumeratePureNash(reference::MatchingPennies()).empty());
}

TEST_CASE("pure enumeration respects the profile cap") {
  CHECK_THROWS_AS(EnumeratePureNash(reference::CdeGame(), 8), CapExceeded);
  CHECK_NOTHROW(EnumeratePureNash(reference::CdeGame(), 9));
}

TEST_CASE("census of the 3x3 coordination game") {
  const StageGame g = reference::CdeGame();
  const NashSet set = NashCensus(g);
  CHECK(set.pure == std::vector<PureProfile>{{1, 1}, {2, 2}});
  REQUIRE(set.mixed.size() == 1);
  const RatVector mix{Rat(0), Rat(3, 4), Rat(1, 4)};
  CHECK(set.mixed[0] == Mix(mix, mix));
  CHECK(ExpectedStagePayoff(g, set.mixed[0]) == RatVector{Rat(3, 4), Rat(3, 4)});
}

TEST_CASE("census of the prisoners' dilemma and matching pennies") {
  const NashSet pd = NashCensus(reference::PrisonersDilemma());
  CHECK(pd.pure == std::vector<PureProfile>{{1, 1}});
  CHECK(pd.mixed.empty());
  CHECK_FALSE(pd.degenerate);
  const NashSet mp = NashCensus(reference::MatchingPennies());
  CHECK(mp.pure.empty());
  REQUIRE(mp.mixed.size() == 1);
  const RatVector half{Rat(1, 2), Rat(1, 2)};
  CHECK(mp.mixed[0] == Mix(half, half));
}

TEST_CASE("mixed enumeration needs two players") {
  Rng rng(testing::kSeed);
  CHECK_THROWS_AS(EnumerateMixedNash2p(RandomStageGame(rng, {2, 2, 2}, 0, 3)),
                  InputError);
}

TEST_CASE("uniqueness examples") {
  const UniquenessResult pd = HasUniqueNash(reference::PrisonersDilemma());
  CHECK(pd.status == Uniqueness::kUnique);
  REQUIRE(pd.equilibria.size() == 1);
  CHECK(pd.equilibria[0].AsPure() == PureProfile{1, 1});

  const UniquenessResult cde = HasUniqueNash(reference::CdeGame());
  CHECK(cde.status == Uniqueness::kMultiple);
  REQUIRE(cde.equilibria.size() == 2);
  CHECK(cde.equilibria[0].AsPure() == PureProfile{1, 1});
  CHECK(cde.equilibria[1].AsPure() == PureProfile{2, 2});

  const StageGame dup = reference::DuplicateColumnGame();
  CHECK(NashCensus(dup).degenerate);
  CHECK(NashCensus(dup).size() == 1);
  CHECK(HasUniqueNash(dup).status == Uniqueness::kUnknown);

  const UniquenessResult mp = HasUniqueNash(reference::MatchingPennies());
  CHECK(mp.status == Uniqueness::kUnique);
}

TEST_CASE("iterated strict dominance") {
  CHECK(IteratedStrictDominance(reference::PrisonersDilemma()) ==
        std::vector<std::vector<int>>{{1}, {1}});
  CHECK(IteratedStrictDominance(reference::MatchingPennies()) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 1}});
}

TEST_CASE("property: dominant-action games are unique for any player count") {
  Rng rng(testing::kSeed + 1);
  for (int k = 0; k < 100; ++k) {
    std::vector<int> counts;
    const int players = Uniform(rng, 2, 4);
    for (int p = 0; p < players; ++p) counts.push_back(Uniform(rng, 2, 3));
    const StageGame g = RandomDominantStageGame(rng, counts);
    const UniquenessResult u = HasUniqueNash(g);
    CHECK(u.status == Uniqueness::kUnique);
    CHECK(oracle::PureNash(g).size() == 1);
  }
}

TEST_CASE("property: soundness of both enumerators") {
  Rng rng(testing::kSeed + 2);
  for (int k = 0; k < 200; ++k) {
    const StageGame g =
        RandomStageGame(rng, {Uniform(rng, 1, 4), Uniform(rng, 1, 4)}, -3, 3);
    const NashSet set = NashCensus(g);
    for (const auto& m : set.All(g)) {
      CHECK(IsNash(g, m).pass);
      CHECK(oracle::IsNash(g, m));
    }
    auto sorted = set.mixed;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST_CASE("property: pure completeness up to four players") {
  Rng rng(testing::kSeed + 3);
  for (int k = 0; k < 200; ++k) {
    std::vector<int> counts;
    const int players = Uniform(rng, 1, 4);
    for (int p = 0; p < players; ++p) counts.push_back(Uniform(rng, 1, 4));
    const StageGame g = RandomStageGame(rng, counts, 0, 3);
    CHECK(EnumeratePureNash(g) == oracle::PureNash(g));
  }
}

TEST_CASE("property: generic nondegenerate games have an odd count") {
  Rng rng(testing::kSeed + 4);
  int nondegenerate = 0;
  for (int k = 0; k < 300; ++k) {
    const StageGame g =
        RandomGenericStageGame(rng, Uniform(rng, 2, 4), Uniform(rng, 2, 4));
    const NashSet set = NashCensus(g);
    if (set.degenerate) continue;
    ++nondegenerate;
    CAPTURE(k);
    CHECK(set.size() % 2 == 1);
  }
  CHECK(nondegenerate > 150);
}

TEST_CASE("property: 2x2 census matches the closed form") {
  Rng rng(testing::kSeed + 5);
  for (int k = 0; k < 300; ++k) {
    const StageGame g = RandomGenericStageGame(rng, 2, 2);
    const NashSet set = NashCensus(g);
    const auto closed = oracle::FullyMixed2x2(g);
    const bool found =
        closed && std::find(set.mixed.begin(), set.mixed.end(), *closed) !=
                      set.mixed.end();
    CHECK(found == closed.has_value());
    CHECK(set.mixed.size() == (closed ? 1u : 0u));
  }
}

TEST_CASE("property: pure deviations decide mixed deviations") {
  Rng rng(testing::kSeed + 6);
  for (int k = 0; k < 300; ++k) {
    const StageGame g = RandomStageGame(rng, {2, 3}, -2, 2);
    // Mix random profiles with equilibria so both outcomes occur.
    const NashSet set = NashCensus(g);
    const auto all = set.All(g);
    const MixedProfile m = (k % 2 == 0 && !all.empty())
                               ? all[Uniform(rng, 0, all.size() - 1)]
                               : RandomMixed(rng, g);
    const bool pass = IsNash(g, m).pass;
    CHECK(pass == oracle::IsNash(g, m));
    const RatVector base = ExpectedStagePayoff(g, m);
    bool mixed_improves = false;
    for (int p = 0; p < 2; ++p) {
      for (int s = 0; s < 20; ++s) {
        MixedProfile dev = m;
        dev.dist[p] = RandomDistribution(rng, g.NumActions(p));
        if (ExpectedStagePayoff(g, dev)[p] > base[p]) mixed_improves = true;
      }
    }
    if (pass) CHECK_FALSE(mixed_improves);
  }
}

TEST_CASE("kernels: serial and parallel enumeration agree") {
  Rng rng(testing::kSeed + 7);
  for (int k = 0; k < 40; ++k) {
    const StageGame g = RandomStageGame(rng, {4, 4, 3}, 0, 2);
    CHECK(EnumeratePureNash(g, kDefaultProfileCap, Exec::kSerial) ==
          EnumeratePureNash(g, kDefaultProfileCap, Exec::kParallel));
    const StageGame h = RandomStageGame(rng, {4, 4}, 0, 4);
    const NashSet a = EnumerateMixedNash2p(h, kDefaultProfileCap, Exec::kSerial);
    const NashSet b = EnumerateMixedNash2p(h, kDefaultProfileCap, Exec::kParallel);
    CHECK(a.pure == b.pure);
    CHECK(a.mixed == b.mixed);
    CHECK(a.degenerate == b.degenerate);
  }
}

}  // namespace
}  // namespace credible
