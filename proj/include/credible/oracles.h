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

#ifndef CREDIBLE_ORACLES_H_
#define CREDIBLE_ORACLES_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "credible/automaton.h"
#include "credible/behavior.h"
#include "credible/game.h"
#include "credible/perfect_info.h"

// Slow reference implementations used to cross-check the solvers. Each one
// follows the definition directly and shares no code path with the solver
// it checks beyond the basic game types.
namespace credible::oracle {

// Sum over every pure profile of its probability times its payoff.
RatVector ExpectedPayoff(const StageGame& g, const MixedProfile& m);

// Profiles where no single action change raises the mover's payoff.
std::vector<PureProfile> PureNash(const StageGame& g);

// No player has a pure action with a strictly higher expected payoff.
bool IsNash(const StageGame& g, const MixedProfile& m);

// Fully mixed equilibrium of a 2x2 game from the closed-form indifference
// conditions, if one exists.
std::optional<MixedProfile> FullyMixed2x2(const StageGame& g);

// Index of a history in the level of its time.
std::size_t HistoryIndex(const MultiStageGame& game, const History& h);

// Discounted payoff from `root` by explicit enumeration of every realized
// path of the subgame.
RatVector PathPayoff(const MultiStageGame& game, const BehaviorProfile& p,
                     const History& root);

// Best payoff a player can secure from `h` against the profile, over all
// (not only one-shot) deviations, by dynamic programming.
Rat BestResponseValue(const MultiStageGame& game, const BehaviorProfile& p,
                      const History& h, int player);

// Subgame perfection via best-response values: at every history every
// player's value equals their best-response value.
bool IsSpneByBestResponse(const MultiStageGame& game,
                          const BehaviorProfile& p);

// Subgame perfection by enumerating every pure contingent plan of every
// player in every subgame. Throws CapExceeded beyond `plan_cap` plans.
bool IsSpneByPlans(const MultiStageGame& game, const BehaviorProfile& p,
                   std::size_t plan_cap = 1 << 16);

// Every pure behavior table that passes IsSpneByBestResponse, sorted.
// Throws CapExceeded beyond `table_cap` tables.
std::vector<PureTable> AllPureSpne(const MultiStageGame& game,
                                   std::size_t table_cap = 1 << 20);

// The credibility condition by comparing every pair of same-time histories
// and walking both sub-tables in full.
bool CredibilityHoldsNaive(const MultiStageGame& game,
                           const BehaviorProfile& p);

// Subgame perfection of a tree strategy by trying every pure strategy of
// every player in every subtree.
bool IsTreeSpneExhaustive(const GameTree& tree, const TreeStrategy& s);

// Partial discounted sum of the first `steps` stage payoffs of an automaton
// profile started at joint state `start`, by forward propagation of the
// state distribution.
RatVector TruncatedAutomatonValue(const StageGame& g, const Rat& delta,
                                  const AutomatonProfile& profile,
                                  std::size_t start, int steps);

}  // namespace credible::oracle

#endif  // CREDIBLE_ORACLES_H_
