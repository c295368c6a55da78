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

#ifndef CREDIBLE_RANDOM_GAMES_H_
#define CREDIBLE_RANDOM_GAMES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "credible/automaton.h"
#include "credible/behavior.h"
#include "credible/game.h"
#include "credible/perfect_info.h"

namespace credible {

using Rng = std::mt19937_64;

// Action labels "a0", "a1", ... per player.
std::vector<std::vector<std::string>> DefaultActions(
    const std::vector<int>& counts);

// Integer payoffs drawn uniformly from [lo, hi].
StageGame RandomStageGame(Rng& rng, const std::vector<int>& counts, int lo,
                          int hi);

// Two-player game whose payoffs are distinct within each player's matrix.
StageGame RandomGenericStageGame(Rng& rng, int rows, int cols);

// Every player has a strictly dominant action, chosen at random.
StageGame RandomDominantStageGame(Rng& rng, const std::vector<int>& counts);

struct RandomGameOptions {
  int min_players = 2, max_players = 3;
  int min_actions = 2, max_actions = 3;
  int min_stages = 1, max_stages = 3;
  int payoff_lo = 0, payoff_hi = 5;
  bool require_pure_nash = false;
  bool dominant = false;
};

MultiStageGame RandomFiniteGame(Rng& rng, const RandomGameOptions& options);

// Random behavior table drawn over pure profiles of each stage.
BehaviorProfile RandomPureBehavior(Rng& rng, const MultiStageGame& game);

// Random tree with at most `max_internal` decision nodes and all leaf
// payoffs distinct per player, so backward induction never meets a tie.
GameTree RandomTieFreeTree(Rng& rng, int players, int max_internal);

// Random tree with small payoff range (ties likely).
GameTree RandomTree(Rng& rng, int players, int max_internal, int payoff_hi);

// Random Moore machines over a stage game (pure outputs).
AutomatonProfile RandomAutomata(Rng& rng, const StageGame& g, int max_states);

}  // namespace credible

#endif  // CREDIBLE_RANDOM_GAMES_H_
