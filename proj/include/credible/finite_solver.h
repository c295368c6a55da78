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

#ifndef CREDIBLE_FINITE_SOLVER_H_
#define CREDIBLE_FINITE_SOLVER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "credible/behavior.h"
#include "credible/game.h"
#include "credible/parallel.h"
#include "credible/stage_nash.h"
#include "credible/verdict.h"

namespace credible {

struct SolverCaps {
  std::size_t nodes = kDefaultNodeCap;
  // Subgame-perfect continuation objects per stage during enumeration.
  std::size_t objects_per_stage = 100'000;
  std::size_t profiles_per_stage = kDefaultProfileCap;
};

// Passes iff no player gains from a one-shot deviation at any history, given
// the profile's continuation. Witnesses are ordered by time, then history,
// then player.
Verdict VerifySpne(const MultiStageGame& game, const BehaviorProfile& p,
                   const SolverCaps& caps = {}, Exec exec = Exec::kParallel);

// VerifySpne plus the same-time credibility condition: whenever a player's
// restricted strategy differs between two histories of the same time, that
// player's continuation payoffs must be equal. Reports at most one
// credibility witness per (time, player): the first offending pair in
// history order.
Verdict VerifyCredible(const MultiStageGame& game, const BehaviorProfile& p,
                       const SolverCaps& caps = {},
                       Exec exec = Exec::kParallel);

// The credibility condition alone, given precomputed subgame values.
Verdict CheckCredibilityCondition(const HistoryTree& tree,
                                  const BehaviorProfile& p,
                                  const SubgameValues& values);

// Class id of every player's restricted strategy at every history:
// classes[player][t - 1][i]. Two histories of the same time share an id iff
// the player's sub-tables rooted there are identical.
std::vector<std::vector<std::vector<int>>> RestrictionClasses(
    const HistoryTree& tree, const BehaviorProfile& p);

struct EquilibriumSet {
  std::vector<PureTable> profiles;  // sorted, duplicate-free
  bool truncated = false;
  std::string cap_info;
};

// Every pure subgame-perfect behavior table, by backward recursion over
// (stage profile, continuation selector) objects. Exceeding a cap returns an
// empty, truncated set.
EquilibriumSet EnumeratePureSpne(const MultiStageGame& game,
                                 const SolverCaps& caps = {},
                                 Exec exec = Exec::kParallel);

// EnumeratePureSpne filtered by the credibility condition.
EquilibriumSet EnumeratePureCredible(const MultiStageGame& game,
                                     const SolverCaps& caps = {},
                                     Exec exec = Exec::kParallel);

// The canonically first equilibrium of a stage game: first pure equilibrium
// in profile order, else (two players) first mixed one. Throws
// NoStageNashFound when neither exists.
MixedProfile FirstStageEquilibrium(const StageGame& g,
                                   std::size_t cap = kDefaultProfileCap);

// History-independent profile playing FirstStageEquilibrium at every time.
// Works for finite and prefix+cycle horizons.
OpenLoopProfile ConstructCredible(const MultiStageGame& game,
                                  std::size_t cap = kDefaultProfileCap);

enum class UniquenessStatus { kUnique, kNotApplicable, kUnknown };

std::string ToString(UniquenessStatus s);

struct UniquenessReport {
  UniquenessStatus status = UniquenessStatus::kUnknown;
  OpenLoopProfile profile;                // kUnique
  int stage_time = 0;                     // offending stage otherwise
  std::vector<MixedProfile> equilibria;   // two of them for kNotApplicable
  std::string reason;
};

// Runs HasUniqueNash on every scheduled stage game. All Unique yields the
// stage-equilibrium sequence as the unique credible equilibrium.
UniquenessReport AnalyzeUniqueness(const MultiStageGame& game,
                                   std::size_t cap = kDefaultProfileCap);

// "always (D,D)" when every time plays the same profile, otherwise one
// entry per scheduled time (cycle marked with "repeat").
std::string FormatOpenLoop(const MultiStageGame& game,
                           const OpenLoopProfile& p);

}  // namespace credible

#endif  // CREDIBLE_FINITE_SOLVER_H_
