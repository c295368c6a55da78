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

#ifndef CREDIBLE_STAGE_NASH_H_
#define CREDIBLE_STAGE_NASH_H_

#include <cstddef>
#include <string>
#include <vector>

#include "credible/game.h"
#include "credible/parallel.h"
#include "credible/verdict.h"

namespace credible {

inline constexpr std::size_t kDefaultProfileCap = 1'000'000;

// Equilibrium census of a stage game. `mixed` holds the equilibria in which
// some player randomizes and is only populated for two-player games.
struct NashSet {
  std::vector<PureProfile> pure;
  std::vector<MixedProfile> mixed;
  // Set when some support system was singular or produced a zero weight on a
  // support action; completeness of `mixed` is then not guaranteed.
  bool degenerate = false;

  std::size_t size() const { return pure.size() + mixed.size(); }
  // Pure equilibria (as degenerate mixtures) followed by the mixed ones.
  std::vector<MixedProfile> All(const StageGame& g) const;
};

// Passes iff no player has a pure action with strictly higher expected
// payoff. A failure carries one witness per improving player, naming that
// player's best deviation (lowest index among ties).
Verdict IsNash(const StageGame& g, const MixedProfile& m);

// True iff the pure profile with this index is an equilibrium.
bool IsPureNash(const StageGame& g, std::size_t profile_index);

// Pure equilibria in profile-index (lexicographic) order.
std::vector<PureProfile> EnumeratePureNash(
    const StageGame& g, std::size_t cap = kDefaultProfileCap,
    Exec exec = Exec::kParallel);

// Support enumeration over equal-size support pairs with exact linear
// solves. Requires exactly two players.
NashSet EnumerateMixedNash2p(const StageGame& g,
                             std::size_t cap = kDefaultProfileCap,
                             Exec exec = Exec::kParallel);

// Pure equilibria for any player count plus, for two players, the mixed
// equilibria found by support enumeration.
NashSet NashCensus(const StageGame& g, std::size_t cap = kDefaultProfileCap,
                   Exec exec = Exec::kParallel);

enum class Uniqueness { kUnique, kMultiple, kUnknown };

std::string ToString(Uniqueness u);

struct UniquenessResult {
  Uniqueness status = Uniqueness::kUnknown;
  // One profile for kUnique, two distinct equilibria for kMultiple.
  std::vector<MixedProfile> equilibria;
  // How the status was certified, e.g. "iterated strict dominance".
  std::string reason;
};

// Unique is certified either by iterated elimination of strictly dominated
// actions down to a single profile, or (two players) by a nondegenerate
// census with exactly one element.
UniquenessResult HasUniqueNash(const StageGame& g,
                               std::size_t cap = kDefaultProfileCap);

// Result of iterated elimination of actions strictly dominated by another
// pure action: surviving action indices per player.
std::vector<std::vector<int>> IteratedStrictDominance(const StageGame& g);

}  // namespace credible

#endif  // CREDIBLE_STAGE_NASH_H_
