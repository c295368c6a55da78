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

#ifndef CREDIBLE_AUTOMATON_H_
#define CREDIBLE_AUTOMATON_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "credible/game.h"
#include "credible/parallel.h"
#include "credible/verdict.h"

namespace credible {

inline constexpr std::size_t kDefaultJointStateCap = 10'000;

// Moore machine strategy for one player of a repeated stage game. Outputs a
// mixed action per state; transitions read the realized pure profile.
struct PlayerAutomaton {
  std::vector<std::string> states;
  int initial = 0;
  std::vector<RatVector> output;              // [state][own action]
  std::vector<std::vector<int>> transition;   // [state][profile index]

  int NumStates() const { return static_cast<int>(states.size()); }
  friend bool operator==(const PlayerAutomaton&,
                         const PlayerAutomaton&) = default;
};

using AutomatonProfile = std::vector<PlayerAutomaton>;

// Throws InputError unless every machine is total over g's profiles and its
// outputs are distributions over its owner's actions.
void CheckAutomata(const StageGame& g, const AutomatonProfile& profile);

// Product of the players' machines. Joint states are numbered in mixed
// radix with player 0 most significant.
class JointStateSpace {
 public:
  JointStateSpace(const StageGame& g, const AutomatonProfile& profile,
                  std::size_t cap = kDefaultJointStateCap);

  std::size_t Size() const { return size_; }
  std::size_t Initial() const { return initial_; }
  int Component(std::size_t q, int player) const {
    return static_cast<int>((q / strides_[player]) %
                            (*profile_)[player].NumStates());
  }
  std::size_t Next(std::size_t q, std::size_t profile_index) const;
  MixedProfile Output(std::size_t q) const;
  std::vector<std::string> Labels(std::size_t q) const;

 private:
  const AutomatonProfile* profile_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
  std::size_t initial_ = 0;
};

// Per-player discounted continuation value at every joint state, exponent 0
// at the state.
using ValueTable = std::vector<RatVector>;

// Solves V = r + delta * M V exactly, where r is the expected stage payoff
// of each joint state and M the induced transition matrix. Requires
// delta < 1.
ValueTable AutomatonValues(const StageGame& g, const Rat& delta,
                           const AutomatonProfile& profile,
                           std::size_t cap = kDefaultJointStateCap);

// V(q) - E[u(a)] - delta * E[V(next(q, a))] at every joint state.
ValueTable BellmanResiduals(const StageGame& g, const Rat& delta,
                            const AutomatonProfile& profile,
                            const ValueTable& values);

// Joint states reachable from the initial one after any finite history.
std::vector<std::size_t> ReachableStates(const StageGame& g,
                                         const AutomatonProfile& profile,
                                         std::size_t cap = kDefaultJointStateCap);

// One-shot deviation check at every joint state some history reaches
// (off-path histories included).
Verdict VerifySpneAutomaton(const StageGame& g, const Rat& delta,
                            const AutomatonProfile& profile,
                            std::size_t cap = kDefaultJointStateCap,
                            Exec exec = Exec::kParallel);

// Sets of joint states reachable by histories of length t - 1, for all t.
// The sequence is eventually periodic; sets[k] is the set for time k + 1
// and sets has preperiod + period entries.
struct ReachableSequence {
  std::vector<std::vector<std::size_t>> sets;
  int preperiod = 0;
  int period = 1;

  const std::vector<std::size_t>& AtTime(int time) const;
};

ReachableSequence ComputeReachableSequence(
    const StageGame& g, const AutomatonProfile& profile,
    std::size_t cap = kDefaultJointStateCap);

std::vector<std::size_t> ReachableStatesAtTime(
    const StageGame& g, const AutomatonProfile& profile, int time,
    std::size_t cap = kDefaultJointStateCap);

// Moore-equivalence class of every state of one machine over the full input
// alphabet of pure profiles. States share a class iff they induce the same
// continuation strategy.
std::vector<int> BehaviorClasses(const PlayerAutomaton& machine);

struct AutomatonCredibility {
  Verdict verdict;
  int preperiod = 0;
  int period = 1;
  // Whether also comparing states reached at different times would change
  // the credibility verdict.
  bool cross_time_changes_verdict = false;
};

// Subgame perfection plus the same-time credibility condition over the
// reachable-set sequence: behaviorally different continuation strategies of
// a player at two joint states reachable at the same time must give that
// player equal values.
AutomatonCredibility VerifyCredibleAutomaton(
    const StageGame& g, const Rat& delta, const AutomatonProfile& profile,
    std::size_t cap = kDefaultJointStateCap, Exec exec = Exec::kParallel);

// "grim-trigger", "always-defect" or "tit-for-tat" for `player` of a 2x2
// game whose first action is cooperation and second defection.
PlayerAutomaton PresetAutomaton(std::string_view name, const StageGame& g,
                                int player);

}  // namespace credible

#endif  // CREDIBLE_AUTOMATON_H_
