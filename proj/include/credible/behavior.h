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

#ifndef CREDIBLE_BEHAVIOR_H_
#define CREDIBLE_BEHAVIOR_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "credible/game.h"
#include "credible/parallel.h"

namespace credible {

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

// Index arithmetic over the history tree of a finite game. Histories at
// time t are numbered 0..LevelSize(t)-1 in lexicographic order of their
// profile indices, so the child of history i after profile a is
// i * NumProfiles(stage t) + a.
//
// Keeps a reference to the game; the game must outlive the tree.
class HistoryTree {
 public:
  explicit HistoryTree(const MultiStageGame& game,
                       std::size_t node_cap = kDefaultNodeCap);

  const MultiStageGame& game() const { return *game_; }
  int Horizon() const { return static_cast<int>(level_sizes_.size()); }
  std::size_t LevelSize(int time) const { return level_sizes_[time - 1]; }
  std::size_t NumNodes() const { return num_nodes_; }
  const StageGame& Stage(int time) const { return game_->StageAt(time); }
  std::size_t Child(int time, std::size_t index, std::size_t profile) const {
    return index * Stage(time).NumProfiles() + profile;
  }

  std::size_t IndexOf(const History& h) const;
  History HistoryAt(int time, std::size_t index) const;
  // One "a,b" label per elapsed stage.
  std::vector<std::string> Labels(int time, std::size_t index) const;

 private:
  const MultiStageGame* game_;
  std::vector<std::size_t> level_sizes_;
  std::size_t num_nodes_ = 0;
};

// A total assignment of a mixed stage profile to every history of a finite
// game: levels[t - 1][i] is played at history i of time t.
struct BehaviorProfile {
  std::vector<std::vector<MixedProfile>> levels;

  const MixedProfile& At(int time, std::size_t index) const {
    return levels[time - 1][index];
  }
  friend bool operator==(const BehaviorProfile&,
                         const BehaviorProfile&) = default;
};

// Throws InputError unless `p` is total over `tree` and every entry is a
// valid mixed profile of its stage game.
void CheckBehaviorProfile(const HistoryTree& tree, const BehaviorProfile& p);

// Pure behavior table: levels[t - 1][i] is a profile index of stage t.
struct PureTable {
  std::vector<std::vector<std::uint32_t>> levels;

  friend bool operator==(const PureTable&, const PureTable&) = default;
  friend auto operator<=>(const PureTable&, const PureTable&) = default;
};

BehaviorProfile ToBehavior(const HistoryTree& tree, const PureTable& table);
// The pure table if every entry of `p` is pure.
std::optional<PureTable> AsPureTable(const HistoryTree& tree,
                                     const BehaviorProfile& p);

// A history-independent profile: one mixed stage profile per time, with an
// optional repeating block for infinite horizons.
struct OpenLoopProfile {
  std::vector<MixedProfile> prefix;
  std::vector<MixedProfile> cycle;

  const MixedProfile& At(int time) const;
  friend bool operator==(const OpenLoopProfile&,
                         const OpenLoopProfile&) = default;
};

// Expands an open-loop profile over the full history tree.
BehaviorProfile ToBehavior(const HistoryTree& tree, const OpenLoopProfile& p);

// Continuation payoff of every history, discounted from exponent 0 at that
// history: values[t - 1][i][player].
struct SubgameValues {
  std::vector<std::vector<RatVector>> levels;

  const RatVector& At(int time, std::size_t index) const {
    return levels[time - 1][index];
  }
};

// Bottom-up over the levels; each level is a data-parallel kernel.
SubgameValues ComputeSubgameValues(const HistoryTree& tree,
                                   const BehaviorProfile& p,
                                   Exec exec = Exec::kParallel);

// u(p | subgame at root): sum over t >= root.time of
// delta^(t - root.time) * E[stage payoff at t], following the realized
// histories of the subgame.
RatVector DiscountedPayoff(const MultiStageGame& game,
                           const BehaviorProfile& p, const History& root);

}  // namespace credible

#endif  // CREDIBLE_BEHAVIOR_H_
