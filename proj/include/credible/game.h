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

#ifndef CREDIBLE_GAME_H_
#define CREDIBLE_GAME_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "credible/rational.h"

namespace credible {

// One action index per player.
using PureProfile = std::vector<int>;

// A finite n-player normal-form game. Pure profiles are indexed in
// player-major order: player 0 is the most significant digit, so
// index(a) = ((a0 * |A1| + a1) * |A2| + a2) ...
//
// Payoff entries are stored as given; an entry with the wrong arity (empty
// for "missing") is representable so that ValidateGame can report it. All
// solvers validate before use.
class StageGame {
 public:
  StageGame() = default;
  StageGame(std::vector<std::vector<std::string>> actions,
            std::vector<RatVector> payoffs);

  // Builds a game from a payoff callback over pure profiles.
  template <typename Fn>
  static StageGame FromFunction(std::vector<std::vector<std::string>> actions,
                                Fn&& payoff);

  int NumPlayers() const { return static_cast<int>(actions_.size()); }
  int NumActions(int player) const {
    return static_cast<int>(actions_[player].size());
  }
  const std::vector<std::string>& Actions(int player) const {
    return actions_[player];
  }
  const std::vector<std::vector<std::string>>& AllActions() const {
    return actions_;
  }
  std::size_t NumProfiles() const { return payoffs_.size(); }

  std::size_t ProfileIndex(const PureProfile& profile) const;
  PureProfile ProfileAt(std::size_t index) const;
  // Index of the profile obtained from `index` by switching `player` to
  // `action`.
  std::size_t WithAction(std::size_t index, int player, int action) const;
  int ActionOf(std::size_t index, int player) const {
    return static_cast<int>((index / strides_[player]) % actions_[player].size());
  }

  const RatVector& Payoff(std::size_t index) const { return payoffs_[index]; }
  const RatVector& Payoff(const PureProfile& p) const {
    return payoffs_[ProfileIndex(p)];
  }
  const std::vector<RatVector>& Payoffs() const { return payoffs_; }

  std::optional<int> ActionIndex(int player, std::string_view label) const;
  // Parses "C,D" (labels joined by commas) into a profile.
  std::optional<PureProfile> ParseProfileLabel(std::string_view label) const;
  // "C,D".
  std::string ProfileLabel(const PureProfile& profile) const;
  std::string ProfileLabel(std::size_t index) const {
    return ProfileLabel(ProfileAt(index));
  }

  friend bool operator==(const StageGame& a, const StageGame& b) {
    return a.actions_ == b.actions_ && a.payoffs_ == b.payoffs_;
  }

 private:
  std::vector<std::vector<std::string>> actions_;
  std::vector<std::size_t> strides_;
  std::vector<RatVector> payoffs_;
};

// Per-player probability vectors over that player's actions.
struct MixedProfile {
  std::vector<RatVector> dist;

  static MixedProfile Pure(const StageGame& g, const PureProfile& profile);
  static MixedProfile Pure(const StageGame& g, std::size_t index) {
    return Pure(g, g.ProfileAt(index));
  }
  // The profile if every player's distribution is degenerate.
  std::optional<PureProfile> AsPure() const;

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
  friend auto operator<=>(const MixedProfile&, const MixedProfile&) = default;
};

// Throws InputError unless `m` has one distribution per player, each with
// one nonnegative weight per action summing to exactly 1.
void CheckMixedProfile(const StageGame& g, const MixedProfile& m);

// "(D,D)" for pure profiles, "(C, 3/4 D + 1/4 E)" once a player mixes.
std::string FormatMixed(const StageGame& g, const MixedProfile& m);

// Exact expectation of every player's payoff under the product distribution.
RatVector ExpectedStagePayoff(const StageGame& g, const MixedProfile& m);

// Expected payoff of `player` choosing `action` while the others follow m.
Rat DeviationPayoff(const StageGame& g, const MixedProfile& m, int player,
                    int action);

// Probability of every pure profile with positive mass, in index order.
std::vector<std::pair<std::size_t, Rat>> SupportProfiles(
    const StageGame& g, const MixedProfile& m);

enum class HorizonKind { kFinite, kInfinite };

// A schedule of stage games with a common discount factor. Finite games keep
// their stages in `stages`; infinite games keep the prefix in `stages` and the
// repeating block in `cycle`.
struct MultiStageGame {
  std::vector<std::string> players;
  Rat delta{1};
  HorizonKind kind = HorizonKind::kFinite;
  std::vector<StageGame> stages;
  std::vector<StageGame> cycle;

  static MultiStageGame Finite(std::vector<std::string> players, Rat delta,
                               std::vector<StageGame> stages);
  static MultiStageGame Infinite(std::vector<std::string> players, Rat delta,
                                 std::vector<StageGame> prefix,
                                 std::vector<StageGame> cycle);

  bool IsFinite() const { return kind == HorizonKind::kFinite; }
  int NumPlayers() const { return static_cast<int>(players.size()); }
  // Number of stages of a finite game.
  int Horizon() const { return static_cast<int>(stages.size()); }
  // Stage game played at `time` (1-based).
  const StageGame& StageAt(int time) const;
  // Stage games as listed in the schedule (prefix then cycle), paired with
  // the first time each is played.
  std::vector<std::pair<int, const StageGame*>> ScheduledStages() const;

  friend bool operator==(const MultiStageGame&,
                         const MultiStageGame&) = default;
};

// Play recorded before a subgame starts: moves[t] is the pure profile
// realized at time t + 1. The subgame starts at Time().
struct History {
  std::vector<PureProfile> moves;

  int Time() const { return static_cast<int>(moves.size()) + 1; }
  friend bool operator==(const History&, const History&) = default;
  friend auto operator<=>(const History&, const History&) = default;
};

std::string FormatHistory(const MultiStageGame& game, const History& h);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string Join() const;
};

ValidationReport ValidateStageGame(const StageGame& g,
                                   std::string_view location);
ValidationReport ValidateGame(const MultiStageGame& game);
// Throws InputError carrying the report when the game is invalid.
void RequireValid(const MultiStageGame& game);
void RequireValid(const StageGame& g);

// Throws InputError if `h` does not index a subgame of `game`.
void CheckHistory(const MultiStageGame& game, const History& h);

// Subgames are equivalent exactly when they start at the same time.
bool SubgamesEquivalent(const MultiStageGame& game, const History& a,
                        const History& b);

template <typename Fn>
StageGame StageGame::FromFunction(std::vector<std::vector<std::string>> actions,
                                  Fn&& payoff) {
  std::size_t count = 1;
  for (const auto& a : actions) count *= a.size();
  std::vector<RatVector> payoffs(count);
  StageGame shell(actions, std::vector<RatVector>(count));
  for (std::size_t i = 0; i < count; ++i) {
    payoffs[i] = payoff(shell.ProfileAt(i));
  }
  return StageGame(std::move(actions), std::move(payoffs));
}

}  // namespace credible

#endif  // CREDIBLE_GAME_H_
