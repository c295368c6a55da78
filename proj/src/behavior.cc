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

#include "credible/behavior.h"

#include <limits>

#include "credible/errors.h"

namespace credible {

HistoryTree::HistoryTree(const MultiStageGame& game, std::size_t node_cap)
    : game_(&game) {
  if (!game.IsFinite()) {
    throw UnsupportedHorizon("history tables need a finite horizon");
  }
  RequireValid(game);
  std::size_t level = 1;
  for (int t = 1; t <= game.Horizon(); ++t) {
    level_sizes_.push_back(level);
    num_nodes_ += level;
    if (num_nodes_ > node_cap) {
      throw CapExceeded("history tree exceeds node cap of " +
                        std::to_string(node_cap));
    }
    const std::size_t profiles = game.StageAt(t).NumProfiles();
    if (level > std::numeric_limits<std::size_t>::max() / profiles) {
      throw CapExceeded("history tree size overflows");
    }
    level *= profiles;
  }
}

std::size_t HistoryTree::IndexOf(const History& h) const {
  CheckHistory(*game_, h);
  std::size_t index = 0;
  for (std::size_t t = 0; t < h.moves.size(); ++t) {
    index = Child(static_cast<int>(t) + 1, index,
                  Stage(static_cast<int>(t) + 1).ProfileIndex(h.moves[t]));
  }
  return index;
}

History HistoryTree::HistoryAt(int time, std::size_t index) const {
  History h;
  h.moves.resize(time - 1);
  for (int t = time - 1; t >= 1; --t) {
    const std::size_t n = Stage(t).NumProfiles();
    h.moves[t - 1] = Stage(t).ProfileAt(index % n);
    index /= n;
  }
  return h;
}

std::vector<std::string> HistoryTree::Labels(int time,
                                             std::size_t index) const {
  History h = HistoryAt(time, index);
  std::vector<std::string> out;
  for (std::size_t t = 0; t < h.moves.size(); ++t) {
    out.push_back(Stage(static_cast<int>(t) + 1).ProfileLabel(h.moves[t]));
  }
  return out;
}

void CheckBehaviorProfile(const HistoryTree& tree, const BehaviorProfile& p) {
  if (static_cast<int>(p.levels.size()) != tree.Horizon()) {
    throw InputError("profile covers " + std::to_string(p.levels.size()) +
                     " stages, game has " + std::to_string(tree.Horizon()));
  }
  for (int t = 1; t <= tree.Horizon(); ++t) {
    if (p.levels[t - 1].size() != tree.LevelSize(t)) {
      throw InputError("profile is not total at time " + std::to_string(t) +
                       ": " + std::to_string(p.levels[t - 1].size()) + " of " +
                       std::to_string(tree.LevelSize(t)) + " histories");
    }
    for (const auto& m : p.levels[t - 1]) CheckMixedProfile(tree.Stage(t), m);
  }
}

BehaviorProfile ToBehavior(const HistoryTree& tree, const PureTable& table) {
  BehaviorProfile p;
  p.levels.resize(tree.Horizon());
  for (int t = 1; t <= tree.Horizon(); ++t) {
    const auto& level = table.levels.at(t - 1);
    p.levels[t - 1].reserve(level.size());
    for (auto a : level) {
      p.levels[t - 1].push_back(MixedProfile::Pure(tree.Stage(t), a));
    }
  }
  return p;
}

std::optional<PureTable> AsPureTable(const HistoryTree& tree,
                                     const BehaviorProfile& p) {
  PureTable table;
  table.levels.resize(p.levels.size());
  for (std::size_t t = 0; t < p.levels.size(); ++t) {
    for (const auto& m : p.levels[t]) {
      auto pure = m.AsPure();
      if (!pure) return std::nullopt;
      table.levels[t].push_back(static_cast<std::uint32_t>(
          tree.Stage(static_cast<int>(t) + 1).ProfileIndex(*pure)));
    }
  }
  return table;
}

const MixedProfile& OpenLoopProfile::At(int time) const {
  const auto t = static_cast<std::size_t>(time - 1);
  if (t < prefix.size()) return prefix[t];
  if (cycle.empty()) throw InputError("open-loop profile ends before time " +
                                      std::to_string(time));
  return cycle[(t - prefix.size()) % cycle.size()];
}

BehaviorProfile ToBehavior(const HistoryTree& tree, const OpenLoopProfile& p) {
  BehaviorProfile out;
  out.levels.resize(tree.Horizon());
  for (int t = 1; t <= tree.Horizon(); ++t) {
    out.levels[t - 1].assign(tree.LevelSize(t), p.At(t));
  }
  return out;
}

namespace {

RatVector NodeValue(const HistoryTree& tree, const BehaviorProfile& p,
                    const std::vector<RatVector>* next, int time,
                    std::size_t index) {
  const StageGame& g = tree.Stage(time);
  const Rat& delta = tree.game().delta;
  RatVector value(g.NumPlayers(), Rat(0));
  for (const auto& [profile, w] : SupportProfiles(g, p.At(time, index))) {
    const RatVector& u = g.Payoff(profile);
    for (int i = 0; i < g.NumPlayers(); ++i) {
      Rat term = u[i];
      if (next) term += delta * (*next)[tree.Child(time, index, profile)][i];
      value[i] += w * term;
    }
  }
  return value;
}

RatVector PathValue(const HistoryTree& tree, const BehaviorProfile& p,
                    int time, std::size_t index) {
  const StageGame& g = tree.Stage(time);
  RatVector value(g.NumPlayers(), Rat(0));
  for (const auto& [profile, w] : SupportProfiles(g, p.At(time, index))) {
    const RatVector& u = g.Payoff(profile);
    RatVector cont;
    if (time < tree.Horizon()) {
      cont = PathValue(tree, p, time + 1, tree.Child(time, index, profile));
    }
    for (int i = 0; i < g.NumPlayers(); ++i) {
      Rat term = u[i];
      if (!cont.empty()) term += tree.game().delta * cont[i];
      value[i] += w * term;
    }
  }
  return value;
}

}  // namespace

SubgameValues ComputeSubgameValues(const HistoryTree& tree,
                                   const BehaviorProfile& p, Exec exec) {
  CheckBehaviorProfile(tree, p);
  SubgameValues values;
  values.levels.resize(tree.Horizon());
  for (int t = tree.Horizon(); t >= 1; --t) {
    auto& level = values.levels[t - 1];
    level.resize(tree.LevelSize(t));
    const std::vector<RatVector>* next =
        t < tree.Horizon() ? &values.levels[t] : nullptr;
    ForEachIndex(level.size(), exec, [&](std::size_t i) {
      level[i] = NodeValue(tree, p, next, t, i);
    });
  }
  return values;
}

RatVector DiscountedPayoff(const MultiStageGame& game,
                           const BehaviorProfile& p, const History& root) {
  HistoryTree tree(game);
  CheckBehaviorProfile(tree, p);
  const std::size_t index = tree.IndexOf(root);
  return PathValue(tree, p, root.Time(), index);
}

}  // namespace credible
