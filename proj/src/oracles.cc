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

#include "credible/oracles.h"

#include <algorithm>
#include <map>

#include "credible/errors.h"

namespace credible::oracle {

namespace {

Rat ProfileProbability(const StageGame& g, const MixedProfile& m,
                       const PureProfile& a) {
  Rat prob(1);
  for (int i = 0; i < g.NumPlayers(); ++i) prob *= m.dist[i][a[i]];
  return prob;
}

MixedProfile WithPointMass(const StageGame& g, MixedProfile m, int player,
                           int action) {
  m.dist[player].assign(g.NumActions(player), Rat(0));
  m.dist[player][action] = Rat(1);
  return m;
}

History Extend(const History& h, const PureProfile& a) {
  History out = h;
  out.moves.push_back(a);
  return out;
}

const MixedProfile& Prescribed(const MultiStageGame& game,
                               const BehaviorProfile& p, const History& h) {
  return p.levels[h.Time() - 1][HistoryIndex(game, h)];
}

// Every history of the game in depth-first order.
void CollectHistories(const MultiStageGame& game, const History& h,
                      std::vector<History>& out) {
  if (h.Time() > game.Horizon()) return;
  out.push_back(h);
  const StageGame& g = game.StageAt(h.Time());
  for (std::size_t idx = 0; idx < g.NumProfiles(); ++idx) {
    CollectHistories(game, Extend(h, g.ProfileAt(idx)), out);
  }
}

// Payoff walk where `player`, if nonnegative, follows `plan` instead of p.
void Walk(const MultiStageGame& game, const BehaviorProfile& p,
          const History& h, const Rat& prob, const Rat& discount, int player,
          const std::map<History, int>* plan, RatVector& acc) {
  if (h.Time() > game.Horizon()) return;
  const StageGame& g = game.StageAt(h.Time());
  MixedProfile m = Prescribed(game, p, h);
  if (player >= 0) m = WithPointMass(g, m, player, plan->at(h));
  for (std::size_t idx = 0; idx < g.NumProfiles(); ++idx) {
    const PureProfile a = g.ProfileAt(idx);
    const Rat pr = prob * ProfileProbability(g, m, a);
    if (pr.IsZero()) continue;
    const RatVector& u = g.Payoff(idx);
    for (int i = 0; i < g.NumPlayers(); ++i) acc[i] += pr * discount * u[i];
    Walk(game, p, Extend(h, a), pr, discount * game.delta, player, plan, acc);
  }
}

bool RestrictionsEqual(const MultiStageGame& game, const BehaviorProfile& p,
                       const History& a, const History& b, int player) {
  if (a.Time() > game.Horizon()) return true;
  if (Prescribed(game, p, a).dist[player] !=
      Prescribed(game, p, b).dist[player]) {
    return false;
  }
  const StageGame& g = game.StageAt(a.Time());
  for (std::size_t idx = 0; idx < g.NumProfiles(); ++idx) {
    const PureProfile x = g.ProfileAt(idx);
    if (!RestrictionsEqual(game, p, Extend(a, x), Extend(b, x), player)) {
      return false;
    }
  }
  return true;
}

}  // namespace

RatVector ExpectedPayoff(const StageGame& g, const MixedProfile& m) {
  RatVector total(g.NumPlayers(), Rat(0));
  for (std::size_t idx = 0; idx < g.NumProfiles(); ++idx) {
    const Rat prob = ProfileProbability(g, m, g.ProfileAt(idx));
    for (int i = 0; i < g.NumPlayers(); ++i) {
      total[i] += prob * g.Payoff(idx)[i];
    }
  }
  return total;
}

std::vector<PureProfile> PureNash(const StageGame& g) {
  std::vector<PureProfile> out;
  for (std::size_t idx = 0; idx < g.NumProfiles(); ++idx) {
    const PureProfile a = g.ProfileAt(idx);
    bool stable = true;
    for (int i = 0; i < g.NumPlayers() && stable; ++i) {
      for (int b = 0; b < g.NumActions(i); ++b) {
        PureProfile dev = a;
        dev[i] = b;
        if (g.Payoff(dev)[i] > g.Payoff(a)[i]) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(a);
  }
  return out;
}

bool IsNash(const StageGame& g, const MixedProfile& m) {
  const RatVector base = ExpectedPayoff(g, m);
  for (int i = 0; i < g.NumPlayers(); ++i) {
    for (int b = 0; b < g.NumActions(i); ++b) {
      if (ExpectedPayoff(g, WithPointMass(g, m, i, b))[i] > base[i]) {
        return false;
      }
    }
  }
  return true;
}

std::optional<MixedProfile> FullyMixed2x2(const StageGame& g) {
  auto u = [&](int r, int c, int i) { return g.Payoff(PureProfile{r, c})[i]; };
  // Row weight on action 0 that leaves the column player indifferent.
  const Rat den_p = u(0, 0, 1) - u(1, 0, 1) - u(0, 1, 1) + u(1, 1, 1);
  const Rat den_q = u(0, 0, 0) - u(0, 1, 0) - u(1, 0, 0) + u(1, 1, 0);
  if (den_p.IsZero() || den_q.IsZero()) return std::nullopt;
  const Rat p = (u(1, 1, 1) - u(1, 0, 1)) / den_p;
  const Rat q = (u(1, 1, 0) - u(0, 1, 0)) / den_q;
  if (p <= Rat(0) || p >= Rat(1) || q <= Rat(0) || q >= Rat(1)) {
    return std::nullopt;
  }
  MixedProfile m;
  m.dist = {{p, Rat(1) - p}, {q, Rat(1) - q}};
  return m;
}

std::size_t HistoryIndex(const MultiStageGame& game, const History& h) {
  std::size_t index = 0;
  for (std::size_t s = 0; s < h.moves.size(); ++s) {
    const StageGame& g = game.StageAt(static_cast<int>(s) + 1);
    index = index * g.NumProfiles() + g.ProfileIndex(h.moves[s]);
  }
  return index;
}

RatVector PathPayoff(const MultiStageGame& game, const BehaviorProfile& p,
                     const History& root) {
  RatVector acc(game.NumPlayers(), Rat(0));
  Walk(game, p, root, Rat(1), Rat(1), -1, nullptr, acc);
  return acc;
}

Rat BestResponseValue(const MultiStageGame& game, const BehaviorProfile& p,
                      const History& h, int player) {
  if (h.Time() > game.Horizon()) return Rat(0);
  const StageGame& g = game.StageAt(h.Time());
  const MixedProfile& m = Prescribed(game, p, h);
  std::optional<Rat> best;
  for (int b = 0; b < g.NumActions(player); ++b) {
    const MixedProfile dev = WithPointMass(g, m, player, b);
    Rat value(0);
    for (std::size_t idx = 0; idx < g.NumProfiles(); ++idx) {
      const PureProfile a = g.ProfileAt(idx);
      const Rat pr = ProfileProbability(g, dev, a);
      if (pr.IsZero()) continue;
      value += pr * (g.Payoff(idx)[player] +
                     game.delta *
                         BestResponseValue(game, p, Extend(h, a), player));
    }
    if (!best || value > *best) best = value;
  }
  return *best;
}

bool IsSpneByBestResponse(const MultiStageGame& game,
                          const BehaviorProfile& p) {
  std::vector<History> all;
  CollectHistories(game, History{}, all);
  for (const History& h : all) {
    const RatVector value = PathPayoff(game, p, h);
    for (int i = 0; i < game.NumPlayers(); ++i) {
      if (BestResponseValue(game, p, h, i) != value[i]) return false;
    }
  }
  return true;
}

bool IsSpneByPlans(const MultiStageGame& game, const BehaviorProfile& p,
                   std::size_t plan_cap) {
  std::vector<History> all;
  CollectHistories(game, History{}, all);
  for (const History& h : all) {
    std::vector<History> below;
    CollectHistories(game, h, below);
    const RatVector value = PathPayoff(game, p, h);
    for (int i = 0; i < game.NumPlayers(); ++i) {
      std::vector<int> radix;
      std::size_t plans = 1;
      for (const History& d : below) {
        radix.push_back(game.StageAt(d.Time()).NumActions(i));
        plans *= radix.back();
        if (plans > plan_cap) throw CapExceeded("oracle plan cap exceeded");
      }
      std::vector<int> digit(below.size(), 0);
      for (std::size_t n = 0; n < plans; ++n) {
        std::map<History, int> plan;
        for (std::size_t k = 0; k < below.size(); ++k) {
          plan[below[k]] = digit[k];
        }
        RatVector acc(game.NumPlayers(), Rat(0));
        Walk(game, p, h, Rat(1), Rat(1), i, &plan, acc);
        if (acc[i] > value[i]) return false;
        for (std::size_t k = 0; k < digit.size(); ++k) {
          if (++digit[k] < radix[k]) break;
          digit[k] = 0;
        }
      }
    }
  }
  return true;
}

std::vector<PureTable> AllPureSpne(const MultiStageGame& game,
                                   std::size_t table_cap) {
  std::vector<std::size_t> level_sizes{1};
  for (int t = 1; t < game.Horizon(); ++t) {
    level_sizes.push_back(level_sizes.back() * game.StageAt(t).NumProfiles());
  }
  std::vector<std::pair<int, std::size_t>> slots;  // (time, radix)
  std::size_t tables = 1;
  for (int t = 1; t <= game.Horizon(); ++t) {
    for (std::size_t i = 0; i < level_sizes[t - 1]; ++i) {
      slots.emplace_back(t, game.StageAt(t).NumProfiles());
      tables *= slots.back().second;
      if (tables > table_cap) throw CapExceeded("oracle table cap exceeded");
    }
  }
  std::vector<PureTable> out;
  std::vector<std::size_t> digit(slots.size(), 0);
  for (std::size_t n = 0; n < tables; ++n) {
    PureTable table;
    BehaviorProfile p;
    table.levels.resize(game.Horizon());
    p.levels.resize(game.Horizon());
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const int t = slots[k].first;
      table.levels[t - 1].push_back(static_cast<std::uint32_t>(digit[k]));
      p.levels[t - 1].push_back(
          MixedProfile::Pure(game.StageAt(t), digit[k]));
    }
    if (IsSpneByBestResponse(game, p)) out.push_back(std::move(table));
    for (std::size_t k = 0; k < digit.size(); ++k) {
      if (++digit[k] < slots[k].second) break;
      digit[k] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CredibilityHoldsNaive(const MultiStageGame& game,
                           const BehaviorProfile& p) {
  std::vector<History> all;
  CollectHistories(game, History{}, all);
  for (std::size_t x = 0; x < all.size(); ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      if (all[x].Time() != all[y].Time()) continue;
      const RatVector vx = PathPayoff(game, p, all[x]);
      const RatVector vy = PathPayoff(game, p, all[y]);
      for (int i = 0; i < game.NumPlayers(); ++i) {
        if (vx[i] != vy[i] &&
            !RestrictionsEqual(game, p, all[x], all[y], i)) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

void SubtreeNodes(const GameTree& tree, int v, std::vector<int>& out) {
  out.push_back(v);
  for (int c : tree.Node(v).children) SubtreeNodes(tree, c, out);
}

const RatVector& FollowFrom(const GameTree& tree,
                            const std::vector<int>& choice, int v) {
  while (!tree.Node(v).IsLeaf()) v = tree.Node(v).children[choice[v]];
  return tree.Node(v).payoffs;
}

}  // namespace

bool IsTreeSpneExhaustive(const GameTree& tree, const TreeStrategy& s) {
  for (std::size_t v = 0; v < tree.NumNodes(); ++v) {
    if (tree.Node(v).IsLeaf()) continue;
    std::vector<int> below;
    SubtreeNodes(tree, static_cast<int>(v), below);
    const RatVector base = FollowFrom(tree, s.choice, static_cast<int>(v));
    for (int i = 0; i < tree.NumPlayers(); ++i) {
      std::vector<int> own;
      for (int n : below) {
        if (tree.Node(n).player == i) own.push_back(n);
      }
      std::vector<int> choice = s.choice;
      for (int n : own) choice[n] = 0;
      while (true) {
        if (FollowFrom(tree, choice, static_cast<int>(v))[i] > base[i]) {
          return false;
        }
        std::size_t k = 0;
        for (; k < own.size(); ++k) {
          const int n = own[k];
          if (++choice[n] < static_cast<int>(tree.Node(n).children.size())) {
            break;
          }
          choice[n] = 0;
        }
        if (k == own.size()) break;
      }
    }
  }
  return true;
}

RatVector TruncatedAutomatonValue(const StageGame& g, const Rat& delta,
                                  const AutomatonProfile& profile,
                                  std::size_t start, int steps) {
  const int n = g.NumPlayers();
  std::vector<int> states(n);
  for (int i = n - 1; i >= 0; --i) {
    states[i] = static_cast<int>(start % profile[i].NumStates());
    start /= profile[i].NumStates();
  }
  std::map<std::vector<int>, Rat> dist{{states, Rat(1)}};
  RatVector acc(n, Rat(0));
  Rat discount(1);
  for (int step = 0; step < steps; ++step) {
    std::map<std::vector<int>, Rat> next;
    for (const auto& [q, prob] : dist) {
      for (std::size_t idx = 0; idx < g.NumProfiles(); ++idx) {
        const PureProfile a = g.ProfileAt(idx);
        Rat pr = prob;
        for (int i = 0; i < n; ++i) pr *= profile[i].output[q[i]][a[i]];
        if (pr.IsZero()) continue;
        for (int i = 0; i < n; ++i) acc[i] += discount * pr * g.Payoff(idx)[i];
        std::vector<int> r(n);
        for (int i = 0; i < n; ++i) r[i] = profile[i].transition[q[i]][idx];
        next[r] += pr;
      }
    }
    dist = std::move(next);
    discount *= delta;
  }
  return acc;
}

}  // namespace credible::oracle
