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

#include "credible/random_games.h"

#include <algorithm>
#include <numeric>

#include "credible/behavior.h"
#include "credible/stage_nash.h"

namespace credible {

namespace {

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

std::vector<std::vector<std::string>> DefaultActions(
    const std::vector<int>& counts) {
  std::vector<std::vector<std::string>> actions;
  for (int c : counts) {
    std::vector<std::string> labels;
    for (int a = 0; a < c; ++a) labels.push_back("a" + std::to_string(a));
    actions.push_back(std::move(labels));
  }
  return actions;
}

StageGame RandomStageGame(Rng& rng, const std::vector<int>& counts, int lo,
                          int hi) {
  return StageGame::FromFunction(DefaultActions(counts),
                                 [&](const PureProfile& a) {
                                   RatVector v;
                                   for (std::size_t i = 0; i < a.size(); ++i) {
                                     v.emplace_back(Uniform(rng, lo, hi));
                                   }
                                   return v;
                                 });
}

StageGame RandomGenericStageGame(Rng& rng, int rows, int cols) {
  const int cells = rows * cols;
  std::vector<int> row_pay(cells), col_pay(cells);
  std::vector<int> pool(4 * cells);
  std::iota(pool.begin(), pool.end(), -2 * cells);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::copy(pool.begin(), pool.begin() + cells, row_pay.begin());
  std::shuffle(pool.begin(), pool.end(), rng);
  std::copy(pool.begin(), pool.begin() + cells, col_pay.begin());
  std::size_t k = 0;
  return StageGame::FromFunction(DefaultActions({rows, cols}),
                                 [&](const PureProfile&) {
                                   RatVector v{Rat(row_pay[k]), Rat(col_pay[k])};
                                   ++k;
                                   return v;
                                 });
}

StageGame RandomDominantStageGame(Rng& rng, const std::vector<int>& counts) {
  std::vector<int> dominant;
  for (int c : counts) dominant.push_back(Uniform(rng, 0, c - 1));
  constexpr int kBonus = 10;
  return StageGame::FromFunction(
      DefaultActions(counts), [&](const PureProfile& a) {
        RatVector v;
        for (std::size_t i = 0; i < a.size(); ++i) {
          const int base = a[i] == dominant[i] ? kBonus : 0;
          v.emplace_back(base + Uniform(rng, 0, kBonus - 1));
        }
        return v;
      });
}

MultiStageGame RandomFiniteGame(Rng& rng, const RandomGameOptions& o) {
  const int players = Uniform(rng, o.min_players, o.max_players);
  const int stages = Uniform(rng, o.min_stages, o.max_stages);
  std::vector<StageGame> list;
  while (static_cast<int>(list.size()) < stages) {
    std::vector<int> counts;
    for (int p = 0; p < players; ++p) {
      counts.push_back(Uniform(rng, o.min_actions, o.max_actions));
    }
    StageGame g = o.dominant
                      ? RandomDominantStageGame(rng, counts)
                      : RandomStageGame(rng, counts, o.payoff_lo, o.payoff_hi);
    if (o.require_pure_nash && EnumeratePureNash(g).empty()) continue;
    list.push_back(std::move(g));
  }
  static const Rat kDeltas[] = {Rat(1), Rat(1, 2), Rat(9, 10), Rat(1, 3),
                                Rat(0)};
  Rat delta = kDeltas[Uniform(rng, 0, 4)];
  std::vector<std::string> names;
  for (int p = 0; p < players; ++p) names.push_back("P" + std::to_string(p));
  return MultiStageGame::Finite(std::move(names), delta, std::move(list));
}

BehaviorProfile RandomPureBehavior(Rng& rng, const MultiStageGame& game) {
  HistoryTree tree(game);
  PureTable table;
  table.levels.resize(tree.Horizon());
  for (int t = 1; t <= tree.Horizon(); ++t) {
    const int n = static_cast<int>(tree.Stage(t).NumProfiles());
    for (std::size_t i = 0; i < tree.LevelSize(t); ++i) {
      table.levels[t - 1].push_back(
          static_cast<std::uint32_t>(Uniform(rng, 0, n - 1)));
    }
  }
  return ToBehavior(tree, table);
}

namespace {

struct Shape {
  int player = -1;
  std::vector<Shape> kids;
};

Shape MakeShape(Rng& rng, int players, int budget) {
  Shape s;
  s.player = Uniform(rng, 0, players - 1);
  const int k = Uniform(rng, 2, 3);
  s.kids.resize(k);
  std::vector<int> share(k, 0);
  for (int b = 1; b < budget; ++b) ++share[Uniform(rng, 0, k - 1)];
  for (int j = 0; j < k; ++j) {
    if (share[j] > 0) s.kids[j] = MakeShape(rng, players, share[j]);
  }
  return s;
}

int CountLeaves(const Shape& s) {
  if (s.player < 0) return 1;
  int n = 0;
  for (const auto& k : s.kids) n += CountLeaves(k);
  return n;
}

int Emit(GameTree& tree, const Shape& s,
         const std::vector<RatVector>& leaf_payoffs, int& next_leaf) {
  if (s.player < 0) return tree.AddLeaf(leaf_payoffs[next_leaf++]);
  std::vector<std::pair<std::string, int>> moves;
  for (std::size_t j = 0; j < s.kids.size(); ++j) {
    moves.emplace_back("m" + std::to_string(j),
                       Emit(tree, s.kids[j], leaf_payoffs, next_leaf));
  }
  return tree.AddDecision(s.player, std::move(moves));
}

GameTree BuildTree(Rng& rng, int players, int max_internal, bool distinct,
                   int payoff_hi) {
  const Shape shape = MakeShape(rng, players, Uniform(rng, 1, max_internal));
  const int leaves = CountLeaves(shape);
  std::vector<RatVector> payoffs(leaves, RatVector(players));
  for (int p = 0; p < players; ++p) {
    std::vector<int> values(leaves);
    if (distinct) {
      std::vector<int> pool(3 * leaves);
      std::iota(pool.begin(), pool.end(), 0);
      std::shuffle(pool.begin(), pool.end(), rng);
      std::copy(pool.begin(), pool.begin() + leaves, values.begin());
    } else {
      for (int& v : values) v = Uniform(rng, 0, payoff_hi);
    }
    for (int l = 0; l < leaves; ++l) payoffs[l][p] = Rat(values[l]);
  }
  GameTree tree(players);
  int next_leaf = 0;
  tree.SetRoot(Emit(tree, shape, payoffs, next_leaf));
  return tree;
}

}  // namespace

GameTree RandomTieFreeTree(Rng& rng, int players, int max_internal) {
  return BuildTree(rng, players, max_internal, true, 0);
}

GameTree RandomTree(Rng& rng, int players, int max_internal, int payoff_hi) {
  return BuildTree(rng, players, max_internal, false, payoff_hi);
}

AutomatonProfile RandomAutomata(Rng& rng, const StageGame& g,
                                int max_states) {
  AutomatonProfile profile;
  for (int p = 0; p < g.NumPlayers(); ++p) {
    PlayerAutomaton m;
    const int n = Uniform(rng, 1, max_states);
    for (int s = 0; s < n; ++s) {
      m.states.push_back("s" + std::to_string(s));
      RatVector out(g.NumActions(p), Rat(0));
      out[Uniform(rng, 0, g.NumActions(p) - 1)] = Rat(1);
      m.output.push_back(std::move(out));
      std::vector<int> next(g.NumProfiles());
      for (int& t : next) t = Uniform(rng, 0, n - 1);
      m.transition.push_back(std::move(next));
    }
    m.initial = Uniform(rng, 0, n - 1);
    profile.push_back(std::move(m));
  }
  return profile;
}

}  // namespace credible
