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

#include "credible/reference_games.h"

#include <functional>

namespace credible::reference {

namespace {

StageGame Bimatrix(std::vector<std::string> rows, std::vector<std::string> cols,
                   const std::vector<std::vector<std::pair<int, int>>>& cells) {
  return StageGame::FromFunction({std::move(rows), std::move(cols)},
                                 [&](const PureProfile& a) {
                                   const auto& c = cells[a[0]][a[1]];
                                   return RatVector{Rat(c.first),
                                                    Rat(c.second)};
                                 });
}

// Fills a pure table by applying `rule(time, history)` at every history.
BehaviorProfile FromRule(
    const MultiStageGame& game,
    const std::function<PureProfile(int, const History&)>& rule) {
  HistoryTree tree(game);
  PureTable table;
  table.levels.resize(tree.Horizon());
  for (int t = 1; t <= tree.Horizon(); ++t) {
    for (std::size_t i = 0; i < tree.LevelSize(t); ++i) {
      const History h = tree.HistoryAt(t, i);
      table.levels[t - 1].push_back(static_cast<std::uint32_t>(
          tree.Stage(t).ProfileIndex(rule(t, h))));
    }
  }
  return ToBehavior(tree, table);
}

}  // namespace

StageGame CdeGame() {
  return Bimatrix({"C", "D", "E"}, {"C", "D", "E"},
                  {{{4, 4}, {0, 0}, {0, 5}},
                   {{0, 0}, {1, 1}, {0, 0}},
                   {{5, 0}, {0, 0}, {3, 3}}});
}

StageGame PrisonersDilemma() {
  return Bimatrix({"C", "D"}, {"C", "D"},
                  {{{3, 3}, {0, 5}}, {{5, 0}, {1, 1}}});
}

StageGame MatchingPennies() {
  return Bimatrix({"H", "T"}, {"H", "T"},
                  {{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}});
}

StageGame DuplicateColumnGame() {
  return Bimatrix({"U", "M", "D"}, {"L", "R", "S"},
                  {{{1, 2}, {1, 2}, {1, 2}},
                   {{3, 3}, {1, 2}, {1, 2}},
                   {{0, 1}, {2, 0}, {2, 0}}});
}

StageGame ThreatStageOne() {
  return Bimatrix({"A", "B"}, {"A", "B"},
                  {{{0, 0}, {0, 0}}, {{1, 3}, {4, 2}}});
}

StageGame ThreatStageTwo() {
  return Bimatrix({"A", "B"}, {"A", "B"},
                  {{{1, 1}, {1, 1}}, {{1, 3}, {1, 3}}});
}

MultiStageGame Repeated(const StageGame& g, int times, Rat delta) {
  return MultiStageGame::Finite({"Row", "Column"}, std::move(delta),
                                std::vector<StageGame>(times, g));
}

MultiStageGame RepeatedForever(const StageGame& g, Rat delta) {
  return MultiStageGame::Infinite({"Row", "Column"}, std::move(delta), {}, {g});
}

MultiStageGame ThreatGame() {
  return MultiStageGame::Finite({"Row", "Column"}, Rat(1),
                                {ThreatStageOne(), ThreatStageTwo()});
}

BehaviorProfile CooperationWithPunishment(const MultiStageGame& twice_cde) {
  const PureProfile cc{0, 0}, dd{1, 1}, ee{2, 2};
  return FromRule(twice_cde, [&](int t, const History& h) {
    if (t == 1) return cc;
    return h.moves[0] == cc ? ee : dd;
  });
}

BehaviorProfile ThreatProfile(const MultiStageGame& threat_game) {
  const PureProfile bb{1, 1}, ab{0, 1};
  return FromRule(threat_game, [&](int t, const History& h) {
    if (t == 1) return bb;
    return h.moves[0] == bb ? bb : ab;
  });
}

namespace {

int TiedSubtree(GameTree& tree) {
  const int p = tree.AddLeaf({Rat(1), Rat(0)});
  const int q = tree.AddLeaf({Rat(1), Rat(5)});
  const int after_x = tree.AddDecision(0, {{"p", p}, {"q", q}});
  const int y = tree.AddLeaf({Rat(0), Rat(2)});
  return tree.AddDecision(1, {{"x", after_x}, {"y", y}});
}

}  // namespace

GameTree TiedCopiesTree() {
  GameTree tree(2);
  const int left = TiedSubtree(tree);
  const int right = TiedSubtree(tree);
  tree.SetRoot(tree.AddDecision(0, {{"left", left}, {"right", right}}));
  return tree;
}

GameTree TakeOrPassTree() {
  GameTree tree(2);
  const int take = tree.AddLeaf({Rat(1), Rat(0)});
  const int a = tree.AddLeaf({Rat(0), Rat(2)});
  const int b = tree.AddLeaf({Rat(3), Rat(1)});
  const int pass = tree.AddDecision(1, {{"a", a}, {"b", b}});
  tree.SetRoot(tree.AddDecision(0, {{"Take", take}, {"Pass", pass}}));
  return tree;
}

}  // namespace credible::reference
