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

#include "credible/game.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "credible/errors.h"

namespace credible {

StageGame::StageGame(std::vector<std::vector<std::string>> actions,
                     std::vector<RatVector> payoffs)
    : actions_(std::move(actions)), payoffs_(std::move(payoffs)) {
  strides_.assign(actions_.size(), 1);
  std::size_t count = 1;
  for (std::size_t p = actions_.size(); p-- > 0;) {
    strides_[p] = count;
    count *= actions_[p].size();
  }
  if (actions_.empty()) count = 0;
  if (payoffs_.size() != count) payoffs_.resize(count);
}

std::size_t StageGame::ProfileIndex(const PureProfile& profile) const {
  if (profile.size() != actions_.size()) {
    throw InputError("profile has " + std::to_string(profile.size()) +
                     " entries, game has " + std::to_string(actions_.size()) +
                     " players");
  }
  std::size_t index = 0;
  for (std::size_t p = 0; p < profile.size(); ++p) {
    if (profile[p] < 0 ||
        profile[p] >= static_cast<int>(actions_[p].size())) {
      throw InputError("action index out of range for player " +
                       std::to_string(p));
    }
    index += strides_[p] * static_cast<std::size_t>(profile[p]);
  }
  return index;
}

PureProfile StageGame::ProfileAt(std::size_t index) const {
  PureProfile profile(actions_.size());
  for (std::size_t p = 0; p < actions_.size(); ++p) {
    profile[p] = ActionOf(index, static_cast<int>(p));
  }
  return profile;
}

std::size_t StageGame::WithAction(std::size_t index, int player,
                                  int action) const {
  const int current = ActionOf(index, player);
  return index + strides_[player] * action - strides_[player] * current;
}

std::optional<int> StageGame::ActionIndex(int player,
                                          std::string_view label) const {
  if (player < 0 || player >= NumPlayers()) return std::nullopt;
  const auto& a = actions_[player];
  auto it = std::find(a.begin(), a.end(), label);
  if (it == a.end()) return std::nullopt;
  return static_cast<int>(it - a.begin());
}

std::optional<PureProfile> StageGame::ParseProfileLabel(
    std::string_view label) const {
  PureProfile out;
  std::size_t start = 0;
  for (int p = 0; p < NumPlayers(); ++p) {
    std::size_t end = label.find(',', start);
    const bool last = p + 1 == NumPlayers();
    if (last != (end == std::string_view::npos)) return std::nullopt;
    std::string_view part = label.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    auto a = ActionIndex(p, part);
    if (!a) return std::nullopt;
    out.push_back(*a);
    start = end + 1;
  }
  return out;
}

std::string StageGame::ProfileLabel(const PureProfile& profile) const {
  std::string out;
  for (std::size_t p = 0; p < profile.size(); ++p) {
    if (p) out += ',';
    out += actions_[p][profile[p]];
  }
  return out;
}

MixedProfile MixedProfile::Pure(const StageGame& g,
                                const PureProfile& profile) {
  MixedProfile m;
  m.dist.resize(g.NumPlayers());
  for (int p = 0; p < g.NumPlayers(); ++p) {
    m.dist[p].assign(g.NumActions(p), Rat(0));
    m.dist[p][profile[p]] = Rat(1);
  }
  return m;
}

std::optional<PureProfile> MixedProfile::AsPure() const {
  PureProfile out;
  for (const auto& d : dist) {
    auto it = std::find(d.begin(), d.end(), Rat(1));
    if (it == d.end()) return std::nullopt;
    out.push_back(static_cast<int>(it - d.begin()));
  }
  return out;
}

void CheckMixedProfile(const StageGame& g, const MixedProfile& m) {
  if (static_cast<int>(m.dist.size()) != g.NumPlayers()) {
    throw InputError("mixed profile has " + std::to_string(m.dist.size()) +
                     " players, stage game has " +
                     std::to_string(g.NumPlayers()));
  }
  for (int p = 0; p < g.NumPlayers(); ++p) {
    if (static_cast<int>(m.dist[p].size()) != g.NumActions(p)) {
      throw InputError("distribution of player " + std::to_string(p) +
                       " has wrong length");
    }
    Rat total(0);
    for (const Rat& w : m.dist[p]) {
      if (w.Sign() < 0) {
        throw InputError("negative weight for player " + std::to_string(p));
      }
      total += w;
    }
    if (total != Rat(1)) {
      throw InputError("weights of player " + std::to_string(p) +
                       " sum to " + total.ToString());
    }
  }
}

std::string FormatMixed(const StageGame& g, const MixedProfile& m) {
  std::ostringstream os;
  const char* sep = m.AsPure() ? "," : ", ";
  os << "(";
  for (int p = 0; p < g.NumPlayers(); ++p) {
    if (p) os << sep;
    bool first = true;
    for (int a = 0; a < g.NumActions(p); ++a) {
      const Rat& w = m.dist[p][a];
      if (w.IsZero()) continue;
      if (!first) os << " + ";
      first = false;
      if (w != Rat(1)) os << w << " ";
      os << g.Actions(p)[a];
    }
  }
  os << ")";
  return os.str();
}

namespace {

// Contracts the payoff tensor one player at a time, last player first.
// `fixed` optionally replaces one player's distribution by a pure action.
RatVector Contract(const StageGame& g, const MixedProfile& m, int fixed_player,
                   int fixed_action) {
  const int n = g.NumPlayers();
  std::vector<RatVector> layer(g.Payoffs().begin(), g.Payoffs().end());
  for (int p = n; p-- > 0;) {
    const int k = g.NumActions(p);
    std::vector<RatVector> next(layer.size() / k, RatVector(n, Rat(0)));
    for (std::size_t j = 0; j < next.size(); ++j) {
      for (int a = 0; a < k; ++a) {
        const Rat w = p == fixed_player ? Rat(a == fixed_action ? 1 : 0)
                                        : m.dist[p][a];
        if (w.IsZero()) continue;
        const RatVector& v = layer[j * k + a];
        for (int i = 0; i < n; ++i) next[j][i] += w * v[i];
      }
    }
    layer = std::move(next);
  }
  return layer.front();
}

}  // namespace

RatVector ExpectedStagePayoff(const StageGame& g, const MixedProfile& m) {
  CheckMixedProfile(g, m);
  return Contract(g, m, -1, -1);
}

Rat DeviationPayoff(const StageGame& g, const MixedProfile& m, int player,
                    int action) {
  CheckMixedProfile(g, m);
  if (player < 0 || player >= g.NumPlayers() || action < 0 ||
      action >= g.NumActions(player)) {
    throw InputError("deviation out of range");
  }
  return Contract(g, m, player, action)[player];
}

std::vector<std::pair<std::size_t, Rat>> SupportProfiles(
    const StageGame& g, const MixedProfile& m) {
  // Build in player order so the final list is sorted by profile index.
  std::vector<std::pair<PureProfile, Rat>> partial{{{}, Rat(1)}};
  for (int p = 0; p < g.NumPlayers(); ++p) {
    std::vector<std::pair<PureProfile, Rat>> next;
    for (const auto& [prefix, w] : partial) {
      for (int a = 0; a < g.NumActions(p); ++a) {
        if (m.dist[p][a].IsZero()) continue;
        PureProfile ext = prefix;
        ext.push_back(a);
        next.emplace_back(std::move(ext), w * m.dist[p][a]);
      }
    }
    partial = std::move(next);
  }
  std::vector<std::pair<std::size_t, Rat>> out;
  out.reserve(partial.size());
  for (auto& [profile, w] : partial) {
    out.emplace_back(g.ProfileIndex(profile), std::move(w));
  }
  return out;
}

MultiStageGame MultiStageGame::Finite(std::vector<std::string> players,
                                      Rat delta,
                                      std::vector<StageGame> stages) {
  MultiStageGame game;
  game.players = std::move(players);
  game.delta = std::move(delta);
  game.kind = HorizonKind::kFinite;
  game.stages = std::move(stages);
  return game;
}

MultiStageGame MultiStageGame::Infinite(std::vector<std::string> players,
                                        Rat delta,
                                        std::vector<StageGame> prefix,
                                        std::vector<StageGame> cycle) {
  MultiStageGame game;
  game.players = std::move(players);
  game.delta = std::move(delta);
  game.kind = HorizonKind::kInfinite;
  game.stages = std::move(prefix);
  game.cycle = std::move(cycle);
  return game;
}

const StageGame& MultiStageGame::StageAt(int time) const {
  if (time < 1) throw InputError("stage times start at 1");
  const auto t = static_cast<std::size_t>(time - 1);
  if (t < stages.size()) return stages[t];
  if (IsFinite() || cycle.empty()) {
    throw InputError("time " + std::to_string(time) + " beyond horizon");
  }
  return cycle[(t - stages.size()) % cycle.size()];
}

std::vector<std::pair<int, const StageGame*>> MultiStageGame::ScheduledStages()
    const {
  std::vector<std::pair<int, const StageGame*>> out;
  int t = 1;
  for (const auto& g : stages) out.emplace_back(t++, &g);
  if (!IsFinite()) {
    for (const auto& g : cycle) out.emplace_back(t++, &g);
  }
  return out;
}

std::string FormatHistory(const MultiStageGame& game, const History& h) {
  std::string out = "[";
  for (std::size_t t = 0; t < h.moves.size(); ++t) {
    if (t) out += " ";
    out += "(" + game.StageAt(static_cast<int>(t) + 1).ProfileLabel(h.moves[t]) +
           ")";
  }
  return out + "]";
}

std::string ValidationReport::Join() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport ValidateStageGame(const StageGame& g,
                                   std::string_view location) {
  ValidationReport report;
  const std::string where(location);
  if (g.NumPlayers() < 1) {
    report.violations.push_back(where + ": stage game has no players");
    return report;
  }
  for (int p = 0; p < g.NumPlayers(); ++p) {
    if (g.NumActions(p) == 0) {
      report.violations.push_back(where + ": player " + std::to_string(p) +
                                  " has no actions");
    }
    std::set<std::string> seen(g.Actions(p).begin(), g.Actions(p).end());
    if (seen.size() != g.Actions(p).size()) {
      report.violations.push_back(where + ": duplicate action label for player " +
                                  std::to_string(p));
    }
  }
  for (std::size_t i = 0; i < g.NumProfiles(); ++i) {
    if (static_cast<int>(g.Payoff(i).size()) != g.NumPlayers()) {
      report.violations.push_back(where + ": payoff map not total (profile " +
                                  g.ProfileLabel(i) + ")");
    }
  }
  return report;
}

ValidationReport ValidateGame(const MultiStageGame& game) {
  ValidationReport report;
  if (game.delta.Sign() < 0 || game.delta > Rat(1)) {
    report.violations.push_back("delta " + game.delta.ToString() +
                                " outside [0,1]");
  }
  if (!game.IsFinite() && game.delta == Rat(1)) {
    report.violations.push_back("infinite horizon requires delta < 1");
  }
  if (game.IsFinite() && game.stages.empty()) {
    report.violations.push_back("finite horizon has no stages");
  }
  if (!game.IsFinite() && game.cycle.empty()) {
    report.violations.push_back("infinite horizon has an empty cycle");
  }
  if (game.IsFinite() && !game.cycle.empty()) {
    report.violations.push_back("finite horizon cannot carry a cycle");
  }
  for (const auto& [time, stage] : game.ScheduledStages()) {
    const std::string where = "stage " + std::to_string(time);
    if (stage->NumPlayers() != game.NumPlayers()) {
      report.violations.push_back(where + ": mismatched player set (" +
                                  std::to_string(stage->NumPlayers()) +
                                  " players, game declares " +
                                  std::to_string(game.NumPlayers()) + ")");
      continue;
    }
    auto sub = ValidateStageGame(*stage, where);
    report.violations.insert(report.violations.end(), sub.violations.begin(),
                             sub.violations.end());
  }
  return report;
}

void RequireValid(const MultiStageGame& game) {
  auto report = ValidateGame(game);
  if (!report.ok()) throw InputError("invalid game: " + report.Join());
}

void RequireValid(const StageGame& g) {
  auto report = ValidateStageGame(g, "stage game");
  if (!report.ok()) throw InputError("invalid stage game: " + report.Join());
}

void CheckHistory(const MultiStageGame& game, const History& h) {
  if (game.IsFinite() && h.Time() > game.Horizon()) {
    throw InputError("history at time " + std::to_string(h.Time()) +
                     " is beyond the horizon " +
                     std::to_string(game.Horizon()));
  }
  for (std::size_t t = 0; t < h.moves.size(); ++t) {
    game.StageAt(static_cast<int>(t) + 1).ProfileIndex(h.moves[t]);
  }
}

bool SubgamesEquivalent(const MultiStageGame& game, const History& a,
                        const History& b) {
  CheckHistory(game, a);
  CheckHistory(game, b);
  return a.Time() == b.Time();
}

}  // namespace credible
