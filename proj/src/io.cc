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

#include "credible/io.h"

#include <fstream>
#include <map>
#include <sstream>

#include "credible/errors.h"

namespace credible {

namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& Field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) Fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string StringFrom(const Json& j, const std::string& where) {
  if (!j.is_string()) Fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> Labels(const Json& j, const std::string& where) {
  if (!j.is_array()) Fail(where, "expected a list of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(StringFrom(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string JoinPath(const std::vector<std::string>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += "/";
    out += path[i];
  }
  return out;
}

std::vector<std::string> SplitPath(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto end = s.find('/', start);
    out.push_back(s.substr(start, end == std::string::npos ? end : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void WriteJsonFile(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << j.dump(2) << "\n";
}

Rat RatFromJson(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rat::Parse(j.get<std::string>());
    } catch (const InputError& e) {
      Fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<long>());
  Fail(where, "expected a rational string such as \"3/4\"");
}

StageGame ParseStageGame(const Json& j, const std::string& where) {
  const Json& actions_json = Field(j, "actions", where);
  if (!actions_json.is_array() || actions_json.empty()) {
    Fail(where + ".actions", "expected a nonempty list of per-player lists");
  }
  std::vector<std::vector<std::string>> actions;
  for (std::size_t p = 0; p < actions_json.size(); ++p) {
    actions.push_back(Labels(actions_json[p], where + ".actions[" +
                                                  std::to_string(p) + "]"));
  }
  const int n = static_cast<int>(actions.size());
  StageGame shell(actions, {});
  std::vector<RatVector> payoffs(shell.NumProfiles());

  PureProfile profile(n, 0);
  std::function<void(const Json&, int, const std::string&)> walk =
      [&](const Json& node, int depth, const std::string& at) {
        if (depth == n) {
          if (node.is_null()) return;  // missing entry
          if (!node.is_array() || static_cast<int>(node.size()) != n) {
            Fail(at, "expected a vector of " + std::to_string(n) +
                         " payoffs");
          }
          RatVector v;
          for (int i = 0; i < n; ++i) {
            v.push_back(RatFromJson(node[i], at + "[" + std::to_string(i) + "]"));
          }
          payoffs[shell.ProfileIndex(profile)] = std::move(v);
          return;
        }
        if (node.is_null()) return;
        if (!node.is_array()) Fail(at, "expected a nested payoff array");
        if (node.size() > actions[depth].size()) {
          Fail(at, "more entries than player " + std::to_string(depth) +
                       " has actions");
        }
        // Shorter arrays leave the remaining profiles missing.
        for (std::size_t a = 0; a < node.size(); ++a) {
          profile[depth] = static_cast<int>(a);
          walk(node[a], depth + 1, at + "[" + std::to_string(a) + "]");
        }
      };
  walk(Field(j, "payoffs", where), 0, where + ".payoffs");
  return StageGame(std::move(actions), std::move(payoffs));
}

Json StageGameToJson(const StageGame& g) {
  Json j;
  j["actions"] = g.AllActions();
  const int n = g.NumPlayers();
  std::function<Json(std::size_t, int)> build = [&](std::size_t base,
                                                    int depth) -> Json {
    if (depth == n) {
      Json v = Json::array();
      if (g.Payoff(base).empty()) return nullptr;
      for (const Rat& r : g.Payoff(base)) v.push_back(r.ToString());
      return v;
    }
    Json arr = Json::array();
    for (int a = 0; a < g.NumActions(depth); ++a) {
      arr.push_back(build(g.WithAction(base, depth, a), depth + 1));
    }
    return arr;
  };
  j["payoffs"] = build(0, 0);
  return j;
}

MultiStageGame ParseGame(const Json& j) {
  const std::string where = "game";
  std::vector<std::string> players =
      Labels(Field(j, "players", where), "game.players");
  Rat delta = RatFromJson(Field(j, "delta", where), "game.delta");

  std::map<std::string, StageGame> named;
  if (j.contains("stage_games")) {
    const Json& sg = j["stage_games"];
    if (!sg.is_object()) Fail("game.stage_games", "expected an object");
    for (const auto& [name, stage] : sg.items()) {
      named.emplace(name, ParseStageGame(stage, "game.stage_games." + name));
    }
  }
  auto stage_list = [&](const Json& list, const std::string& at) {
    if (!list.is_array()) Fail(at, "expected a list of stage games");
    std::vector<StageGame> out;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string here = at + "[" + std::to_string(k) + "]";
      if (list[k].is_string()) {
        auto it = named.find(list[k].get<std::string>());
        if (it == named.end()) Fail(here, "unknown stage game name");
        out.push_back(it->second);
      } else {
        out.push_back(ParseStageGame(list[k], here));
      }
    }
    return out;
  };

  const Json& horizon = Field(j, "horizon", where);
  const std::string kind = StringFrom(Field(horizon, "kind", "game.horizon"),
                                      "game.horizon.kind");
  if (kind == "finite") {
    return MultiStageGame::Finite(
        std::move(players), std::move(delta),
        stage_list(Field(horizon, "stages", "game.horizon"),
                   "game.horizon.stages"));
  }
  if (kind == "infinite") {
    std::vector<StageGame> prefix;
    if (horizon.contains("prefix")) {
      prefix = stage_list(horizon["prefix"], "game.horizon.prefix");
    }
    return MultiStageGame::Infinite(
        std::move(players), std::move(delta), std::move(prefix),
        stage_list(Field(horizon, "cycle", "game.horizon"),
                   "game.horizon.cycle"));
  }
  Fail("game.horizon.kind", "expected \"finite\" or \"infinite\"");
}

Json GameToJson(const MultiStageGame& game) {
  Json j;
  j["players"] = game.players;
  j["delta"] = game.delta.ToString();
  Json horizon;
  auto list = [](const std::vector<StageGame>& stages) {
    Json arr = Json::array();
    for (const auto& g : stages) arr.push_back(StageGameToJson(g));
    return arr;
  };
  if (game.IsFinite()) {
    horizon["kind"] = "finite";
    horizon["stages"] = list(game.stages);
  } else {
    horizon["kind"] = "infinite";
    horizon["prefix"] = list(game.stages);
    horizon["cycle"] = list(game.cycle);
  }
  j["horizon"] = std::move(horizon);
  return j;
}

MixedProfile ParseMixed(const StageGame& g, const Json& j,
                        const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != g.NumPlayers()) {
    Fail(where, "expected one weight map per player");
  }
  MixedProfile m;
  for (int p = 0; p < g.NumPlayers(); ++p) {
    const std::string at = where + "[" + std::to_string(p) + "]";
    RatVector d(g.NumActions(p), Rat(0));
    if (j[p].is_string()) {
      auto a = g.ActionIndex(p, j[p].get<std::string>());
      if (!a) Fail(at, "unknown action '" + j[p].get<std::string>() + "'");
      d[*a] = Rat(1);
    } else if (j[p].is_object()) {
      for (const auto& [label, w] : j[p].items()) {
        auto a = g.ActionIndex(p, label);
        if (!a) Fail(at, "unknown action '" + label + "'");
        d[*a] = RatFromJson(w, at + "." + label);
      }
    } else {
      Fail(at, "expected an action label or a weight map");
    }
    m.dist.push_back(std::move(d));
  }
  try {
    CheckMixedProfile(g, m);
  } catch (const InputError& e) {
    Fail(where, e.what());
  }
  return m;
}

Json MixedToJson(const StageGame& g, const MixedProfile& m) {
  Json arr = Json::array();
  for (int p = 0; p < g.NumPlayers(); ++p) {
    Json weights = Json::object();
    for (int a = 0; a < g.NumActions(p); ++a) {
      if (!m.dist[p][a].IsZero()) {
        weights[g.Actions(p)[a]] = m.dist[p][a].ToString();
      }
    }
    arr.push_back(std::move(weights));
  }
  return arr;
}

BehaviorProfile ParseProfile(const MultiStageGame& game, const Json& j) {
  HistoryTree tree(game);
  const Json& list = j.is_object() && j.contains("profile") ? j["profile"] : j;
  if (!list.is_array()) Fail("profile", "expected a list of entries");
  std::vector<std::vector<std::optional<MixedProfile>>> slots(tree.Horizon());
  for (int t = 1; t <= tree.Horizon(); ++t) {
    slots[t - 1].resize(tree.LevelSize(t));
  }
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = "profile[" + std::to_string(k) + "]";
    const Json& e = list[k];
    const Json& hist = Field(e, "history", at);
    if (!hist.is_array()) Fail(at + ".history", "expected a list of profiles");
    History h;
    for (std::size_t s = 0; s < hist.size(); ++s) {
      const std::string hat = at + ".history[" + std::to_string(s) + "]";
      const int time = static_cast<int>(s) + 1;
      if (time > game.Horizon()) Fail(hat, "history longer than the horizon");
      const StageGame& g = game.StageAt(time);
      std::optional<PureProfile> profile;
      if (hist[s].is_string()) {
        profile = g.ParseProfileLabel(hist[s].get<std::string>());
      } else if (hist[s].is_array() &&
                 static_cast<int>(hist[s].size()) == g.NumPlayers()) {
        PureProfile pp;
        for (int p = 0; p < g.NumPlayers(); ++p) {
          auto a = hist[s][p].is_string()
                       ? g.ActionIndex(p, hist[s][p].get<std::string>())
                       : std::nullopt;
          if (!a) break;
          pp.push_back(*a);
        }
        if (static_cast<int>(pp.size()) == g.NumPlayers()) profile = pp;
      }
      if (!profile) Fail(hat, "not a pure profile of stage " +
                                  std::to_string(time));
      h.moves.push_back(*profile);
    }
    if (e.contains("time") &&
        (!e["time"].is_number_integer() || e["time"].get<int>() != h.Time())) {
      Fail(at + ".time", "does not match the history length");
    }
    const std::size_t index = tree.IndexOf(h);
    auto& slot = slots[h.Time() - 1][index];
    if (slot) Fail(at, "duplicate entry for history " + FormatHistory(game, h));
    slot = ParseMixed(game.StageAt(h.Time()), Field(e, "play", at),
                      at + ".play");
  }
  BehaviorProfile p;
  p.levels.resize(tree.Horizon());
  for (int t = 1; t <= tree.Horizon(); ++t) {
    for (std::size_t i = 0; i < slots[t - 1].size(); ++i) {
      if (!slots[t - 1][i]) {
        Fail("profile", "no entry for history " +
                            FormatHistory(game, tree.HistoryAt(t, i)) +
                            " (profiles must be total)");
      }
      p.levels[t - 1].push_back(std::move(*slots[t - 1][i]));
    }
  }
  return p;
}

Json ProfileToJson(const MultiStageGame& game, const BehaviorProfile& p) {
  HistoryTree tree(game);
  Json list = Json::array();
  for (int t = 1; t <= tree.Horizon(); ++t) {
    for (std::size_t i = 0; i < tree.LevelSize(t); ++i) {
      Json e;
      e["time"] = t;
      Json hist = Json::array();
      const History h = tree.HistoryAt(t, i);
      for (std::size_t s = 0; s < h.moves.size(); ++s) {
        const StageGame& g = game.StageAt(static_cast<int>(s) + 1);
        Json labels = Json::array();
        for (int pl = 0; pl < g.NumPlayers(); ++pl) {
          labels.push_back(g.Actions(pl)[h.moves[s][pl]]);
        }
        hist.push_back(std::move(labels));
      }
      e["history"] = std::move(hist);
      e["play"] = MixedToJson(game.StageAt(t), p.At(t, i));
      list.push_back(std::move(e));
    }
  }
  return list;
}

Json OpenLoopToJson(const MultiStageGame& game, const OpenLoopProfile& p) {
  Json j;
  auto list = [&](const std::vector<MixedProfile>& ms, int first_time) {
    Json arr = Json::array();
    for (std::size_t k = 0; k < ms.size(); ++k) {
      arr.push_back(MixedToJson(
          game.StageAt(first_time + static_cast<int>(k)), ms[k]));
    }
    return arr;
  };
  j["prefix"] = list(p.prefix, 1);
  if (!game.IsFinite()) {
    j["cycle"] = list(p.cycle, static_cast<int>(p.prefix.size()) + 1);
  }
  return j;
}

AutomatonProfile ParseAutomata(const StageGame& g, const Json& j) {
  const Json& list = j.is_object() ? Field(j, "automata", "automata") : j;
  if (!list.is_array() || static_cast<int>(list.size()) != g.NumPlayers()) {
    Fail("automata", "expected one automaton per player");
  }
  AutomatonProfile profile;
  for (int p = 0; p < g.NumPlayers(); ++p) {
    const std::string at = "automata[" + std::to_string(p) + "]";
    const Json& e = list[p];
    if (e.is_string() || (e.is_object() && e.contains("preset"))) {
      const std::string name =
          e.is_string() ? e.get<std::string>()
                        : StringFrom(e["preset"], at + ".preset");
      try {
        profile.push_back(PresetAutomaton(name, g, p));
      } catch (const InputError& err) {
        Fail(at, err.what());
      }
      continue;
    }
    PlayerAutomaton m;
    m.states = Labels(Field(e, "states", at), at + ".states");
    std::map<std::string, int> index;
    for (std::size_t s = 0; s < m.states.size(); ++s) {
      if (!index.emplace(m.states[s], static_cast<int>(s)).second) {
        Fail(at + ".states", "duplicate state '" + m.states[s] + "'");
      }
    }
    auto state_of = [&](const Json& v, const std::string& where) {
      auto it = index.find(StringFrom(v, where));
      if (it == index.end()) Fail(where, "unknown state");
      return it->second;
    };
    m.initial = state_of(Field(e, "initial", at), at + ".initial");
    const Json& output = Field(e, "output", at);
    const Json& transition = Field(e, "transition", at);
    for (const auto& state : m.states) {
      const std::string oat = at + ".output." + state;
      const Json& o = Field(output, state.c_str(), at + ".output");
      RatVector d(g.NumActions(p), Rat(0));
      if (o.is_string()) {
        auto a = g.ActionIndex(p, o.get<std::string>());
        if (!a) Fail(oat, "unknown action");
        d[*a] = Rat(1);
      } else if (o.is_object()) {
        for (const auto& [label, w] : o.items()) {
          auto a = g.ActionIndex(p, label);
          if (!a) Fail(oat, "unknown action '" + label + "'");
          d[*a] = RatFromJson(w, oat + "." + label);
        }
      } else {
        Fail(oat, "expected an action label or weight map");
      }
      m.output.push_back(std::move(d));

      const std::string tat = at + ".transition." + state;
      const Json& tr = Field(transition, state.c_str(), at + ".transition");
      if (!tr.is_object()) Fail(tat, "expected a map from joint actions");
      std::vector<int> next(g.NumProfiles(), -1);
      if (tr.contains("*")) {
        std::fill(next.begin(), next.end(), state_of(tr["*"], tat + ".*"));
      }
      for (const auto& [label, target] : tr.items()) {
        if (label == "*") continue;
        auto pp = g.ParseProfileLabel(label);
        if (!pp) Fail(tat, "unknown joint action '" + label + "'");
        next[g.ProfileIndex(*pp)] = state_of(target, tat + "." + label);
      }
      for (std::size_t b = 0; b < next.size(); ++b) {
        if (next[b] < 0) {
          Fail(tat, "no transition for joint action '" + g.ProfileLabel(b) +
                        "'");
        }
      }
      m.transition.push_back(std::move(next));
    }
    profile.push_back(std::move(m));
  }
  try {
    CheckAutomata(g, profile);
  } catch (const InputError& e) {
    Fail("automata", e.what());
  }
  return profile;
}

Json AutomataToJson(const StageGame& g, const AutomatonProfile& profile) {
  Json list = Json::array();
  for (int p = 0; p < g.NumPlayers(); ++p) {
    const PlayerAutomaton& m = profile[p];
    Json e;
    e["states"] = m.states;
    e["initial"] = m.states[m.initial];
    Json output = Json::object(), transition = Json::object();
    for (int s = 0; s < m.NumStates(); ++s) {
      Json w = Json::object();
      for (int a = 0; a < g.NumActions(p); ++a) {
        if (!m.output[s][a].IsZero()) {
          w[g.Actions(p)[a]] = m.output[s][a].ToString();
        }
      }
      output[m.states[s]] = std::move(w);
      Json t = Json::object();
      for (std::size_t b = 0; b < g.NumProfiles(); ++b) {
        t[g.ProfileLabel(b)] = m.states[m.transition[s][b]];
      }
      transition[m.states[s]] = std::move(t);
    }
    e["output"] = std::move(output);
    e["transition"] = std::move(transition);
    list.push_back(std::move(e));
  }
  Json j;
  j["automata"] = std::move(list);
  return j;
}

ParsedTree ParseTree(const Json& j) {
  ParsedTree out;
  const Json* root = &j;
  if (j.is_object() && j.contains("root")) {
    if (j.contains("players")) {
      out.player_names = Labels(j["players"], "tree.players");
    }
    root = &j["root"];
  }
  int num_players = static_cast<int>(out.player_names.size());
  std::function<int(const Json&, const std::string&)> build =
      [&](const Json& node, const std::string& at) -> int {
    if (!node.is_object()) Fail(at, "expected a node object");
    if (node.contains("payoffs")) {
      const Json& pay = node["payoffs"];
      if (!pay.is_array() || pay.empty()) Fail(at, "expected payoffs");
      RatVector v;
      for (std::size_t i = 0; i < pay.size(); ++i) {
        v.push_back(RatFromJson(pay[i], at + ".payoffs[" +
                                            std::to_string(i) + "]"));
      }
      if (num_players == 0) num_players = static_cast<int>(v.size());
      return out.tree.AddLeaf(std::move(v));
    }
    const Json& pj = Field(node, "player", at);
    int player = -1;
    if (pj.is_number_integer()) {
      player = pj.get<int>();
    } else if (pj.is_string()) {
      for (std::size_t k = 0; k < out.player_names.size(); ++k) {
        if (out.player_names[k] == pj.get<std::string>()) {
          player = static_cast<int>(k);
        }
      }
      if (player < 0) Fail(at + ".player", "unknown player name");
    } else {
      Fail(at + ".player", "expected a player index or name");
    }
    const Json& moves = Field(node, "moves", at);
    if (!moves.is_object() || moves.empty()) {
      Fail(at + ".moves", "expected a nonempty map label -> node");
    }
    std::vector<std::pair<std::string, int>> edges;
    for (const auto& [label, child] : moves.items()) {
      edges.emplace_back(label, build(child, at + "/" + label));
    }
    return out.tree.AddDecision(player, std::move(edges));
  };
  const int root_id = build(*root, "tree");
  out.tree.SetNumPlayers(num_players);
  out.tree.SetRoot(root_id);
  out.tree.Validate();
  return out;
}

Json TreeToJson(const GameTree& tree,
                const std::vector<std::string>& player_names) {
  std::function<Json(int)> node = [&](int id) -> Json {
    const TreeNode& n = tree.Node(id);
    Json j;
    if (n.IsLeaf()) {
      Json pay = Json::array();
      for (const Rat& r : n.payoffs) pay.push_back(r.ToString());
      j["payoffs"] = std::move(pay);
      return j;
    }
    if (n.player < static_cast<int>(player_names.size())) {
      j["player"] = player_names[n.player];
    } else {
      j["player"] = n.player;
    }
    Json moves = Json::object();
    for (std::size_t k = 0; k < n.children.size(); ++k) {
      moves[n.labels[k]] = node(n.children[k]);
    }
    j["moves"] = std::move(moves);
    return j;
  };
  if (player_names.empty()) return node(tree.Root());
  Json j;
  j["players"] = player_names;
  j["root"] = node(tree.Root());
  return j;
}

TreeStrategy ParseTreeStrategy(const GameTree& tree, const Json& j) {
  const Json& map = j.is_object() && j.contains("choices") ? j["choices"] : j;
  if (!map.is_object()) Fail("strategy", "expected a map path -> label");
  TreeStrategy s;
  s.choice.assign(tree.NumNodes(), -1);
  for (const auto& [path, label] : map.items()) {
    const std::string at = "strategy[\"" + path + "\"]";
    auto id = tree.Find(SplitPath(path));
    if (!id) Fail(at, "no such node");
    const TreeNode& n = tree.Node(*id);
    if (n.IsLeaf()) Fail(at, "node is a leaf");
    const std::string l = StringFrom(label, at);
    auto it = std::find(n.labels.begin(), n.labels.end(), l);
    if (it == n.labels.end()) Fail(at, "unknown move '" + l + "'");
    s.choice[*id] = static_cast<int>(it - n.labels.begin());
  }
  for (int id : tree.DecisionNodes()) {
    if (s.choice[id] < 0) {
      Fail("strategy", "no choice at node \"" + JoinPath(tree.Path(id)) + "\"");
    }
  }
  return s;
}

Json TreeStrategyToJson(const GameTree& tree, const TreeStrategy& s) {
  Json j = Json::object();
  for (int id : tree.DecisionNodes()) {
    j[JoinPath(tree.Path(id))] = tree.Node(id).labels[s.choice[id]];
  }
  return j;
}

}  // namespace credible
