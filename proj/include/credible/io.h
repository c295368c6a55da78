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

#ifndef CREDIBLE_IO_H_
#define CREDIBLE_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "credible/automaton.h"
#include "credible/behavior.h"
#include "credible/game.h"
#include "credible/perfect_info.h"

namespace credible {

using Json = nlohmann::ordered_json;

// Reads and parses a JSON document; InputError carries the path and the
// parser's byte offset on failure.
Json ReadJsonFile(const std::filesystem::path& path);
void WriteJsonFile(const std::filesystem::path& path, const Json& j);

// Accepts a rational as a string ("3/4", "-2") or a JSON integer.
Rat RatFromJson(const Json& j, const std::string& where);

// Game file:
//   {"players": [...], "delta": "a/b",
//    "horizon": {"kind": "finite", "stages": [stage...]}
//             | {"kind": "infinite", "prefix": [...], "cycle": [...]},
//    "stage_games": {name: stage}}            (optional)
// A stage is {"actions": [[labels]...], "payoffs": nested array} with the
// payoff array indexed player-major and ending in per-player rationals. A
// stage entry may also be the name of a "stage_games" entry.
//
// Missing payoff entries (null) parse into an incomplete game so that
// ValidateGame can report them; structural errors throw InputError.
MultiStageGame ParseGame(const Json& j);
Json GameToJson(const MultiStageGame& game);
StageGame ParseStageGame(const Json& j, const std::string& where);
Json StageGameToJson(const StageGame& g);

// Per-player weight maps; a bare label stands for that pure action.
MixedProfile ParseMixed(const StageGame& g, const Json& j,
                        const std::string& where);
Json MixedToJson(const StageGame& g, const MixedProfile& m);

// Profile file: a list of {"time", "history": [[labels]...], "play"}. The
// list must cover every history of the game exactly once.
BehaviorProfile ParseProfile(const MultiStageGame& game, const Json& j);
Json ProfileToJson(const MultiStageGame& game, const BehaviorProfile& p);
Json OpenLoopToJson(const MultiStageGame& game, const OpenLoopProfile& p);

// Automaton file: {"automata": [player...]} or a bare list, one entry per
// player: {"preset": name} or {"states", "initial", "output": {state:
// weights}, "transition": {state: {"a,b": state, "*": default}}}.
AutomatonProfile ParseAutomata(const StageGame& g, const Json& j);
Json AutomataToJson(const StageGame& g, const AutomatonProfile& profile);

// Tree file: {"players": [...], "root": node} or a bare node, where a node
// is {"player": index or name, "moves": {label: node}} or
// {"payoffs": [...]}.
struct ParsedTree {
  GameTree tree;
  std::vector<std::string> player_names;
};
ParsedTree ParseTree(const Json& j);
Json TreeToJson(const GameTree& tree,
                const std::vector<std::string>& player_names = {});

// Strategy file: {"path/to/node": "label", ...} with "" for the root,
// optionally wrapped as {"choices": {...}}.
TreeStrategy ParseTreeStrategy(const GameTree& tree, const Json& j);
Json TreeStrategyToJson(const GameTree& tree, const TreeStrategy& s);

}  // namespace credible

#endif  // CREDIBLE_IO_H_
