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

#ifndef CREDIBLE_VERDICT_H_
#define CREDIBLE_VERDICT_H_

#include <string>
#include <vector>

#include "json.hpp"

#include "credible/rational.h"

namespace credible {

enum class WitnessKind { kNashFailure, kCredibilityFailure };

std::string ToString(WitnessKind kind);

// Evidence for one violated condition.
//
// Nash failures: `location` is where the deviation happens, `action` the
// improving action, `value` the prescribed payoff and `other_value` the
// deviation payoff.
//
// Credibility failures: `location` and `other_location` are the two
// equivalent subgames in which `player` behaves differently, with payoffs
// `value` and `other_value`.
//
// Locations are lists of labels whose meaning depends on `scope`: "history"
// (one "a,b" profile per elapsed stage), "joint-state" (one state name per
// player) or "node" (edge labels from the root).
struct Witness {
  WitnessKind kind = WitnessKind::kNashFailure;
  std::string scope;
  int player = 0;
  int time = 0;
  std::vector<std::string> location;
  std::vector<std::string> other_location;
  std::string action;
  Rat value;
  Rat other_value;
  std::string detail;

  Rat Gain() const { return other_value - value; }
};

struct Verdict {
  bool pass = true;
  std::vector<Witness> witnesses;

  void Add(Witness w) {
    pass = false;
    witnesses.push_back(std::move(w));
  }
  void Merge(const Verdict& other) {
    for (const auto& w : other.witnesses) Add(w);
  }
};

nlohmann::ordered_json ToJson(const Witness& w);
nlohmann::ordered_json ToJson(const Verdict& v);
std::string FormatLocation(const std::vector<std::string>& location,
                           const std::string& scope);
std::string FormatWitness(const Witness& w,
                          const std::vector<std::string>& player_names);

}  // namespace credible

#endif  // CREDIBLE_VERDICT_H_
