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

#include "credible/verdict.h"

#include <sstream>

namespace credible {

std::string ToString(WitnessKind kind) {
  return kind == WitnessKind::kNashFailure ? "NashFailure"
                                           : "CredibilityFailure";
}

nlohmann::ordered_json ToJson(const Witness& w) {
  nlohmann::ordered_json j;
  j["kind"] = ToString(w.kind);
  j["scope"] = w.scope;
  j["player"] = w.player;
  if (w.time > 0) j["time"] = w.time;
  j["location"] = w.location;
  if (w.kind == WitnessKind::kCredibilityFailure) {
    j["other_location"] = w.other_location;
  } else {
    j["action"] = w.action;
  }
  j["payoffs"] = {w.value.ToString(), w.other_value.ToString()};
  if (w.kind == WitnessKind::kNashFailure) j["gain"] = w.Gain().ToString();
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

nlohmann::ordered_json ToJson(const Verdict& v) {
  nlohmann::ordered_json j;
  j["pass"] = v.pass;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : v.witnesses) j["witnesses"].push_back(ToJson(w));
  return j;
}

std::string FormatLocation(const std::vector<std::string>& location,
                           const std::string& scope) {
  std::string out = "[";
  for (std::size_t i = 0; i < location.size(); ++i) {
    if (i) out += scope == "node" ? "/" : " ";
    out += scope == "history" ? "(" + location[i] + ")" : location[i];
  }
  return out + "]";
}

std::string FormatWitness(const Witness& w,
                          const std::vector<std::string>& player_names) {
  std::ostringstream os;
  const std::string who =
      w.player >= 0 && w.player < static_cast<int>(player_names.size())
          ? player_names[w.player]
          : "player " + std::to_string(w.player);
  if (w.kind == WitnessKind::kNashFailure) {
    os << "NashFailure: " << who;
    if (w.scope != "stage") {
      os << " at " << w.scope << " " << FormatLocation(w.location, w.scope);
    }
    os << " deviates to " << w.action
       << ": " << w.value << " -> " << w.other_value << " (gain " << w.Gain()
       << ")";
  } else {
    os << "CredibilityFailure: " << who << " behaves differently at "
       << (w.scope == "history" ? std::string("histories") : w.scope + "s")
       << " " << FormatLocation(w.location, w.scope) << " and "
       << FormatLocation(w.other_location, w.scope) << " but payoffs differ: "
       << w.value << " vs " << w.other_value;
  }
  if (!w.detail.empty()) os << " [" << w.detail << "]";
  return os.str();
}

}  // namespace credible
