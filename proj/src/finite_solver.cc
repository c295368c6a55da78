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

#include "credible/finite_solver.h"

#include <algorithm>
#include <map>
#include <utility>

#include "credible/errors.h"

namespace credible {

namespace {

// Stage game at history (time, index) whose payoffs include the discounted
// continuation value of the profile: u_t(b) + delta * V(child(b)).
StageGame AugmentedStage(const HistoryTree& tree, const SubgameValues& values,
                         int time, std::size_t index) {
  const StageGame& g = tree.Stage(time);
  if (time == tree.Horizon()) return g;
  const Rat& delta = tree.game().delta;
  std::vector<RatVector> payoffs(g.NumProfiles());
  for (std::size_t b = 0; b < g.NumProfiles(); ++b) {
    const RatVector& cont = values.At(time + 1, tree.Child(time, index, b));
    payoffs[b] = g.Payoff(b);
    for (int i = 0; i < g.NumPlayers(); ++i) payoffs[b][i] += delta * cont[i];
  }
  return StageGame(g.AllActions(), std::move(payoffs));
}

Verdict SpneSweep(const HistoryTree& tree, const BehaviorProfile& p,
                  const SubgameValues& values, Exec exec) {
  Verdict verdict;
  for (int t = 1; t <= tree.Horizon(); ++t) {
    std::vector<Verdict> slots(tree.LevelSize(t));
    ForEachIndex(slots.size(), exec, [&](std::size_t i) {
      const StageGame aug = AugmentedStage(tree, values, t, i);
      Verdict local = IsNash(aug, p.At(t, i));
      for (auto& w : local.witnesses) {
        w.scope = "history";
        w.time = t;
        w.location = tree.Labels(t, i);
        w.detail = "prescribed " + FormatMixed(aug, p.At(t, i));
      }
      slots[i] = std::move(local);
    });
    for (const auto& v : slots) verdict.Merge(v);
  }
  return verdict;
}

}  // namespace

Verdict VerifySpne(const MultiStageGame& game, const BehaviorProfile& p,
                   const SolverCaps& caps, Exec exec) {
  HistoryTree tree(game, caps.nodes);
  const SubgameValues values = ComputeSubgameValues(tree, p, exec);
  return SpneSweep(tree, p, values, exec);
}

std::vector<std::vector<std::vector<int>>> RestrictionClasses(
    const HistoryTree& tree, const BehaviorProfile& p) {
  const int n = tree.game().NumPlayers();
  const int horizon = tree.Horizon();
  std::vector<std::vector<std::vector<int>>> classes(
      n, std::vector<std::vector<int>>(horizon));
  for (int player = 0; player < n; ++player) {
    for (int t = horizon; t >= 1; --t) {
      const std::size_t profiles = tree.Stage(t).NumProfiles();
      std::map<std::pair<RatVector, std::vector<int>>, int> intern;
      auto& ids = classes[player][t - 1];
      ids.resize(tree.LevelSize(t));
      for (std::size_t i = 0; i < ids.size(); ++i) {
        std::vector<int> children;
        if (t < horizon) {
          const auto& next = classes[player][t];
          children.reserve(profiles);
          for (std::size_t b = 0; b < profiles; ++b) {
            children.push_back(next[tree.Child(t, i, b)]);
          }
        }
        auto key = std::make_pair(p.At(t, i).dist[player], std::move(children));
        auto [it, inserted] =
            intern.emplace(std::move(key), static_cast<int>(intern.size()));
        ids[i] = it->second;
      }
    }
  }
  return classes;
}

Verdict CheckCredibilityCondition(const HistoryTree& tree,
                                  const BehaviorProfile& p,
                                  const SubgameValues& values) {
  Verdict verdict;
  const auto classes = RestrictionClasses(tree, p);
  const int n = tree.game().NumPlayers();
  for (int t = 2; t <= tree.Horizon(); ++t) {
    const std::size_t size = tree.LevelSize(t);
    for (int player = 0; player < n; ++player) {
      const auto& ids = classes[player][t - 1];
      // With two or more restriction classes the condition forces every
      // history of this time to carry the same payoff for the player.
      bool single_class = true, equal_values = true;
      for (std::size_t i = 1; i < size; ++i) {
        single_class &= ids[i] == ids[0];
        equal_values &= values.At(t, i)[player] == values.At(t, 0)[player];
      }
      if (single_class || equal_values) continue;
      bool found = false;
      for (std::size_t a = 0; a < size && !found; ++a) {
        for (std::size_t b = a + 1; b < size && !found; ++b) {
          if (ids[a] == ids[b]) continue;
          const Rat& ua = values.At(t, a)[player];
          const Rat& ub = values.At(t, b)[player];
          if (ua == ub) continue;
          Witness w;
          w.kind = WitnessKind::kCredibilityFailure;
          w.scope = "history";
          w.player = player;
          w.time = t;
          w.location = tree.Labels(t, a);
          w.other_location = tree.Labels(t, b);
          w.value = ua;
          w.other_value = ub;
          verdict.Add(std::move(w));
          found = true;
        }
      }
    }
  }
  return verdict;
}

Verdict VerifyCredible(const MultiStageGame& game, const BehaviorProfile& p,
                       const SolverCaps& caps, Exec exec) {
  HistoryTree tree(game, caps.nodes);
  const SubgameValues values = ComputeSubgameValues(tree, p, exec);
  Verdict verdict = SpneSweep(tree, p, values, exec);
  verdict.Merge(CheckCredibilityCondition(tree, p, values));
  return verdict;
}

namespace {

// A subgame-perfect pure strategy profile of the subgame starting at some
// time t, shared by all histories of that time.
struct ContinuationObject {
  std::uint32_t profile = 0;
  std::vector<std::uint32_t> selector;  // object index at t + 1 per profile
  RatVector value;
};

std::size_t SaturatingMul(std::size_t a, std::size_t b, std::size_t limit) {
  if (a == 0 || b == 0) return 0;
  if (a > limit / b) return limit + 1;
  return std::min(a * b, limit + 1);
}

struct CandidateSets {
  std::uint32_t profile;
  std::uint32_t on_path;
  RatVector value;
  std::vector<std::vector<std::uint32_t>> allowed;  // per stage profile
  std::size_t count;
};

// All (profile, selector) objects at `time` given the objects at time + 1.
std::vector<ContinuationObject> ExtendLevel(
    const StageGame& g, const Rat& delta,
    const std::vector<ContinuationObject>& next, std::size_t cap, Exec exec,
    bool* truncated) {
  const std::size_t profiles = g.NumProfiles();
  const int n = g.NumPlayers();
  std::vector<std::vector<CandidateSets>> per_profile(profiles);
  ForEachIndex(profiles, exec, [&](std::size_t a) {
    for (std::uint32_t c = 0; c < next.size(); ++c) {
      CandidateSets sets;
      sets.profile = static_cast<std::uint32_t>(a);
      sets.on_path = c;
      sets.value = g.Payoff(a);
      for (int i = 0; i < n; ++i) sets.value[i] += delta * next[c].value[i];
      sets.allowed.resize(profiles);
      sets.count = 1;
      for (std::size_t b = 0; b < profiles; ++b) {
        auto& allowed = sets.allowed[b];
        int deviator = -1, differing = 0;
        for (int i = 0; i < n; ++i) {
          if (g.ActionOf(a, i) != g.ActionOf(b, i)) {
            deviator = i;
            ++differing;
          }
        }
        if (b == a) {
          allowed = {c};
        } else if (differing == 1) {
          const Rat& stage = g.Payoff(b)[deviator];
          for (std::uint32_t o = 0; o < next.size(); ++o) {
            if (stage + delta * next[o].value[deviator] <=
                sets.value[deviator]) {
              allowed.push_back(o);
            }
          }
        } else {
          allowed.resize(next.size());
          for (std::uint32_t o = 0; o < next.size(); ++o) allowed[o] = o;
        }
        sets.count = SaturatingMul(sets.count, allowed.size(), cap);
      }
      if (sets.count > 0) per_profile[a].push_back(std::move(sets));
    }
  });

  std::size_t total = 0;
  for (const auto& list : per_profile) {
    for (const auto& s : list) total = std::min(total + s.count, cap + 1);
  }
  if (total > cap) {
    *truncated = true;
    return {};
  }

  std::vector<ContinuationObject> out;
  out.reserve(total);
  for (const auto& list : per_profile) {
    for (const auto& s : list) {
      std::vector<std::size_t> digit(profiles, 0);
      while (true) {
        ContinuationObject obj;
        obj.profile = s.profile;
        obj.value = s.value;
        obj.selector.resize(profiles);
        for (std::size_t b = 0; b < profiles; ++b) {
          obj.selector[b] = s.allowed[b][digit[b]];
        }
        out.push_back(std::move(obj));
        std::size_t k = profiles;
        while (k-- > 0) {
          if (++digit[k] < s.allowed[k].size()) break;
          digit[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) break;
      }
    }
  }
  return out;
}

PureTable Materialize(const HistoryTree& tree,
                      const std::vector<std::vector<ContinuationObject>>& levels,
                      std::uint32_t root) {
  PureTable table;
  table.levels.resize(tree.Horizon());
  std::vector<std::uint32_t> ids{root};
  for (int t = 1; t <= tree.Horizon(); ++t) {
    const auto& objects = levels[t - 1];
    auto& out = table.levels[t - 1];
    out.resize(ids.size());
    std::vector<std::uint32_t> next_ids;
    if (t < tree.Horizon()) next_ids.resize(tree.LevelSize(t + 1));
    const std::size_t profiles = tree.Stage(t).NumProfiles();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto& obj = objects[ids[i]];
      out[i] = obj.profile;
      if (t < tree.Horizon()) {
        for (std::size_t b = 0; b < profiles; ++b) {
          next_ids[tree.Child(t, i, b)] = obj.selector[b];
        }
      }
    }
    ids = std::move(next_ids);
  }
  return table;
}

}  // namespace

EquilibriumSet EnumeratePureSpne(const MultiStageGame& game,
                                 const SolverCaps& caps, Exec exec) {
  HistoryTree tree(game, caps.nodes);
  const int horizon = tree.Horizon();
  EquilibriumSet result;
  std::vector<std::vector<ContinuationObject>> levels(horizon);

  for (const auto& a :
       EnumeratePureNash(tree.Stage(horizon), caps.profiles_per_stage, exec)) {
    ContinuationObject obj;
    obj.profile =
        static_cast<std::uint32_t>(tree.Stage(horizon).ProfileIndex(a));
    obj.value = tree.Stage(horizon).Payoff(obj.profile);
    levels[horizon - 1].push_back(std::move(obj));
  }
  if (levels[horizon - 1].size() > caps.objects_per_stage) {
    result.truncated = true;
  }
  for (int t = horizon - 1; t >= 1 && !result.truncated; --t) {
    if (tree.Stage(t).NumProfiles() > caps.profiles_per_stage) {
      throw CapExceeded("stage " + std::to_string(t) +
                        " exceeds the profile cap");
    }
    levels[t - 1] = ExtendLevel(tree.Stage(t), game.delta, levels[t],
                                caps.objects_per_stage, exec,
                                &result.truncated);
    if (result.truncated) {
      result.cap_info = "stage " + std::to_string(t) + " has more than " +
                        std::to_string(caps.objects_per_stage) +
                        " subgame-perfect continuation objects";
    }
  }
  if (result.truncated) {
    if (result.cap_info.empty()) {
      result.cap_info = "final stage exceeds the object cap";
    }
    return result;
  }

  const auto& roots = levels[0];
  result.profiles.resize(roots.size());
  ForEachIndex(roots.size(), exec, [&](std::size_t r) {
    result.profiles[r] = Materialize(tree, levels, static_cast<std::uint32_t>(r));
  });
  std::sort(result.profiles.begin(), result.profiles.end());
  result.profiles.erase(
      std::unique(result.profiles.begin(), result.profiles.end()),
      result.profiles.end());
  return result;
}

EquilibriumSet EnumeratePureCredible(const MultiStageGame& game,
                                     const SolverCaps& caps, Exec exec) {
  EquilibriumSet spne = EnumeratePureSpne(game, caps, exec);
  if (spne.truncated) return spne;
  HistoryTree tree(game, caps.nodes);
  std::vector<char> keep(spne.profiles.size(), 0);
  ForEachIndex(spne.profiles.size(), exec, [&](std::size_t k) {
    const BehaviorProfile p = ToBehavior(tree, spne.profiles[k]);
    const SubgameValues values = ComputeSubgameValues(tree, p, Exec::kSerial);
    keep[k] = CheckCredibilityCondition(tree, p, values).pass ? 1 : 0;
  });
  EquilibriumSet result;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k]) result.profiles.push_back(std::move(spne.profiles[k]));
  }
  return result;
}

MixedProfile FirstStageEquilibrium(const StageGame& g, std::size_t cap) {
  const auto pure = EnumeratePureNash(g, cap);
  if (!pure.empty()) return MixedProfile::Pure(g, pure.front());
  if (g.NumPlayers() == 2) {
    const NashSet census = EnumerateMixedNash2p(g, cap);
    if (!census.mixed.empty()) return census.mixed.front();
    throw NoStageNashFound(
        "support enumeration found no equilibrium (degenerate stage game)");
  }
  throw NoStageNashFound(
      "stage game with " + std::to_string(g.NumPlayers()) +
      " players has no pure equilibrium; mixed enumeration is two-player only");
}

OpenLoopProfile ConstructCredible(const MultiStageGame& game,
                                  std::size_t cap) {
  RequireValid(game);
  std::vector<std::pair<const StageGame*, MixedProfile>> cache;
  auto choose = [&](const StageGame& g) {
    for (const auto& [seen, m] : cache) {
      if (*seen == g) return m;
    }
    cache.emplace_back(&g, FirstStageEquilibrium(g, cap));
    return cache.back().second;
  };
  OpenLoopProfile out;
  for (const auto& g : game.stages) out.prefix.push_back(choose(g));
  for (const auto& g : game.cycle) out.cycle.push_back(choose(g));
  return out;
}

std::string ToString(UniquenessStatus s) {
  switch (s) {
    case UniquenessStatus::kUnique:
      return "Unique";
    case UniquenessStatus::kNotApplicable:
      return "NotApplicable";
    case UniquenessStatus::kUnknown:
      return "Unknown";
  }
  return "?";
}

UniquenessReport AnalyzeUniqueness(const MultiStageGame& game,
                                   std::size_t cap) {
  RequireValid(game);
  UniquenessReport report;
  std::vector<std::pair<const StageGame*, UniquenessResult>> cache;
  std::vector<std::pair<int, UniquenessResult>> per_time;
  for (const auto& [time, g] : game.ScheduledStages()) {
    auto it = std::find_if(cache.begin(), cache.end(),
                           [&](const auto& e) { return *e.first == *g; });
    if (it == cache.end()) {
      cache.emplace_back(g, HasUniqueNash(*g, cap));
      it = cache.end() - 1;
    }
    per_time.emplace_back(time, it->second);
  }

  for (const auto& [time, r] : per_time) {
    if (r.status == Uniqueness::kMultiple) {
      report.status = UniquenessStatus::kNotApplicable;
      report.stage_time = time;
      report.equilibria = r.equilibria;
      report.reason = "stage " + std::to_string(time) + ": " + r.reason;
      return report;
    }
  }
  for (const auto& [time, r] : per_time) {
    if (r.status == Uniqueness::kUnknown) {
      report.status = UniquenessStatus::kUnknown;
      report.stage_time = time;
      report.equilibria = r.equilibria;
      report.reason = "stage " + std::to_string(time) + ": " + r.reason;
      return report;
    }
  }
  report.status = UniquenessStatus::kUnique;
  std::size_t k = 0;
  for (; k < game.stages.size(); ++k) {
    report.profile.prefix.push_back(per_time[k].second.equilibria.front());
  }
  for (; k < per_time.size(); ++k) {
    report.profile.cycle.push_back(per_time[k].second.equilibria.front());
  }
  report.reason = "every stage game has a unique equilibrium";
  return report;
}

std::string FormatOpenLoop(const MultiStageGame& game,
                           const OpenLoopProfile& p) {
  std::vector<std::string> rendered;
  for (const auto& [time, g] : game.ScheduledStages()) {
    rendered.push_back(FormatMixed(*g, p.At(time)));
  }
  if (!rendered.empty() &&
      std::all_of(rendered.begin(), rendered.end(),
                  [&](const std::string& s) { return s == rendered[0]; })) {
    return "always " + rendered[0];
  }
  std::string out;
  for (std::size_t k = 0; k < rendered.size(); ++k) {
    if (k) out += ", ";
    if (k == game.stages.size() && !game.IsFinite()) out += "repeat { ";
    out += "t" + std::to_string(k + 1) + " " + rendered[k];
  }
  if (!game.IsFinite()) out += " }";
  return out;
}

}  // namespace credible
