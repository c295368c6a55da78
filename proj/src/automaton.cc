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

#include "credible/automaton.h"

#include <algorithm>
#include <map>
#include <set>

#include "credible/errors.h"
#include "credible/linalg.h"
#include "credible/stage_nash.h"

namespace credible {

void CheckAutomata(const StageGame& g, const AutomatonProfile& profile) {
  RequireValid(g);
  if (static_cast<int>(profile.size()) != g.NumPlayers()) {
    throw InputError("expected " + std::to_string(g.NumPlayers()) +
                     " automata, got " + std::to_string(profile.size()));
  }
  for (int p = 0; p < g.NumPlayers(); ++p) {
    const PlayerAutomaton& m = profile[p];
    const std::string who = "automaton of player " + std::to_string(p);
    const int n = m.NumStates();
    if (n == 0) throw InputError(who + " has no states");
    if (m.initial < 0 || m.initial >= n) {
      throw InputError(who + " has an invalid initial state");
    }
    if (static_cast<int>(m.output.size()) != n ||
        static_cast<int>(m.transition.size()) != n) {
      throw InputError(who + " is not total over its states");
    }
    for (int s = 0; s < n; ++s) {
      const RatVector& d = m.output[s];
      if (static_cast<int>(d.size()) != g.NumActions(p)) {
        throw InputError(who + ": output of state " + m.states[s] +
                         " has wrong length");
      }
      Rat total(0);
      for (const Rat& w : d) {
        if (w.Sign() < 0) throw InputError(who + ": negative output weight");
        total += w;
      }
      if (total != Rat(1)) {
        throw InputError(who + ": output of state " + m.states[s] +
                         " sums to " + total.ToString());
      }
      if (m.transition[s].size() != g.NumProfiles()) {
        throw InputError(who + ": transition of state " + m.states[s] +
                         " is not total over joint actions");
      }
      for (int next : m.transition[s]) {
        if (next < 0 || next >= n) {
          throw InputError(who + ": transition to unknown state");
        }
      }
    }
  }
}

JointStateSpace::JointStateSpace(const StageGame& g,
                                 const AutomatonProfile& profile,
                                 std::size_t cap)
    : profile_(&profile) {
  CheckAutomata(g, profile);
  const int n = static_cast<int>(profile.size());
  strides_.assign(n, 1);
  for (int p = n; p-- > 0;) {
    strides_[p] = size_;
    size_ *= profile[p].NumStates();
    if (size_ > cap) {
      throw CapExceeded("joint state space exceeds cap of " +
                        std::to_string(cap));
    }
  }
  for (int p = 0; p < n; ++p) initial_ += strides_[p] * profile[p].initial;
}

std::size_t JointStateSpace::Next(std::size_t q,
                                  std::size_t profile_index) const {
  std::size_t out = 0;
  for (std::size_t p = 0; p < profile_->size(); ++p) {
    const int s = Component(q, static_cast<int>(p));
    out += strides_[p] * (*profile_)[p].transition[s][profile_index];
  }
  return out;
}

MixedProfile JointStateSpace::Output(std::size_t q) const {
  MixedProfile m;
  for (std::size_t p = 0; p < profile_->size(); ++p) {
    m.dist.push_back((*profile_)[p].output[Component(q, static_cast<int>(p))]);
  }
  return m;
}

std::vector<std::string> JointStateSpace::Labels(std::size_t q) const {
  std::vector<std::string> out;
  for (std::size_t p = 0; p < profile_->size(); ++p) {
    out.push_back((*profile_)[p].states[Component(q, static_cast<int>(p))]);
  }
  return out;
}

ValueTable AutomatonValues(const StageGame& g, const Rat& delta,
                           const AutomatonProfile& profile, std::size_t cap) {
  if (delta.Sign() < 0 || delta >= Rat(1)) {
    throw InputError("automaton values need 0 <= delta < 1, got " +
                     delta.ToString());
  }
  JointStateSpace space(g, profile, cap);
  const std::size_t n = space.Size();
  const int players = g.NumPlayers();
  RatMatrix a(n, RatVector(n, Rat(0)));
  RatMatrix r(n, RatVector(players, Rat(0)));
  for (std::size_t q = 0; q < n; ++q) {
    a[q][q] += Rat(1);
    for (const auto& [b, w] : SupportProfiles(g, space.Output(q))) {
      for (int i = 0; i < players; ++i) r[q][i] += w * g.Payoff(b)[i];
      a[q][space.Next(q, b)] -= delta * w;
    }
  }
  auto v = SolveExact(a, r);
  if (!v) throw Error("internal: singular value system with delta < 1");
  return *v;
}

ValueTable BellmanResiduals(const StageGame& g, const Rat& delta,
                            const AutomatonProfile& profile,
                            const ValueTable& values) {
  JointStateSpace space(g, profile, values.size());
  ValueTable residual(space.Size(), RatVector(g.NumPlayers(), Rat(0)));
  for (std::size_t q = 0; q < space.Size(); ++q) {
    residual[q] = values.at(q);
    for (const auto& [b, w] : SupportProfiles(g, space.Output(q))) {
      const RatVector& next = values[space.Next(q, b)];
      for (int i = 0; i < g.NumPlayers(); ++i) {
        residual[q][i] -= w * (g.Payoff(b)[i] + delta * next[i]);
      }
    }
  }
  return residual;
}

namespace {

std::vector<std::size_t> Successors(const StageGame& g,
                                    const JointStateSpace& space,
                                    const std::vector<std::size_t>& from) {
  std::set<std::size_t> out;
  for (std::size_t q : from) {
    for (std::size_t b = 0; b < g.NumProfiles(); ++b) {
      out.insert(space.Next(q, b));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<std::size_t> ReachableStates(const StageGame& g,
                                         const AutomatonProfile& profile,
                                         std::size_t cap) {
  JointStateSpace space(g, profile, cap);
  std::vector<char> seen(space.Size(), 0);
  std::vector<std::size_t> stack{space.Initial()};
  seen[space.Initial()] = 1;
  while (!stack.empty()) {
    const std::size_t q = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < g.NumProfiles(); ++b) {
      const std::size_t next = space.Next(q, b);
      if (!seen[next]) {
        seen[next] = 1;
        stack.push_back(next);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < seen.size(); ++q) {
    if (seen[q]) out.push_back(q);
  }
  return out;
}

Verdict VerifySpneAutomaton(const StageGame& g, const Rat& delta,
                            const AutomatonProfile& profile, std::size_t cap,
                            Exec exec) {
  const ValueTable values = AutomatonValues(g, delta, profile, cap);
  JointStateSpace space(g, profile, cap);
  const auto states = ReachableStates(g, profile, cap);
  std::vector<Verdict> slots(states.size());
  ForEachIndex(states.size(), exec, [&](std::size_t k) {
    const std::size_t q = states[k];
    std::vector<RatVector> payoffs(g.NumProfiles());
    for (std::size_t b = 0; b < g.NumProfiles(); ++b) {
      payoffs[b] = g.Payoff(b);
      const RatVector& next = values[space.Next(q, b)];
      for (int i = 0; i < g.NumPlayers(); ++i) payoffs[b][i] += delta * next[i];
    }
    const StageGame aug(g.AllActions(), std::move(payoffs));
    Verdict local = IsNash(aug, space.Output(q));
    for (auto& w : local.witnesses) {
      w.scope = "joint-state";
      w.location = space.Labels(q);
      w.detail.clear();
    }
    slots[k] = std::move(local);
  });
  Verdict verdict;
  for (const auto& v : slots) verdict.Merge(v);
  return verdict;
}

const std::vector<std::size_t>& ReachableSequence::AtTime(int time) const {
  if (time < 1) throw InputError("times start at 1");
  auto k = static_cast<std::size_t>(time - 1);
  if (k >= sets.size()) {
    k = preperiod + (k - preperiod) % static_cast<std::size_t>(period);
  }
  return sets[k];
}

ReachableSequence ComputeReachableSequence(const StageGame& g,
                                           const AutomatonProfile& profile,
                                           std::size_t cap) {
  JointStateSpace space(g, profile, cap);
  ReachableSequence seq;
  std::map<std::vector<std::size_t>, int> first_seen;
  std::vector<std::size_t> current{space.Initial()};
  while (true) {
    auto [it, inserted] =
        first_seen.emplace(current, static_cast<int>(seq.sets.size()));
    if (!inserted) {
      seq.preperiod = it->second;
      seq.period = static_cast<int>(seq.sets.size()) - it->second;
      return seq;
    }
    seq.sets.push_back(current);
    current = Successors(g, space, current);
  }
}

std::vector<std::size_t> ReachableStatesAtTime(const StageGame& g,
                                               const AutomatonProfile& profile,
                                               int time, std::size_t cap) {
  return ComputeReachableSequence(g, profile, cap).AtTime(time);
}

std::vector<int> BehaviorClasses(const PlayerAutomaton& machine) {
  const int n = machine.NumStates();
  std::vector<int> cls(n, 0);
  {
    std::map<RatVector, int> by_output;
    for (int s = 0; s < n; ++s) {
      cls[s] = by_output.emplace(machine.output[s],
                                 static_cast<int>(by_output.size()))
                   .first->second;
    }
  }
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> refine;
    std::vector<int> next(n);
    for (int s = 0; s < n; ++s) {
      std::vector<int> succ;
      succ.reserve(machine.transition[s].size());
      for (int t : machine.transition[s]) succ.push_back(cls[t]);
      next[s] = refine.emplace(std::make_pair(cls[s], std::move(succ)),
                               static_cast<int>(refine.size()))
                    .first->second;
    }
    const int before = *std::max_element(cls.begin(), cls.end());
    const int after = *std::max_element(next.begin(), next.end());
    cls = std::move(next);
    if (after == before) return cls;
  }
}

namespace {

// Same-time credibility over a family of joint-state sets.
Verdict CredibilityOverSets(
    const JointStateSpace& space, const ValueTable& values,
    const std::vector<std::vector<int>>& classes,
    const std::vector<std::vector<std::size_t>>& families, bool label_time) {
  Verdict verdict;
  const int players = static_cast<int>(classes.size());
  for (std::size_t k = 0; k < families.size(); ++k) {
    const auto& set = families[k];
    for (int p = 0; p < players; ++p) {
      bool found = false;
      for (std::size_t a = 0; a < set.size() && !found; ++a) {
        for (std::size_t b = a + 1; b < set.size() && !found; ++b) {
          const std::size_t qa = set[a], qb = set[b];
          if (classes[p][space.Component(qa, p)] ==
              classes[p][space.Component(qb, p)]) {
            continue;
          }
          if (values[qa][p] == values[qb][p]) continue;
          Witness w;
          w.kind = WitnessKind::kCredibilityFailure;
          w.scope = "joint-state";
          w.player = p;
          w.time = label_time ? static_cast<int>(k) + 1 : 0;
          w.location = space.Labels(qa);
          w.other_location = space.Labels(qb);
          w.value = values[qa][p];
          w.other_value = values[qb][p];
          verdict.Add(std::move(w));
          found = true;
        }
      }
    }
  }
  return verdict;
}

}  // namespace

AutomatonCredibility VerifyCredibleAutomaton(const StageGame& g,
                                             const Rat& delta,
                                             const AutomatonProfile& profile,
                                             std::size_t cap, Exec exec) {
  AutomatonCredibility result;
  result.verdict = VerifySpneAutomaton(g, delta, profile, cap, exec);
  const ValueTable values = AutomatonValues(g, delta, profile, cap);
  JointStateSpace space(g, profile, cap);
  const ReachableSequence seq = ComputeReachableSequence(g, profile, cap);
  result.preperiod = seq.preperiod;
  result.period = seq.period;

  std::vector<std::vector<int>> classes;
  for (const auto& m : profile) classes.push_back(BehaviorClasses(m));

  const Verdict same_time =
      CredibilityOverSets(space, values, classes, seq.sets, true);
  const Verdict cross_time = CredibilityOverSets(
      space, values, classes, {ReachableStates(g, profile, cap)}, false);
  result.cross_time_changes_verdict = same_time.pass != cross_time.pass;
  result.verdict.Merge(same_time);
  return result;
}

PlayerAutomaton PresetAutomaton(std::string_view name, const StageGame& g,
                                int player) {
  if (g.NumPlayers() != 2 || g.NumActions(0) != 2 || g.NumActions(1) != 2) {
    throw InputError("automaton presets need a 2x2 stage game");
  }
  if (player < 0 || player > 1) throw InputError("preset player out of range");
  const RatVector cooperate{Rat(1), Rat(0)}, defect{Rat(0), Rat(1)};
  PlayerAutomaton m;
  if (name == "grim-trigger") {
    m.states = {"coop", "punish"};
    m.output = {cooperate, defect};
    m.transition.assign(2, std::vector<int>(4, 1));
    m.transition[0][g.ProfileIndex({0, 0})] = 0;
  } else if (name == "always-defect") {
    m.states = {"defect"};
    m.output = {defect};
    m.transition.assign(1, std::vector<int>(4, 0));
  } else if (name == "tit-for-tat") {
    m.states = {"coop", "defect"};
    m.output = {cooperate, defect};
    m.transition.assign(2, std::vector<int>(4, 0));
    for (int s = 0; s < 2; ++s) {
      for (std::size_t b = 0; b < 4; ++b) {
        m.transition[s][b] = g.ActionOf(b, 1 - player);
      }
    }
  } else {
    throw InputError("unknown automaton preset '" + std::string(name) + "'");
  }
  m.initial = 0;
  return m;
}

}  // namespace credible
