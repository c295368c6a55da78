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

#include "credible/stage_nash.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "credible/errors.h"
#include "credible/linalg.h"

namespace credible {

std::vector<MixedProfile> NashSet::All(const StageGame& g) const {
  std::vector<MixedProfile> out;
  for (const auto& p : pure) out.push_back(MixedProfile::Pure(g, p));
  out.insert(out.end(), mixed.begin(), mixed.end());
  return out;
}

Verdict IsNash(const StageGame& g, const MixedProfile& m) {
  CheckMixedProfile(g, m);
  const RatVector value = ExpectedStagePayoff(g, m);
  Verdict verdict;
  for (int p = 0; p < g.NumPlayers(); ++p) {
    int best = -1;
    Rat best_payoff = value[p];
    for (int a = 0; a < g.NumActions(p); ++a) {
      Rat dev = DeviationPayoff(g, m, p, a);
      if (dev > best_payoff) {
        best = a;
        best_payoff = dev;
      }
    }
    if (best >= 0) {
      Witness w;
      w.kind = WitnessKind::kNashFailure;
      w.scope = "stage";
      w.player = p;
      w.action = g.Actions(p)[best];
      w.value = value[p];
      w.other_value = best_payoff;
      w.detail = "at " + FormatMixed(g, m);
      verdict.Add(std::move(w));
    }
  }
  return verdict;
}

bool IsPureNash(const StageGame& g, std::size_t profile_index) {
  const RatVector& u = g.Payoff(profile_index);
  for (int p = 0; p < g.NumPlayers(); ++p) {
    for (int a = 0; a < g.NumActions(p); ++a) {
      if (g.Payoff(g.WithAction(profile_index, p, a))[p] > u[p]) return false;
    }
  }
  return true;
}

std::vector<PureProfile> EnumeratePureNash(const StageGame& g,
                                           std::size_t cap, Exec exec) {
  RequireValid(g);
  if (g.NumProfiles() > cap) {
    throw CapExceeded("stage game has " + std::to_string(g.NumProfiles()) +
                      " pure profiles, cap is " + std::to_string(cap));
  }
  std::vector<char> is_nash(g.NumProfiles(), 0);
  ForEachIndex(g.NumProfiles(), exec,
               [&](std::size_t i) { is_nash[i] = IsPureNash(g, i) ? 1 : 0; });
  std::vector<PureProfile> out;
  for (std::size_t i = 0; i < is_nash.size(); ++i) {
    if (is_nash[i]) out.push_back(g.ProfileAt(i));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(k);
  for (int i = 0; i < k; ++i) current[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == n - k + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

struct SupportOutcome {
  bool degenerate = false;
  std::optional<MixedProfile> equilibrium;
};

// Payoff of `player` at (row, col).
const Rat& Entry(const StageGame& g, int player, int row, int col) {
  return g.Payoff(static_cast<std::size_t>(row) * g.NumActions(1) + col)[player];
}

// Solves for the mixture of `mixer` over `own` that makes the opponent
// indifferent across `opp`. Returns the weights (over own) or nullopt when
// singular.
std::optional<RatVector> IndifferenceWeights(const StageGame& g, int mixer,
                                             const std::vector<int>& own,
                                             const std::vector<int>& opp) {
  const int other = 1 - mixer;
  const std::size_t k = own.size();
  RatMatrix a(k + 1, RatVector(k + 1, Rat(0)));
  RatVector b(k + 1, Rat(0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      const int row = mixer == 0 ? own[c] : opp[r];
      const int col = mixer == 0 ? opp[r] : own[c];
      a[r][c] = Entry(g, other, row, col);
    }
    a[r][k] = Rat(-1);
  }
  for (std::size_t c = 0; c < k; ++c) a[k][c] = Rat(1);
  b[k] = Rat(1);
  auto x = SolveExact(a, b);
  if (!x) return std::nullopt;
  x->pop_back();
  return x;
}

SupportOutcome SolveSupportPair(const StageGame& g, const std::vector<int>& rows,
                                const std::vector<int>& cols) {
  SupportOutcome out;
  auto x = IndifferenceWeights(g, 0, rows, cols);
  auto y = IndifferenceWeights(g, 1, cols, rows);
  if (!x || !y) {
    out.degenerate = true;
    return out;
  }
  for (const Rat& w : *x) {
    if (w.Sign() < 0) return out;
  }
  for (const Rat& w : *y) {
    if (w.Sign() < 0) return out;
  }
  for (const Rat& w : *x) out.degenerate |= w.IsZero();
  for (const Rat& w : *y) out.degenerate |= w.IsZero();

  MixedProfile m;
  m.dist = {RatVector(g.NumActions(0), Rat(0)),
            RatVector(g.NumActions(1), Rat(0))};
  for (std::size_t i = 0; i < rows.size(); ++i) m.dist[0][rows[i]] = (*x)[i];
  for (std::size_t j = 0; j < cols.size(); ++j) m.dist[1][cols[j]] = (*y)[j];
  if (IsNash(g, m).pass) out.equilibrium = std::move(m);
  return out;
}

std::vector<int> SupportOf(const RatVector& d) {
  std::vector<int> s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].IsZero()) s.push_back(static_cast<int>(i));
  }
  return s;
}

}  // namespace

NashSet EnumerateMixedNash2p(const StageGame& g, std::size_t cap, Exec exec) {
  RequireValid(g);
  if (g.NumPlayers() != 2) {
    throw InputError("mixed enumeration requires exactly two players");
  }
  NashSet result;
  result.pure = EnumeratePureNash(g, cap, exec);

  const int m = g.NumActions(0), n = g.NumActions(1);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (int k = 2; k <= std::min(m, n); ++k) {
    auto row_sets = Subsets(m, k);
    auto col_sets = Subsets(n, k);
    if (pairs.size() + row_sets.size() * col_sets.size() > cap) {
      throw CapExceeded("support enumeration exceeds cap of " +
                        std::to_string(cap) + " support pairs");
    }
    for (const auto& r : row_sets) {
      for (const auto& c : col_sets) pairs.emplace_back(r, c);
    }
  }

  std::vector<SupportOutcome> outcomes(pairs.size());
  ForEachIndex(pairs.size(), exec, [&](std::size_t i) {
    outcomes[i] = SolveSupportPair(g, pairs[i].first, pairs[i].second);
  });

  std::set<MixedProfile> seen;
  for (auto& o : outcomes) {
    result.degenerate |= o.degenerate;
    if (!o.equilibrium || o.equilibrium->AsPure()) continue;
    if (seen.insert(*o.equilibrium).second) {
      result.mixed.push_back(std::move(*o.equilibrium));
    }
  }
  std::sort(result.mixed.begin(), result.mixed.end(),
            [](const MixedProfile& a, const MixedProfile& b) {
              return std::make_tuple(SupportOf(a.dist[0]),
                                     SupportOf(a.dist[1]), a.dist) <
                     std::make_tuple(SupportOf(b.dist[0]),
                                     SupportOf(b.dist[1]), b.dist);
            });
  return result;
}

NashSet NashCensus(const StageGame& g, std::size_t cap, Exec exec) {
  if (g.NumPlayers() == 2) return EnumerateMixedNash2p(g, cap, exec);
  NashSet result;
  result.pure = EnumeratePureNash(g, cap, exec);
  return result;
}

std::string ToString(Uniqueness u) {
  switch (u) {
    case Uniqueness::kUnique:
      return "Unique";
    case Uniqueness::kMultiple:
      return "Multiple";
    case Uniqueness::kUnknown:
      return "Unknown";
  }
  return "?";
}

std::vector<std::vector<int>> IteratedStrictDominance(const StageGame& g) {
  RequireValid(g);
  const int n = g.NumPlayers();
  std::vector<std::vector<int>> alive(n);
  for (int p = 0; p < n; ++p) {
    for (int a = 0; a < g.NumActions(p); ++a) alive[p].push_back(a);
  }
  // Surviving opponent profiles as full profiles with `p`'s slot at 0.
  auto opponent_profiles = [&](int p) {
    std::vector<std::size_t> out{0};
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      std::vector<std::size_t> next;
      for (std::size_t base : out) {
        for (int a : alive[q]) next.push_back(g.WithAction(base, q, a));
      }
      out = std::move(next);
    }
    return out;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n; ++p) {
      const auto others = opponent_profiles(p);
      std::vector<int> keep;
      for (int a : alive[p]) {
        bool dominated = false;
        for (int b : alive[p]) {
          if (b == a) continue;
          bool strictly_better = true;
          for (std::size_t base : others) {
            if (g.Payoff(g.WithAction(base, p, b))[p] <=
                g.Payoff(g.WithAction(base, p, a))[p]) {
              strictly_better = false;
              break;
            }
          }
          if (strictly_better) {
            dominated = true;
            break;
          }
        }
        if (!dominated) keep.push_back(a);
      }
      if (keep.size() != alive[p].size()) {
        alive[p] = std::move(keep);
        changed = true;
      }
    }
  }
  return alive;
}

UniquenessResult HasUniqueNash(const StageGame& g, std::size_t cap) {
  RequireValid(g);
  UniquenessResult result;
  const NashSet census = NashCensus(g, cap, Exec::kParallel);
  const auto all = census.All(g);
  if (all.size() >= 2) {
    result.status = Uniqueness::kMultiple;
    result.equilibria = {all[0], all[1]};
    result.reason = "census lists " + std::to_string(all.size()) +
                    " equilibria";
    return result;
  }
  const auto alive = IteratedStrictDominance(g);
  if (std::all_of(alive.begin(), alive.end(),
                  [](const auto& a) { return a.size() == 1; })) {
    PureProfile profile;
    for (const auto& a : alive) profile.push_back(a[0]);
    result.status = Uniqueness::kUnique;
    result.equilibria = {MixedProfile::Pure(g, profile)};
    result.reason = "iterated strict dominance";
    return result;
  }
  if (g.NumPlayers() == 2 && !census.degenerate && all.size() == 1) {
    result.status = Uniqueness::kUnique;
    result.equilibria = all;
    result.reason = "nondegenerate support enumeration";
    return result;
  }
  result.status = Uniqueness::kUnknown;
  result.equilibria = all;
  if (g.NumPlayers() != 2) {
    result.reason = "three or more players without a dominance certificate";
  } else if (census.degenerate) {
    result.reason = "degenerate support system";
  } else {
    result.reason = "no equilibrium found";
  }
  return result;
}

}  // namespace credible
