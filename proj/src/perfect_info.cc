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

#include "credible/perfect_info.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "credible/errors.h"

namespace credible {

int GameTree::AddLeaf(RatVector payoffs) {
  TreeNode node;
  node.payoffs = std::move(payoffs);
  nodes_.push_back(std::move(node));
  parent_.push_back(-1);
  return static_cast<int>(nodes_.size()) - 1;
}

int GameTree::AddDecision(int player,
                          std::vector<std::pair<std::string, int>> moves) {
  TreeNode node;
  node.player = player;
  const int id = static_cast<int>(nodes_.size());
  for (auto& [label, child] : moves) {
    if (child < 0 || child >= id) {
      throw InputError("decision node refers to an unknown child");
    }
    if (parent_[child] != -1) {
      throw InputError("node " + std::to_string(child) + " has two parents");
    }
    parent_[child] = id;
    node.labels.push_back(std::move(label));
    node.children.push_back(child);
  }
  nodes_.push_back(std::move(node));
  parent_.push_back(-1);
  return id;
}

void GameTree::SetRoot(int node) {
  if (node < 0 || node >= static_cast<int>(nodes_.size())) {
    throw InputError("root out of range");
  }
  root_ = node;
}

std::vector<std::string> GameTree::Path(int id) const {
  std::vector<std::string> out;
  while (id != root_ && parent_[id] != -1) {
    const TreeNode& p = nodes_[parent_[id]];
    const auto pos = std::find(p.children.begin(), p.children.end(), id) -
                     p.children.begin();
    out.push_back(p.labels[pos]);
    id = parent_[id];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<int> GameTree::Find(const std::vector<std::string>& path) const {
  int id = root_;
  for (const auto& label : path) {
    const TreeNode& n = nodes_[id];
    auto it = std::find(n.labels.begin(), n.labels.end(), label);
    if (it == n.labels.end()) return std::nullopt;
    id = n.children[it - n.labels.begin()];
  }
  return id;
}

std::vector<int> GameTree::DecisionNodes() const {
  std::vector<int> out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (nodes_[id].IsLeaf()) continue;
    out.push_back(id);
    const auto& ch = nodes_[id].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

void GameTree::Validate() const {
  if (num_players_ < 1) throw InputError("tree has no players");
  if (root_ < 0) throw InputError("tree has no root");
  if (parent_[root_] != -1) throw InputError("root has a parent");
  std::size_t reached = 0;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    ++reached;
    const TreeNode& n = nodes_[id];
    const std::string where = "node /" + [&] {
      std::string s;
      for (const auto& l : Path(id)) s += (s.empty() ? "" : "/") + l;
      return s;
    }();
    if (n.IsLeaf()) {
      if (static_cast<int>(n.payoffs.size()) != num_players_) {
        throw InputError(where + ": leaf needs " +
                         std::to_string(num_players_) + " payoffs");
      }
      continue;
    }
    if (n.player < 0 || n.player >= num_players_) {
      throw InputError(where + ": invalid mover " + std::to_string(n.player));
    }
    std::set<std::string> labels(n.labels.begin(), n.labels.end());
    if (labels.size() != n.labels.size()) {
      throw InputError(where + ": duplicate edge label");
    }
    for (int c : n.children) stack.push_back(c);
  }
  if (reached != nodes_.size()) {
    throw InputError("tree has nodes unreachable from the root");
  }
}

void CheckStrategy(const GameTree& tree, const TreeStrategy& s) {
  tree.Validate();
  if (s.choice.size() != tree.NumNodes()) {
    throw InputError("strategy does not cover every node");
  }
  for (std::size_t id = 0; id < tree.NumNodes(); ++id) {
    const TreeNode& n = tree.Node(static_cast<int>(id));
    if (n.IsLeaf()) continue;
    if (s.choice[id] < 0 ||
        s.choice[id] >= static_cast<int>(n.children.size())) {
      throw InputError("strategy has no valid choice at a decision node");
    }
  }
}

std::vector<RatVector> ContinuationValues(const GameTree& tree,
                                          const TreeStrategy& s) {
  // Children always carry smaller ids than their parent.
  std::vector<RatVector> values(tree.NumNodes());
  for (std::size_t id = 0; id < tree.NumNodes(); ++id) {
    const TreeNode& n = tree.Node(id);
    values[id] = n.IsLeaf() ? n.payoffs : values[n.children[s.choice[id]]];
  }
  return values;
}

namespace {

struct Partial {
  RatVector value;
  std::vector<int> choice;
};

class Inductor {
 public:
  Inductor(const GameTree& tree, std::size_t cap) : tree_(tree), cap_(cap) {
    subtree_.resize(tree.NumNodes());
    Collect(tree.Root());
  }

  std::vector<Partial> Solve(int id) {
    const TreeNode& n = tree_.Node(id);
    if (n.IsLeaf()) {
      return {Partial{n.payoffs, std::vector<int>(tree_.NumNodes(), -1)}};
    }
    std::vector<std::vector<Partial>> lists;
    std::size_t combos = 1;
    for (int c : n.children) {
      lists.push_back(Solve(c));
      if (truncated) return {};
      const std::size_t k = lists.back().size();
      combos = k != 0 && combos > cap_ / k ? cap_ + 1 : combos * k;
    }
    if (combos > cap_) {
      truncated = true;
      return {};
    }
    std::vector<Partial> out;
    std::vector<std::size_t> digit(lists.size(), 0);
    while (true) {
      Rat best = lists[0][digit[0]].value[n.player];
      for (std::size_t j = 1; j < lists.size(); ++j) {
        best = std::max(best, lists[j][digit[j]].value[n.player]);
      }
      std::vector<int> argmax;
      for (std::size_t j = 0; j < lists.size(); ++j) {
        if (lists[j][digit[j]].value[n.player] == best) {
          argmax.push_back(static_cast<int>(j));
        }
      }
      if (argmax.size() > 1) tie_free = false;
      std::vector<int> merged(tree_.NumNodes(), -1);
      for (std::size_t j = 0; j < lists.size(); ++j) {
        const auto& src = lists[j][digit[j]].choice;
        for (int node : subtree_[n.children[j]]) merged[node] = src[node];
      }
      for (int j : argmax) {
        if (out.size() >= cap_) {
          truncated = true;
          return {};
        }
        Partial p{lists[j][digit[j]].value, merged};
        p.choice[id] = j;
        out.push_back(std::move(p));
      }
      std::size_t k = lists.size();
      while (k-- > 0) {
        if (++digit[k] < lists[k].size()) break;
        digit[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
    return out;
  }

  bool truncated = false;
  bool tie_free = true;

 private:
  void Collect(int id) {
    subtree_[id].push_back(id);
    for (int c : tree_.Node(id).children) {
      Collect(c);
      subtree_[id].insert(subtree_[id].end(), subtree_[c].begin(),
                          subtree_[c].end());
    }
  }

  const GameTree& tree_;
  std::size_t cap_;
  std::vector<std::vector<int>> subtree_;
};

}  // namespace

BackwardInductionResult BackwardInductionAll(const GameTree& tree,
                                             std::size_t cap) {
  tree.Validate();
  Inductor inductor(tree, cap);
  auto partials = inductor.Solve(tree.Root());
  BackwardInductionResult result;
  result.truncated = inductor.truncated;
  result.tie_free = inductor.tie_free;
  if (result.truncated) return result;
  for (auto& p : partials) result.strategies.push_back({std::move(p.choice)});
  std::sort(result.strategies.begin(), result.strategies.end());
  result.strategies.erase(
      std::unique(result.strategies.begin(), result.strategies.end()),
      result.strategies.end());
  return result;
}

Verdict VerifySpneTree(const GameTree& tree, const TreeStrategy& s) {
  CheckStrategy(tree, s);
  const auto values = ContinuationValues(tree, s);
  Verdict verdict;
  for (int id : tree.DecisionNodes()) {
    const TreeNode& n = tree.Node(id);
    const Rat& prescribed = values[n.children[s.choice[id]]][n.player];
    int best = -1;
    Rat best_value = prescribed;
    for (std::size_t j = 0; j < n.children.size(); ++j) {
      const Rat& v = values[n.children[j]][n.player];
      if (v > best_value) {
        best = static_cast<int>(j);
        best_value = v;
      }
    }
    if (best < 0) continue;
    Witness w;
    w.kind = WitnessKind::kNashFailure;
    w.scope = "node";
    w.player = n.player;
    w.location = tree.Path(id);
    w.action = n.labels[best];
    w.value = prescribed;
    w.other_value = best_value;
    w.detail = "prescribed " + n.labels[s.choice[id]];
    verdict.Add(std::move(w));
  }
  return verdict;
}

namespace {

// Canonical strings with an optional decoration marking the chosen edge at
// nodes where `marked_player` moves.
std::vector<std::string> Forms(const GameTree& tree, const TreeStrategy* s,
                               int marked_player) {
  std::vector<std::string> forms(tree.NumNodes());
  std::function<void(int)> visit = [&](int id) {
    const TreeNode& n = tree.Node(id);
    if (n.IsLeaf()) {
      std::string f = "L(";
      for (std::size_t i = 0; i < n.payoffs.size(); ++i) {
        if (i) f += ",";
        f += n.payoffs[i].ToString();
      }
      forms[id] = f + ")";
      return;
    }
    std::vector<std::string> kids;
    for (std::size_t j = 0; j < n.children.size(); ++j) {
      visit(n.children[j]);
      std::string k = forms[n.children[j]];
      if (s && n.player == marked_player && s->choice[id] == static_cast<int>(j)) {
        k = "*" + k;
      }
      kids.push_back(std::move(k));
    }
    std::sort(kids.begin(), kids.end());
    std::string f = "N" + std::to_string(n.player) + "(";
    for (std::size_t j = 0; j < kids.size(); ++j) {
      if (j) f += ";";
      f += kids[j];
    }
    forms[id] = f + ")";
  };
  visit(tree.Root());
  return forms;
}

std::string Fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

// Children positions sorted by canonical form, ties by position.
std::vector<int> SortedChildren(const GameTree& tree,
                                const std::vector<std::string>& forms, int id) {
  const TreeNode& n = tree.Node(id);
  std::vector<int> order(n.children.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return forms[n.children[a]] < forms[n.children[b]];
  });
  return order;
}

// Maps every node of subtree(a) to its counterpart in subtree(b) and
// reports whether some node had two children with equal forms.
void Correspond(const GameTree& tree, const std::vector<std::string>& forms,
                int a, int b, std::map<int, int>& map, bool& ambiguous) {
  map[a] = b;
  const TreeNode& na = tree.Node(a);
  if (na.IsLeaf()) return;
  const auto oa = SortedChildren(tree, forms, a);
  const auto ob = SortedChildren(tree, forms, b);
  for (std::size_t k = 0; k < oa.size(); ++k) {
    if (k + 1 < oa.size() &&
        forms[na.children[oa[k]]] == forms[na.children[oa[k + 1]]]) {
      ambiguous = true;
    }
    Correspond(tree, forms, na.children[oa[k]],
               tree.Node(b).children[ob[k]], map, ambiguous);
  }
}

}  // namespace

std::vector<std::string> CanonicalForms(const GameTree& tree) {
  tree.Validate();
  return Forms(tree, nullptr, -1);
}

std::vector<EquivClass> EquivalentSubgameClasses(const GameTree& tree) {
  const auto forms = CanonicalForms(tree);
  std::map<std::string, std::size_t> index;
  std::vector<EquivClass> classes;
  for (std::size_t id = 0; id < tree.NumNodes(); ++id) {
    auto [it, inserted] = index.emplace(forms[id], classes.size());
    if (inserted) classes.push_back({Fnv1a(forms[id]), {}});
    classes[it->second].roots.push_back(static_cast<int>(id));
  }
  return classes;
}

Verdict VerifyCredibleTree(const GameTree& tree, const TreeStrategy& s) {
  Verdict verdict = VerifySpneTree(tree, s);
  const auto values = ContinuationValues(tree, s);
  const auto forms = CanonicalForms(tree);
  for (const auto& cls : EquivalentSubgameClasses(tree)) {
    if (cls.roots.size() < 2 || tree.Node(cls.roots[0]).IsLeaf()) continue;
    for (int player = 0; player < tree.NumPlayers(); ++player) {
      std::vector<std::string> decorated;
      bool found = false;
      for (std::size_t x = 0; x < cls.roots.size() && !found; ++x) {
        for (std::size_t y = x + 1; y < cls.roots.size() && !found; ++y) {
          const int a = cls.roots[x], b = cls.roots[y];
          std::map<int, int> map;
          bool ambiguous = false;
          Correspond(tree, forms, a, b, map, ambiguous);
          bool differs = false;
          for (const auto& [u, v] : map) {
            const TreeNode& nu = tree.Node(u);
            if (nu.IsLeaf() || nu.player != player) continue;
            if (map.at(nu.children[s.choice[u]]) !=
                tree.Node(v).children[s.choice[v]]) {
              differs = true;
              break;
            }
          }
          if (!differs) continue;
          if (ambiguous) {
            if (decorated.empty()) decorated = Forms(tree, &s, player);
            if (decorated[a] == decorated[b]) {
              throw AmbiguousIsomorphism(
                  "restrictions of player " + std::to_string(player) +
                  " at " + FormatLocation(tree.Path(a), "node") + " and " +
                  FormatLocation(tree.Path(b), "node") +
                  " differ only up to an automorphism");
            }
          }
          if (values[a][player] == values[b][player]) continue;
          Witness w;
          w.kind = WitnessKind::kCredibilityFailure;
          w.scope = "node";
          w.player = player;
          w.location = tree.Path(a);
          w.other_location = tree.Path(b);
          w.value = values[a][player];
          w.other_value = values[b][player];
          verdict.Add(std::move(w));
          found = true;
        }
      }
    }
  }
  return verdict;
}

std::string ToString(Prop3Status s) {
  switch (s) {
    case Prop3Status::kHolds:
      return "Holds";
    case Prop3Status::kCounterexample:
      return "Counterexample";
    case Prop3Status::kTruncatedUnknown:
      return "TruncatedUnknown";
  }
  return "?";
}

Prop3Report CheckProp3(const GameTree& tree, std::size_t cap) {
  const auto bi = BackwardInductionAll(tree, cap);
  Prop3Report report;
  report.tie_free = bi.tie_free;
  if (bi.truncated) {
    report.status = Prop3Status::kTruncatedUnknown;
    return report;
  }
  report.num_spne = bi.strategies.size();
  for (const auto& s : bi.strategies) {
    Verdict v = VerifyCredibleTree(tree, s);
    if (!v.pass) {
      report.status = Prop3Status::kCounterexample;
      report.counterexample = s;
      report.counterexample_verdict = std::move(v);
      return report;
    }
  }
  report.status = Prop3Status::kHolds;
  return report;
}

std::string FormatTree(const GameTree& tree,
                       const std::vector<std::string>& player_names) {
  std::ostringstream os;
  std::function<void(int, const std::string&, int)> visit =
      [&](int id, const std::string& label, int depth) {
        const TreeNode& n = tree.Node(id);
        os << std::string(2 * depth, ' ') << (label.empty() ? "root" : label)
           << ": ";
        if (n.IsLeaf()) {
          os << ToString(n.payoffs) << "\n";
          return;
        }
        if (n.player < static_cast<int>(player_names.size())) {
          os << player_names[n.player] << "\n";
        } else {
          os << "player " << n.player << "\n";
        }
        for (std::size_t j = 0; j < n.children.size(); ++j) {
          visit(n.children[j], n.labels[j], depth + 1);
        }
      };
  visit(tree.Root(), "", 0);
  return os.str();
}

std::string FormatStrategy(const GameTree& tree, const TreeStrategy& s) {
  std::ostringstream os;
  for (int id : tree.DecisionNodes()) {
    os << FormatLocation(tree.Path(id), "node") << " -> "
       << tree.Node(id).labels[s.choice[id]] << "\n";
  }
  return os.str();
}

}  // namespace credible
