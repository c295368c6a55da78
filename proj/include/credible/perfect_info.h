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

#ifndef CREDIBLE_PERFECT_INFO_H_
#define CREDIBLE_PERFECT_INFO_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "credible/rational.h"
#include "credible/verdict.h"

namespace credible {

inline constexpr std::size_t kDefaultTreeProfileCap = 100'000;

struct TreeNode {
  int player = -1;                  // mover; -1 at leaves
  std::vector<std::string> labels;  // one per outgoing edge
  std::vector<int> children;
  RatVector payoffs;                // leaves only

  bool IsLeaf() const { return children.empty(); }
};

// Finite perfect-information game tree. Build with AddLeaf/AddDecision and
// SetRoot; node ids are indices into nodes().
class GameTree {
 public:
  GameTree() = default;
  explicit GameTree(int num_players) : num_players_(num_players) {}

  int AddLeaf(RatVector payoffs);
  int AddDecision(int player,
                  std::vector<std::pair<std::string, int>> moves);
  void SetRoot(int node);
  void SetNumPlayers(int n) { num_players_ = n; }

  int NumPlayers() const { return num_players_; }
  int Root() const { return root_; }
  std::size_t NumNodes() const { return nodes_.size(); }
  const TreeNode& Node(int id) const { return nodes_[id]; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  int Parent(int id) const { return parent_[id]; }

  // Edge labels from the root down to `id`.
  std::vector<std::string> Path(int id) const;
  // Node reached by following `path` from the root, if any.
  std::optional<int> Find(const std::vector<std::string>& path) const;
  // Internal nodes in depth-first preorder from the root.
  std::vector<int> DecisionNodes() const;

  // Throws InputError unless the nodes form one tree rooted at Root(), every
  // decision node has a valid mover and distinct edge labels, and every leaf
  // has one payoff per player.
  void Validate() const;

 private:
  int num_players_ = 0;
  int root_ = -1;
  std::vector<TreeNode> nodes_;
  std::vector<int> parent_;
};

// Chosen child position at every decision node (-1 at leaves).
struct TreeStrategy {
  std::vector<int> choice;

  friend bool operator==(const TreeStrategy&, const TreeStrategy&) = default;
  friend auto operator<=>(const TreeStrategy&, const TreeStrategy&) = default;
};

void CheckStrategy(const GameTree& tree, const TreeStrategy& s);

// Continuation payoff vector at every node under s.
std::vector<RatVector> ContinuationValues(const GameTree& tree,
                                          const TreeStrategy& s);

struct BackwardInductionResult {
  std::vector<TreeStrategy> strategies;  // sorted
  bool truncated = false;
  // No mover was ever indifferent between two children during induction.
  bool tie_free = true;
};

// Every pure subgame-perfect strategy profile. Ties are branched on, and
// continuation values below a node are carried per branch so ties deeper in
// the tree propagate correctly.
BackwardInductionResult BackwardInductionAll(
    const GameTree& tree, std::size_t cap = kDefaultTreeProfileCap);

// One-shot check at every decision node (sufficient in finite trees).
Verdict VerifySpneTree(const GameTree& tree, const TreeStrategy& s);

// Canonical form of every subtree: action labels erased and children sorted
// by their own forms. Equal forms mean isomorphic subtrees.
std::vector<std::string> CanonicalForms(const GameTree& tree);

struct EquivClass {
  std::string form_hash;   // hex digest of the canonical form
  std::vector<int> roots;  // ascending node ids
};

// Partition of all nodes by canonical form, ordered by smallest root.
std::vector<EquivClass> EquivalentSubgameClasses(const GameTree& tree);

// SPNE plus the credibility condition across equivalent subtrees. Throws
// AmbiguousIsomorphism when two restrictions differ under the canonical
// correspondence but agree under another isomorphism.
Verdict VerifyCredibleTree(const GameTree& tree, const TreeStrategy& s);

enum class Prop3Status { kHolds, kCounterexample, kTruncatedUnknown };

std::string ToString(Prop3Status s);

struct Prop3Report {
  Prop3Status status = Prop3Status::kHolds;
  bool tie_free = true;
  std::size_t num_spne = 0;
  std::optional<TreeStrategy> counterexample;
  Verdict counterexample_verdict;
};

// Checks that every SPNE of the tree is credible. Tie-free trees have a
// single SPNE and hold structurally; trees with ties are checked
// exhaustively and may produce a counterexample.
Prop3Report CheckProp3(const GameTree& tree,
                       std::size_t cap = kDefaultTreeProfileCap);

// Indented rendering of the tree, one node per line.
std::string FormatTree(const GameTree& tree,
                       const std::vector<std::string>& player_names = {});
// "path -> label" per decision node, preorder.
std::string FormatStrategy(const GameTree& tree, const TreeStrategy& s);

}  // namespace credible

#endif  // CREDIBLE_PERFECT_INFO_H_
