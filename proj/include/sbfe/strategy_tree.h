// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef SBFE_STRATEGY_TREE_H_
#define SBFE_STRATEGY_TREE_H_

#include <string>
#include <vector>

#include "sbfe/assignment.h"
#include "sbfe/instance.h"

namespace sbfe {

enum class Label { kFound0, kFound1, kAbort };

const char* LabelName(Label label);
Label LabelFor(Certificate c);

struct TreeNode {
  enum class Kind { kTest, kCoin, kTerminal };
  Kind kind = Kind::kTerminal;
  int var = -1;        // kTest
  double alpha = 0.0;  // kCoin: probability of heads (child[1])
  Label label = Label::kAbort;
  // child[0]: outcome 0 / tails, child[1]: outcome 1 / heads.
  int child[2] = {-1, -1};
};

// Arena-backed binary decision tree. Node ids are stable under the in-place
// pruning operations below; detached nodes stay in the arena until Compact().
class StrategyTree {
 public:
  // The empty strategy: a single terminal.
  StrategyTree();

  int AddTerminal(Label label = Label::kAbort);
  int AddTest(int var, int child0, int child1);
  int AddCoin(double alpha, int tails, int heads);
  void set_root(int id) { root_ = id; }

  int root() const { return root_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const TreeNode& node(int id) const { return nodes_[id]; }
  TreeNode& mutable_node(int id) { return nodes_[id]; }

  // Node ids reachable from the root, parents before children, child 0 first.
  std::vector<int> Preorder() const;
  int NumInternal() const;

  // Turns `id` into a terminal (its subtree is detached).
  void Prune(int id, Label label);
  // With probability `stop` terminate at `id` with `label`, else continue.
  // `id` becomes a coin node; the original node moves to a fresh id, which
  // is returned.
  int RandomPrune(int id, double stop, Label label);

  // Rewrites every terminal label from the certificate status of its path.
  void AssignLabels(const Instance& inst);

  // Drops unreachable nodes and renumbers in preorder.
  StrategyTree Compact() const;

  // Checks structure, repeated variables on paths, coin probabilities, and
  // terminal labels. Throws kMalformedStrategy or kDuplicateTest.
  void Validate(const Instance& inst) const;

 private:
  std::vector<TreeNode> nodes_;
  int root_ = 0;
};

// Path assignment for every reachable node (assignment before the node's own
// action). Indexed by node id; unreachable ids get an empty assignment.
std::vector<PartialAssignment> PathAssignments(const StrategyTree& tree,
                                               int num_vars);

}  // namespace sbfe

#endif  // SBFE_STRATEGY_TREE_H_
