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


#include "sbfe/strategy_tree.h"

#include <functional>

namespace sbfe {

const char* LabelName(Label label) {
  switch (label) {
    case Label::kFound0:
      return "Found0";
    case Label::kFound1:
      return "Found1";
    case Label::kAbort:
      return "Abort";
  }
  return "?";
}

Label LabelFor(Certificate c) {
  switch (c) {
    case Certificate::kZero:
      return Label::kFound0;
    case Certificate::kOne:
      return Label::kFound1;
    case Certificate::kNone:
      return Label::kAbort;
  }
  return Label::kAbort;
}

StrategyTree::StrategyTree() { root_ = AddTerminal(); }

int StrategyTree::AddTerminal(Label label) {
  TreeNode n;
  n.kind = TreeNode::Kind::kTerminal;
  n.label = label;
  nodes_.push_back(n);
  return size() - 1;
}

int StrategyTree::AddTest(int var, int child0, int child1) {
  TreeNode n;
  n.kind = TreeNode::Kind::kTest;
  n.var = var;
  n.child[0] = child0;
  n.child[1] = child1;
  nodes_.push_back(n);
  return size() - 1;
}

int StrategyTree::AddCoin(double alpha, int tails, int heads) {
  TreeNode n;
  n.kind = TreeNode::Kind::kCoin;
  n.alpha = alpha;
  n.child[0] = tails;
  n.child[1] = heads;
  nodes_.push_back(n);
  return size() - 1;
}

std::vector<int> StrategyTree::Preorder() const {
  std::vector<int> order;
  std::vector<int> stack = {root_};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const TreeNode& n = nodes_[id];
    if (n.kind != TreeNode::Kind::kTerminal) {
      stack.push_back(n.child[1]);
      stack.push_back(n.child[0]);
    }
  }
  return order;
}

int StrategyTree::NumInternal() const {
  int count = 0;
  for (int id : Preorder()) {
    if (nodes_[id].kind != TreeNode::Kind::kTerminal) ++count;
  }
  return count;
}

void StrategyTree::Prune(int id, Label label) {
  TreeNode& n = nodes_[id];
  n.kind = TreeNode::Kind::kTerminal;
  n.var = -1;
  n.alpha = 0.0;
  n.label = label;
  n.child[0] = n.child[1] = -1;
}

int StrategyTree::RandomPrune(int id, double stop, Label label) {
  nodes_.push_back(nodes_[id]);
  const int moved = size() - 1;
  const int term = AddTerminal(label);
  TreeNode& n = nodes_[id];
  n.kind = TreeNode::Kind::kCoin;
  n.var = -1;
  n.alpha = stop;
  n.child[0] = moved;
  n.child[1] = term;
  return moved;
}

std::vector<PartialAssignment> PathAssignments(const StrategyTree& tree,
                                               int num_vars) {
  std::vector<PartialAssignment> out(tree.size());
  std::function<void(int, PartialAssignment&)> walk =
      [&](int id, PartialAssignment& sigma) {
        out[id] = sigma;
        const TreeNode& n = tree.node(id);
        if (n.kind == TreeNode::Kind::kTerminal) return;
        if (n.kind == TreeNode::Kind::kCoin) {
          walk(n.child[0], sigma);
          walk(n.child[1], sigma);
          return;
        }
        const Value saved = sigma.get(n.var);
        for (int b = 0; b < 2; ++b) {
          sigma.Assign(n.var, b == 1);
          walk(n.child[b], sigma);
        }
        sigma.Set(n.var, saved);
      };
  PartialAssignment sigma(num_vars);
  walk(tree.root(), sigma);
  return out;
}

void StrategyTree::AssignLabels(const Instance& inst) {
  const std::vector<PartialAssignment> paths =
      PathAssignments(*this, inst.num_vars());
  for (int id : Preorder()) {
    if (nodes_[id].kind == TreeNode::Kind::kTerminal) {
      nodes_[id].label = LabelFor(Classify(paths[id], inst));
    }
  }
}

StrategyTree StrategyTree::Compact() const {
  StrategyTree out;
  out.nodes_.clear();
  std::function<int(int)> copy = [&](int id) -> int {
    const TreeNode& n = nodes_[id];
    const int fresh = static_cast<int>(out.nodes_.size());
    out.nodes_.push_back(n);
    if (n.kind != TreeNode::Kind::kTerminal) {
      const int c0 = copy(n.child[0]);
      const int c1 = copy(n.child[1]);
      out.nodes_[fresh].child[0] = c0;
      out.nodes_[fresh].child[1] = c1;
    }
    return fresh;
  };
  out.root_ = copy(root_);
  return out;
}

void StrategyTree::Validate(const Instance& inst) const {
  std::vector<char> seen(inst.num_vars(), 0);
  std::vector<char> visited(nodes_.size(), 0);
  PartialAssignment sigma(inst.num_vars());
  std::function<void(int)> walk = [&](int id) {
    if (id < 0 || id >= size()) {
      throw Error(ErrorCode::kMalformedStrategy, "dangling child pointer");
    }
    if (visited[id]) {
      throw Error(ErrorCode::kMalformedStrategy,
                  "node " + std::to_string(id) + " has two parents");
    }
    visited[id] = 1;
    const TreeNode& n = nodes_[id];
    switch (n.kind) {
      case TreeNode::Kind::kTerminal: {
        const Label expected = LabelFor(Classify(sigma, inst));
        if (n.label != expected) {
          throw Error(ErrorCode::kMalformedStrategy,
                      std::string("terminal labelled ") + LabelName(n.label) +
                          " but path gives " + LabelName(expected));
        }
        return;
      }
      case TreeNode::Kind::kCoin:
        if (!(n.alpha > 0.0 && n.alpha < 1.0)) {
          throw Error(ErrorCode::kMalformedStrategy,
                      "coin probability outside (0, 1)");
        }
        walk(n.child[0]);
        walk(n.child[1]);
        return;
      case TreeNode::Kind::kTest:
        if (n.var < 0 || n.var >= inst.num_vars()) {
          throw Error(ErrorCode::kMalformedStrategy, "variable out of range");
        }
        if (seen[n.var]) {
          throw Error(ErrorCode::kDuplicateTest,
                      "x" + std::to_string(n.var + 1) + " repeated on a path");
        }
        seen[n.var] = 1;
        for (int b = 0; b < 2; ++b) {
          sigma.Assign(n.var, b == 1);
          walk(n.child[b]);
        }
        sigma.Set(n.var, Value::kStar);
        seen[n.var] = 0;
        return;
    }
  };
  walk(root_);
}

}  // namespace sbfe
