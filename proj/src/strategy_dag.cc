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


#include "sbfe/strategy_dag.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <utility>

namespace sbfe {

StrategyDag::StrategyDag(ClassSpec cls, std::vector<int> seq)
    : cls_(std::move(cls)), seq_(std::move(seq)) {
  for (int t = 0; t <= length(); ++t) {
    lo_.push_back(0);
    hi_.push_back(t);
  }
  Layout();
}

StrategyDag::StrategyDag(ClassSpec cls, std::vector<int> seq,
                         std::vector<int> lo, std::vector<int> hi)
    : cls_(std::move(cls)),
      seq_(std::move(seq)),
      lo_(std::move(lo)),
      hi_(std::move(hi)) {
  if (static_cast<int>(lo_.size()) != length() + 1 ||
      static_cast<int>(hi_.size()) != length() + 1) {
    throw Error(ErrorCode::kLengthMismatch, "band must have length(seq)+1 rows");
  }
  Layout();
}

void StrategyDag::Layout() {
  std::vector<char> used(n(), 0);
  for (int v : seq_) {
    if (v < 0 || v >= n()) {
      throw Error(ErrorCode::kMalformedStrategy, "sequence entry out of range");
    }
    if (used[v]) {
      throw Error(ErrorCode::kDuplicateTest,
                  "x" + std::to_string(v + 1) + " repeated in sequence");
    }
    used[v] = 1;
  }
  offset_.assign(length() + 2, 0);
  for (int t = 0; t <= length(); ++t) {
    lo_[t] = std::max(lo_[t], 0);
    hi_[t] = std::min(hi_[t], t);
    if (hi_[t] < lo_[t]) {
      throw Error(ErrorCode::kMalformedStrategy,
                  "empty band at layer " + std::to_string(t));
    }
    offset_[t + 1] = offset_[t] + hi_[t] - lo_[t] + 1;
  }
  if (lo_[0] != 0) {
    throw Error(ErrorCode::kMalformedStrategy, "band must contain (0, 0)");
  }
  stop_.assign(offset_[length() + 1], 0.0);
}

int StrategyDag::LayerOf(int index) const {
  auto it = std::upper_bound(offset_.begin(), offset_.end(), index);
  return static_cast<int>(it - offset_.begin()) - 1;
}

bool StrategyDag::Forced(int t, int z) const {
  return t == length() || !InBand(t + 1, z) || !InBand(t + 1, z + 1);
}

double StrategyDag::stop(int t, int z) const {
  if (Forced(t, z)) return 1.0;
  return stop_[Index(t, z)];
}

StrategyTree DagToTree(const StrategyDag& dag) {
  StrategyTree tree;
  std::function<int(int, int)> expand = [&](int t, int z) -> int {
    const double s = dag.stop(t, z);
    const Label label = dag.LabelAt(t, z);
    if (s >= 1.0) return tree.AddTerminal(label);
    const int c0 = expand(t + 1, z + 1);
    const int c1 = expand(t + 1, z);
    const int test = tree.AddTest(dag.sequence()[t], c0, c1);
    if (s <= 0.0) return test;
    return tree.AddCoin(s, test, tree.AddTerminal(label));
  };
  tree.set_root(expand(0, 0));
  return tree.Compact();
}

namespace {

struct Resolved {
  double stop = 0.0;  // probability of terminating before the next test
  int test = -1;      // tree id of the test node, or -1 if always stops
  int first = -1;     // tree id where the resolution started
};

// Follows coin chains that have a terminal on one side.
Resolved Resolve(const StrategyTree& tree, int id) {
  Resolved r;
  r.first = id;
  double cont = 1.0;
  while (true) {
    const TreeNode& n = tree.node(id);
    if (n.kind == TreeNode::Kind::kTerminal) {
      r.stop = 1.0;
      return r;
    }
    if (n.kind == TreeNode::Kind::kTest) {
      r.stop = 1.0 - cont;
      r.test = id;
      return r;
    }
    const bool heads_term =
        tree.node(n.child[1]).kind == TreeNode::Kind::kTerminal;
    const bool tails_term =
        tree.node(n.child[0]).kind == TreeNode::Kind::kTerminal;
    if (heads_term) {
      cont *= 1.0 - n.alpha;
      id = n.child[0];
    } else if (tails_term) {
      cont *= n.alpha;
      id = n.child[1];
    } else {
      throw Error(ErrorCode::kNotElementary,
                  "coin node " + std::to_string(id) +
                      " randomizes between two continuations");
    }
  }
}

}  // namespace

StrategyDag TreeToDag(const StrategyTree& tree, const Instance& inst) {
  if (inst.num_classes() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "decision DAGs are defined for a single class");
  }
  const int n = inst.num_vars();
  std::map<std::pair<int, int>, Resolved> states;
  std::vector<int> layer_var(n + 1, -1);
  std::vector<int> layer_witness(n + 1, -1);

  auto divergent = [](int a, int b, const std::string& why) {
    return Error(ErrorCode::kNotElementary,
                 "nodes " + std::to_string(a) + " and " + std::to_string(b) +
                     " have equal counts but " + why);
  };

  std::function<void(int, int, int)> walk = [&](int id, int t, int z) {
    if (t > n) throw Error(ErrorCode::kDuplicateTest, "path longer than n");
    const Resolved r = Resolve(tree, id);
    auto [it, inserted] = states.emplace(std::make_pair(t, z), r);
    if (!inserted) {
      const Resolved& prev = it->second;
      if (std::abs(prev.stop - r.stop) > 1e-12) {
        throw divergent(prev.first, r.first, "different stop probabilities");
      }
      const int va = prev.test < 0 ? -1 : tree.node(prev.test).var;
      const int vb = r.test < 0 ? -1 : tree.node(r.test).var;
      if (va != vb && prev.stop < 1.0) {
        throw divergent(prev.first, r.first, "test different variables");
      }
      return;
    }
    if (r.test < 0) return;
    const int var = tree.node(r.test).var;
    if (layer_var[t] < 0) {
      layer_var[t] = var;
      layer_witness[t] = r.first;
    } else if (layer_var[t] != var) {
      throw divergent(layer_witness[t], r.first,
                      "test different variables after the same number of "
                      "tests");
    }
    walk(tree.node(r.test).child[1], t + 1, z);
    walk(tree.node(r.test).child[0], t + 1, z + 1);
  };
  walk(tree.root(), 0, 0);

  std::vector<int> seq;
  while (static_cast<int>(seq.size()) < n && layer_var[seq.size()] >= 0) {
    seq.push_back(layer_var[seq.size()]);
  }
  StrategyDag dag(inst.class_spec(0), seq);
  for (int t = 0; t <= dag.length(); ++t) {
    for (int z = 0; z <= t; ++z) {
      auto it = states.find({t, z});
      const double s = it == states.end() ? 1.0 : it->second.stop;
      if (t < dag.length()) dag.set_stop(t, z, s);
    }
  }
  return dag;
}

}  // namespace sbfe
