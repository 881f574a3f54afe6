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


#include "sbfe/expectations.h"

#include <functional>

namespace sbfe {

Expectations ExactExpectations(const StrategyDag& dag) {
  const int len = dag.length();
  std::vector<double> cost(dag.num_states()), u0(dag.num_states()),
      u1(dag.num_states()), acost(dag.num_states());
  for (int t = len; t >= 0; --t) {
    for (int z = dag.lo(t); z <= dag.hi(t); ++z) {
      const int i = dag.Index(t, z);
      const double s = dag.stop(t, z);
      const Certificate c = dag.CertificateAt(t, z);
      double c_go = 0, u0_go = 0, u1_go = 0, a_go = 0;
      if (s < 1.0) {
        const double p = dag.prob_at(t);
        const int i1 = dag.Index(t + 1, z);
        const int i0 = dag.Index(t + 1, z + 1);
        c_go = 1.0 + p * cost[i1] + (1 - p) * cost[i0];
        u0_go = p * u0[i1] + (1 - p) * u0[i0];
        u1_go = p * u1[i1] + (1 - p) * u1[i0];
        a_go = ExpectedAmortized(p) + p * acost[i1] + (1 - p) * acost[i0];
      }
      cost[i] = (1 - s) * c_go;
      acost[i] = (1 - s) * a_go;
      u0[i] = s * (c == Certificate::kZero) + (1 - s) * u0_go;
      u1[i] = s * (c == Certificate::kOne) + (1 - s) * u1_go;
    }
  }
  const int r = dag.Index(0, 0);
  return {cost[r], u0[r], u1[r], acost[r]};
}

DagPasses ComputeDagPasses(const StrategyDag& dag, Target target) {
  const int len = dag.length();
  DagPasses out;
  out.reach.assign(dag.num_states(), 0.0);
  out.value.assign(dag.num_states(), 0.0);
  out.cost.assign(dag.num_states(), 0.0);
  out.gain.assign(dag.num_states(), 0.0);
  out.reach[dag.Index(0, 0)] = 1.0;
  for (int t = 0; t < len; ++t) {
    for (int z = dag.lo(t); z <= dag.hi(t); ++z) {
      const int i = dag.Index(t, z);
      const double r = out.reach[i];
      if (r == 0.0) continue;
      const double go = r * (1.0 - dag.stop(t, z));
      if (go == 0.0) continue;
      const double p = dag.prob_at(t);
      out.reach[dag.Index(t + 1, z)] += go * p;
      out.reach[dag.Index(t + 1, z + 1)] += go * (1 - p);
    }
  }
  for (int t = len; t >= 0; --t) {
    for (int z = dag.lo(t); z <= dag.hi(t); ++z) {
      const int i = dag.Index(t, z);
      const double s = dag.stop(t, z);
      const bool certified = Matches(dag.CertificateAt(t, z), target);
      double v_go = 0, c_go = 0;
      if (s < 1.0) {
        const double p = dag.prob_at(t);
        const int i1 = dag.Index(t + 1, z);
        const int i0 = dag.Index(t + 1, z + 1);
        v_go = p * out.value[i1] + (1 - p) * out.value[i0];
        c_go = 1.0 + p * out.cost[i1] + (1 - p) * out.cost[i0];
      }
      out.value[i] = s * certified + (1 - s) * v_go;
      out.cost[i] = (1 - s) * c_go;
      out.gain[i] = certified ? 0.0 : out.value[i];
    }
  }
  const int r = dag.Index(0, 0);
  out.total_cost = out.cost[r];
  out.total_value = out.value[r];
  return out;
}

NodeStats DagNodeStats(const StrategyDag& dag, int t, int z, Target target) {
  if (!dag.InBand(t, z)) {
    throw Error(ErrorCode::kInvalidArgument, "state outside the DAG band");
  }
  const DagPasses passes = ComputeDagPasses(dag, target);
  const int i = dag.Index(t, z);
  NodeStats s;
  s.reach = passes.reach[i];
  s.reachable = s.reach > 0.0;
  if (s.reachable) {
    s.utility = passes.gain[i];
    s.cost = passes.cost[i];
  }
  return s;
}

TreePasses ComputeTreePasses(const StrategyTree& tree, const Instance& inst,
                             Target target) {
  TreePasses out;
  out.reach.assign(tree.size(), 0.0);
  out.value.assign(tree.size(), 0.0);
  out.cost.assign(tree.size(), 0.0);
  out.gain.assign(tree.size(), 0.0);
  out.cert.assign(tree.size(), Certificate::kNone);
  std::vector<ClassCounts> counts(inst.num_classes());
  std::function<void(int, double)> walk = [&](int id, double reach) {
    const TreeNode& n = tree.node(id);
    out.reach[id] = reach;
    const Certificate c = ClassifyCounts(counts, inst);
    out.cert[id] = c;
    const bool certified = Matches(c, target);
    switch (n.kind) {
      case TreeNode::Kind::kTerminal:
        out.value[id] = certified;
        out.cost[id] = 0.0;
        break;
      case TreeNode::Kind::kCoin: {
        const double a = n.alpha;
        walk(n.child[0], reach * (1 - a));
        walk(n.child[1], reach * a);
        out.value[id] =
            (1 - a) * out.value[n.child[0]] + a * out.value[n.child[1]];
        out.cost[id] =
            (1 - a) * out.cost[n.child[0]] + a * out.cost[n.child[1]];
        break;
      }
      case TreeNode::Kind::kTest: {
        const double p = inst.prob(n.var);
        ClassCounts& cc = counts[inst.class_of(n.var)];
        ++cc.zeros;
        walk(n.child[0], reach * (1 - p));
        --cc.zeros;
        ++cc.ones;
        walk(n.child[1], reach * p);
        --cc.ones;
        out.value[id] =
            (1 - p) * out.value[n.child[0]] + p * out.value[n.child[1]];
        out.cost[id] =
            1.0 + (1 - p) * out.cost[n.child[0]] + p * out.cost[n.child[1]];
        break;
      }
    }
    out.gain[id] = certified ? 0.0 : out.value[id];
  };
  walk(tree.root(), 1.0);
  out.total_cost = out.cost[tree.root()];
  out.total_value = out.value[tree.root()];
  return out;
}

NodeStats TreeNodeStats(const StrategyTree& tree, const Instance& inst,
                        int id, Target target) {
  const TreePasses passes = ComputeTreePasses(tree, inst, target);
  NodeStats s;
  s.reach = passes.reach[id];
  s.reachable = s.reach > 0.0;
  if (s.reachable) {
    s.utility = passes.gain[id];
    s.cost = passes.cost[id];
  }
  return s;
}

Expectations ExactExpectations(const StrategyTree& tree,
                               const Instance& inst) {
  Expectations e;
  std::vector<ClassCounts> counts(inst.num_classes());
  std::function<void(int, double)> walk = [&](int id, double w) {
    const TreeNode& n = tree.node(id);
    switch (n.kind) {
      case TreeNode::Kind::kTerminal: {
        const Certificate c = ClassifyCounts(counts, inst);
        if (c == Certificate::kZero) e.u0 += w;
        if (c == Certificate::kOne) e.u1 += w;
        return;
      }
      case TreeNode::Kind::kCoin:
        walk(n.child[0], w * (1 - n.alpha));
        walk(n.child[1], w * n.alpha);
        return;
      case TreeNode::Kind::kTest: {
        const double p = inst.prob(n.var);
        e.cost += w;
        e.acost += w * ExpectedAmortized(p);
        ClassCounts& cc = counts[inst.class_of(n.var)];
        ++cc.zeros;
        walk(n.child[0], w * (1 - p));
        --cc.zeros;
        ++cc.ones;
        walk(n.child[1], w * p);
        --cc.ones;
        return;
      }
    }
  };
  walk(tree.root(), 1.0);
  return e;
}

}  // namespace sbfe
