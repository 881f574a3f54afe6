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


#include "sbfe/pruning.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sbfe/expectations.h"

namespace sbfe {
namespace {

bool Tied(double density, double best) {
  return density <= best + kDensityTieTolerance * std::abs(best);
}

// Minimum density over live candidates, or +inf if none.
double MinDensity(const std::vector<double>& reach,
                  const std::vector<double>& gain,
                  const std::vector<double>& cost) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < reach.size(); ++i) {
    if (reach[i] > 0.0 && cost[i] > 0.0) best = std::min(best, gain[i] / cost[i]);
  }
  return best;
}

}  // namespace

void CheckConcaveMonotone(const std::vector<Breakpoint>& raw) {
  std::vector<Breakpoint> pts = raw;
  std::sort(pts.begin(), pts.end(),
            [](const Breakpoint& a, const Breakpoint& b) {
              return a.budget < b.budget;
            });
  constexpr double kTol = 1e-9;
  for (size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].value < pts[i - 1].value - kTol) {
      throw std::logic_error("pruning function is not monotone");
    }
  }
  for (size_t i = 1; i + 1 < pts.size(); ++i) {
    const double span = pts[i + 1].budget - pts[i - 1].budget;
    if (span <= 0) continue;
    const double w = (pts[i].budget - pts[i - 1].budget) / span;
    const double chord =
        pts[i - 1].value + w * (pts[i + 1].value - pts[i - 1].value);
    if (pts[i].value < chord - kTol) {
      throw std::logic_error("pruning function is not concave");
    }
  }
}

DagSchedule ComputeDagSchedule(const StrategyDag& dag, Target target) {
  DagSchedule out;
  StrategyDag cur = dag;
  std::vector<double> reach(cur.num_states());
  while (true) {
    const DagPasses passes = ComputeDagPasses(cur, target);
    out.raw.push_back({passes.total_cost, passes.total_value});
    if (passes.total_cost <= 0.0) break;
    const double best = MinDensity(passes.reach, passes.gain, passes.cost);
    if (std::isinf(best)) break;
    // Forward sweep: prune every tied node that is still reachable.
    std::fill(reach.begin(), reach.end(), 0.0);
    reach[cur.Index(0, 0)] = 1.0;
    for (int t = 0; t <= cur.length(); ++t) {
      for (int z = cur.lo(t); z <= cur.hi(t); ++z) {
        const int i = cur.Index(t, z);
        if (reach[i] <= 0.0) continue;
        if (passes.cost[i] > 0.0 && passes.reach[i] > 0.0 &&
            Tied(passes.gain[i] / passes.cost[i], best)) {
          cur.set_stop_index(i, 1.0);
          out.nodes.push_back(i);
          continue;
        }
        const double go = reach[i] * (1.0 - cur.stop(t, z));
        if (go <= 0.0) continue;
        const double p = cur.prob_at(t);
        reach[cur.Index(t + 1, z)] += go * p;
        reach[cur.Index(t + 1, z + 1)] += go * (1 - p);
      }
    }
    out.batch_end.push_back(static_cast<int>(out.nodes.size()));
  }
  CheckConcaveMonotone(out.raw);
  std::vector<Breakpoint> pts = out.raw;
  out.q = PiecewiseLinearFn(std::move(pts));
  return out;
}

PiecewiseLinearFn ComputePruningFunction(const StrategyDag& dag,
                                         Target target) {
  return ComputeDagSchedule(dag, target).q;
}

StrategyDag ComputePrunedStrategy(const StrategyDag& dag, Target target,
                                  double budget) {
  return ComputePrunedStrategy(dag, ComputeDagSchedule(dag, target), target,
                               budget);
}

StrategyDag ComputePrunedStrategy(const StrategyDag& dag,
                                  const DagSchedule& schedule, Target target,
                                  double budget) {
  if (budget < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative budget");
  }
  StrategyDag cur = dag;
  // raw[b] is the point before batch b; raw[b + 1] after it.
  size_t b = 0;
  int begin = 0;
  while (b < schedule.batch_end.size() && schedule.raw[b].budget > budget &&
         schedule.raw[b + 1].budget > budget) {
    for (int j = begin; j < schedule.batch_end[b]; ++j) {
      cur.set_stop_index(schedule.nodes[j], 1.0);
    }
    begin = schedule.batch_end[b];
    ++b;
  }
  if (b >= schedule.batch_end.size() || schedule.raw[b].budget <= budget) {
    return cur;
  }
  // The budget falls inside batch b: prune its nodes one by one.
  const DagPasses passes = ComputeDagPasses(cur, target);
  double remaining = passes.total_cost;
  std::vector<char> in_batch(cur.num_states(), 0);
  for (int j = begin; j < schedule.batch_end[b]; ++j) {
    in_batch[schedule.nodes[j]] = 1;
  }
  std::vector<double> reach(cur.num_states(), 0.0);
  reach[cur.Index(0, 0)] = 1.0;
  for (int t = 0; t <= cur.length(); ++t) {
    for (int z = cur.lo(t); z <= cur.hi(t); ++z) {
      const int i = cur.Index(t, z);
      if (reach[i] <= 0.0) continue;
      if (in_batch[i] && passes.cost[i] > 0.0) {
        const double removed = reach[i] * passes.cost[i];
        if (remaining - removed > budget) {
          cur.set_stop_index(i, 1.0);
          remaining -= removed;
          continue;
        }
        const double p = std::min(1.0, (remaining - budget) / removed);
        const double s = cur.stop(t, z);
        cur.set_stop_index(i, p >= 1.0 ? 1.0 : 1.0 - (1.0 - s) * (1.0 - p));
        return cur;
      }
      const double go = reach[i] * (1.0 - cur.stop(t, z));
      if (go <= 0.0) continue;
      const double p = cur.prob_at(t);
      reach[cur.Index(t + 1, z)] += go * p;
      reach[cur.Index(t + 1, z + 1)] += go * (1 - p);
    }
  }
  return cur;
}

namespace {

struct TreeChoice {
  int id = -1;
  double removed_cost = 0.0;
};

TreeChoice ChooseTreeNode(const StrategyTree& tree, const TreePasses& passes,
                          const std::vector<int>& rank) {
  double best = std::numeric_limits<double>::infinity();
  for (int id : tree.Preorder()) {
    if (tree.node(id).kind == TreeNode::Kind::kTerminal) continue;
    if (passes.reach[id] <= 0.0 || passes.cost[id] <= 0.0) continue;
    best = std::min(best, passes.gain[id] / passes.cost[id]);
  }
  TreeChoice choice;
  if (std::isinf(best)) return choice;
  for (int id : tree.Preorder()) {
    if (tree.node(id).kind == TreeNode::Kind::kTerminal) continue;
    if (passes.reach[id] <= 0.0 || passes.cost[id] <= 0.0) continue;
    if (!Tied(passes.gain[id] / passes.cost[id], best)) continue;
    if (choice.id < 0 || rank[id] < rank[choice.id]) {
      choice.id = id;
      choice.removed_cost = passes.reach[id] * passes.cost[id];
    }
  }
  return choice;
}

std::vector<int> PreorderRank(const StrategyTree& tree) {
  std::vector<int> rank(tree.size(), std::numeric_limits<int>::max());
  const std::vector<int> order = tree.Preorder();
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return rank;
}

}  // namespace

PiecewiseLinearFn ComputePruningFunction(const StrategyTree& tree,
                                         const Instance& inst, Target target) {
  StrategyTree cur = tree;
  const std::vector<int> rank = PreorderRank(tree);
  std::vector<Breakpoint> raw;
  while (true) {
    const TreePasses passes = ComputeTreePasses(cur, inst, target);
    raw.push_back({passes.total_cost, passes.total_value});
    if (passes.total_cost <= 0.0) break;
    const TreeChoice c = ChooseTreeNode(cur, passes, rank);
    if (c.id < 0) break;
    cur.Prune(c.id, LabelFor(passes.cert[c.id]));
  }
  CheckConcaveMonotone(raw);
  return PiecewiseLinearFn(std::move(raw));
}

StrategyTree ComputePrunedStrategy(const StrategyTree& tree,
                                   const Instance& inst, Target target,
                                   double budget) {
  if (budget < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative budget");
  }
  StrategyTree cur = tree;
  std::vector<int> rank = PreorderRank(tree);
  while (true) {
    const TreePasses passes = ComputeTreePasses(cur, inst, target);
    if (passes.total_cost <= budget) break;
    const TreeChoice c = ChooseTreeNode(cur, passes, rank);
    if (c.id < 0) break;
    const double p =
        std::min(1.0, (passes.total_cost - budget) / c.removed_cost);
    const Label label = LabelFor(passes.cert[c.id]);
    if (p >= 1.0) {
      cur.Prune(c.id, label);
      continue;
    }
    cur.RandomPrune(c.id, p, label);
    break;
  }
  return cur.Compact();
}

}  // namespace sbfe
