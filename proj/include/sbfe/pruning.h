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


#ifndef SBFE_PRUNING_H_
#define SBFE_PRUNING_H_

#include <vector>

#include "sbfe/assignment.h"
#include "sbfe/instance.h"
#include "sbfe/piecewise_linear.h"
#include "sbfe/strategy_dag.h"
#include "sbfe/strategy_tree.h"

namespace sbfe {

// Relative tolerance under which two node densities count as tied.
inline constexpr double kDensityTieTolerance = 1e-12;

// Greedy pruning order of a DAG. Nodes with equal minimum density are pruned
// in one batch in (t, z) order; this reproduces the one-at-a-time order with
// lexicographic tie-breaking, since pruning a node never lowers the density
// of any other node and the tied nodes that follow it are not its ancestors.
struct DagSchedule {
  std::vector<int> nodes;        // state indices in pruning order
  std::vector<int> batch_end;    // exclusive end of each batch in `nodes`
  std::vector<Breakpoint> raw;   // (E[cost], E[U]) before and after batches
  PiecewiseLinearFn q;
};

DagSchedule ComputeDagSchedule(const StrategyDag& dag, Target target);

PiecewiseLinearFn ComputePruningFunction(const StrategyDag& dag,
                                         Target target);
PiecewiseLinearFn ComputePruningFunction(const StrategyTree& tree,
                                         const Instance& inst, Target target);

// Randomized pruning with E[cost] <= budget and E[U] = q(budget).
StrategyDag ComputePrunedStrategy(const StrategyDag& dag, Target target,
                                  double budget);
StrategyDag ComputePrunedStrategy(const StrategyDag& dag,
                                  const DagSchedule& schedule, Target target,
                                  double budget);
StrategyTree ComputePrunedStrategy(const StrategyTree& tree,
                                   const Instance& inst, Target target,
                                   double budget);

// Throws std::logic_error unless `raw` is monotone and concave.
void CheckConcaveMonotone(const std::vector<Breakpoint>& raw);

}  // namespace sbfe

#endif  // SBFE_PRUNING_H_
