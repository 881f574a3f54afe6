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


#ifndef SBFE_EXPECTATIONS_H_
#define SBFE_EXPECTATIONS_H_

#include <vector>

#include "sbfe/assignment.h"
#include "sbfe/instance.h"
#include "sbfe/strategy_dag.h"
#include "sbfe/strategy_tree.h"

namespace sbfe {

struct Expectations {
  double cost = 0.0;
  double u0 = 0.0;     // P[final assignment is a 0-certificate]
  double u1 = 0.0;     // P[final assignment is a 1-certificate]
  double acost = 0.0;  // amortized cost

  double utility(Target t) const {
    switch (t) {
      case Target::kZero:
        return u0;
      case Target::kOne:
        return u1;
      case Target::kAny:
        return u0 + u1;
    }
    return 0.0;
  }
};

// Expected amortized charge of one test: P[outcome 0] if p <= 1/2, else p.
inline double ExpectedAmortized(double p) { return p <= 0.5 ? 1.0 - p : p; }

Expectations ExactExpectations(const StrategyTree& tree, const Instance& inst);
Expectations ExactExpectations(const StrategyDag& dag);

// Conditional statistics of one node. `utility` follows U(S, v): it is zero
// when a target certificate already holds on arrival at v.
struct NodeStats {
  bool reachable = false;
  double reach = 0.0;
  double utility = 0.0;  // E[U(S,v) | reach v]
  double cost = 0.0;     // E[cost(S,v) | reach v]
};

// Per-state arrays for a DAG. For each state index:
//   reach:  probability of arriving at the state,
//   value:  expected final utility given arrival (stop coin included),
//   cost:   expected remaining tests given arrival,
//   gain:   value, or 0 when the state already certifies the target.
struct DagPasses {
  std::vector<double> reach;
  std::vector<double> value;
  std::vector<double> cost;
  std::vector<double> gain;
  double total_cost = 0.0;
  double total_value = 0.0;
};

DagPasses ComputeDagPasses(const StrategyDag& dag, Target target);

NodeStats DagNodeStats(const StrategyDag& dag, int t, int z, Target target);

// Same passes for a tree, indexed by node id (non-reachable ids are zero).
struct TreePasses {
  std::vector<double> reach;
  std::vector<double> value;
  std::vector<double> cost;
  std::vector<double> gain;
  std::vector<Certificate> cert;  // status on arrival
  double total_cost = 0.0;
  double total_value = 0.0;
};

TreePasses ComputeTreePasses(const StrategyTree& tree, const Instance& inst,
                             Target target);

NodeStats TreeNodeStats(const StrategyTree& tree, const Instance& inst,
                        int id, Target target);

}  // namespace sbfe

#endif  // SBFE_EXPECTATIONS_H_
