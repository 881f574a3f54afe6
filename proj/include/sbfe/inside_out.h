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


#ifndef SBFE_INSIDE_OUT_H_
#define SBFE_INSIDE_OUT_H_

#include <vector>

#include "sbfe/instance.h"
#include "sbfe/strategy_dag.h"
#include "sbfe/strategy_tree.h"

namespace sbfe {

// Round-robin plan of InsideOut for one class. Indices are local to the
// class.
struct RoundPlan {
  std::vector<int> low;        // p <= 1/2, decreasing p
  std::vector<int> high;       // p > 1/2, increasing p
  std::vector<int> sequence;   // round i = (low[i], high[i]) where present
  std::vector<int> round_end;  // t after each round, ascending
};

RoundPlan BuildRoundPlan(const ClassSpec& cls);

// Elementary DAG of InsideOut: stops exactly at round ends that certify.
StrategyDag BuildInsideOutDag(const ClassSpec& cls);
StrategyDag BuildInsideOutDag(const ClassSpec& cls, const RoundPlan& plan);

// Amortized charge of one test outcome.
int AmortizedCost(double p, bool outcome);

// Optimal evaluation strategy for a single k-of-n function: test the
// variable with the k'-th largest probability among the untested ones,
// where k' is the residual threshold. Ties by ascending index.
StrategyTree BuildOptimalEvaluationTree(const ClassSpec& cls);

}  // namespace sbfe

#endif  // SBFE_INSIDE_OUT_H_
