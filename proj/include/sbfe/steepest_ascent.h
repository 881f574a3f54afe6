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


#ifndef SBFE_STEEPEST_ASCENT_H_
#define SBFE_STEEPEST_ASCENT_H_

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "sbfe/assignment.h"
#include "sbfe/execution.h"
#include "sbfe/instance.h"
#include "sbfe/piecewise_linear.h"
#include "sbfe/pruning.h"
#include "sbfe/strategy_dag.h"

namespace sbfe {

struct BudgetAllocation {
  std::vector<double> budgets;
  double value = 0.0;  // sum of q_j(B_j)
  double spent = 0.0;  // sum of B_j
};

// Continuous greedy by steepest right derivative; ties go to the lowest
// class index. Leaves budget unspent once every q_j is saturated.
BudgetAllocation AllocateBudgets(const std::vector<PiecewiseLinearFn>& q,
                                 double budget);

// InsideOut DAG of one residual class with its zero-certificate schedule.
struct ClassPlan {
  StrategyDag io;
  DagSchedule schedule;
};

// Thread-safe memo of ClassPlans keyed by the residual class (k, probs).
class ClassPlanCache {
 public:
  explicit ClassPlanCache(size_t capacity = 256) : capacity_(capacity) {}

  std::shared_ptr<const ClassPlan> Get(const ClassSpec& cls);
  size_t size() const;
  size_t hits() const { return hits_; }

 private:
  using Key = std::pair<int, std::vector<double>>;
  mutable std::mutex mu_;
  std::map<Key, std::shared_ptr<const ClassPlan>> entries_;
  size_t capacity_;
  size_t hits_ = 0;
};

std::shared_ptr<const ClassPlan> BuildClassPlan(const ClassSpec& cls);

struct SteepestAscentPlan {
  InducedInstance induced;
  std::vector<std::shared_ptr<const ClassPlan>> classes;  // residual order
  std::vector<PiecewiseLinearFn> q;
  BudgetAllocation allocation;
  std::vector<StrategyDag> pruned;
  std::vector<std::vector<int>> to_global;  // per class: local -> global
};

// Throws kAlreadyCertified if sigma is a certificate.
SteepestAscentPlan PlanSteepestAscent(const Instance& inst,
                                      const PartialAssignment& sigma,
                                      double budget,
                                      ClassPlanCache* cache = nullptr);

struct SteepestAscentResult {
  Transcript transcript;
  bool found_zero = false;
  int classes_run = 0;
};

// Executes the pruned class strategies in ascending class order. Unless
// `faithful`, stops after the first class that yields a 0-certificate.
SteepestAscentResult RunSteepestAscent(const SteepestAscentPlan& plan,
                                       Executor& exec, Rng& rng,
                                       bool faithful);

// Exact P[0-certificate found] and E[cost] of a plan executed faithfully
// from sigma (classes are independent).
struct SteepestAscentExact {
  double zero_cert_prob = 0.0;
  double expected_cost = 0.0;
  double sum_of_class_probs = 0.0;
};

SteepestAscentExact ExactSteepestAscent(const SteepestAscentPlan& plan);

// CSV "class,budget,utility" (1-based original class indices).
std::string AllocationCsv(const SteepestAscentPlan& plan);

}  // namespace sbfe

#endif  // SBFE_STEEPEST_ASCENT_H_
