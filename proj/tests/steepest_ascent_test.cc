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


#include <cmath>

#include <gtest/gtest.h>

#include "sbfe/expectations.h"
#include "sbfe/generators.h"
#include "sbfe/inside_out.h"
#include "sbfe/oracles.h"
#include "sbfe/pruning.h"
#include "sbfe/steepest_ascent.h"

namespace sbfe {
namespace {

TEST(AllocateBudgetsTest, SteepestSlopeFirst) {
  const std::vector<PiecewiseLinearFn> q = {
      PiecewiseLinearFn({{0, 0}, {1, 0.5}}),
      PiecewiseLinearFn({{0, 0}, {2, 0.6}})};
  const BudgetAllocation a = AllocateBudgets(q, 2.0);
  EXPECT_DOUBLE_EQ(a.budgets[0], 1.0);
  EXPECT_DOUBLE_EQ(a.budgets[1], 1.0);
  EXPECT_NEAR(a.value, 0.8, 1e-12);
}

TEST(AllocateBudgetsTest, ZeroBudget) {
  const std::vector<PiecewiseLinearFn> q = {
      PiecewiseLinearFn({{0, 0.1}, {1, 0.5}}),
      PiecewiseLinearFn({{0, 0.2}, {2, 0.6}})};
  const BudgetAllocation a = AllocateBudgets(q, 0.0);
  EXPECT_EQ(a.budgets, (std::vector<double>{0.0, 0.0}));
  EXPECT_NEAR(a.value, 0.3, 1e-12);
}

TEST(AllocateBudgetsTest, SingleClassSaturates) {
  const std::vector<PiecewiseLinearFn> q = {
      PiecewiseLinearFn({{0, 0}, {1.5, 0.5}})};
  EXPECT_DOUBLE_EQ(AllocateBudgets(q, 4.0).budgets[0], 1.5);
  EXPECT_DOUBLE_EQ(AllocateBudgets(q, 1.0).budgets[0], 1.0);
}

TEST(SteepestAscentTest, Fig3ClassBudgetTwo) {
  const Instance inst = Fig3Instance(0.1);
  const SteepestAscentPlan plan =
      PlanSteepestAscent(inst, PartialAssignment(inst.num_vars()), 2.0);
  ASSERT_EQ(plan.allocation.budgets.size(), 1u);
  EXPECT_DOUBLE_EQ(plan.allocation.budgets[0], 2.0);
  const SteepestAscentExact e = ExactSteepestAscent(plan);
  const PiecewiseLinearFn q = ComputePruningFunction(
      BuildInsideOutDag(inst.class_spec(0)), Target::kZero);
  EXPECT_NEAR(e.zero_cert_prob, q(2.0), 1e-12);
  EXPECT_LE(e.expected_cost, 2.0 + 1e-9);
}

TEST(SteepestAscentTest, ZeroBudgetTestsNothing) {
  // Class 0 is satisfied; class 1 is one zero away from dying.
  const Instance inst(std::vector<ClassSpec>{{1, {0.5}}, {2, {0.5, 0.5}}});
  Realization r(std::vector<uint8_t>{1, 0, 1});
  Executor exec(inst, r);
  Rng rng(1);
  const SteepestAscentPlan plan =
      PlanSteepestAscent(inst, PartialAssignment::FromString("1**"), 0.0);
  const SteepestAscentResult res = RunSteepestAscent(plan, exec, rng, false);
  EXPECT_EQ(exec.cost(), 0);
  EXPECT_FALSE(res.found_zero);
}

TEST(SteepestAscentTest, GuaranteeAgainstMp0) {
  const double factor = 1.0 - std::exp(-1.0);
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 3 + seed % 6;
    const Instance inst = RandomInstance(n, 1 + seed % 3, seed);
    const PiecewiseLinearFn q_star = Mp0Envelope(inst).q;
    for (double b : {1.0, 2.0, 4.0, 8.0}) {
      const SteepestAscentExact e = ExactSteepestAscent(
          PlanSteepestAscent(inst, PartialAssignment(n), b));
      EXPECT_GE(e.zero_cert_prob,
                factor * std::min(1.0, q_star(b / 6)) - 1e-9);
      EXPECT_LE(e.expected_cost, b + 1e-9);
    }
  }
}

TEST(SteepestAscentTest, CacheReusesPlans) {
  ClassPlanCache cache;
  const Instance inst = Fig2Instance(0.5, 4);
  PlanSteepestAscent(inst, PartialAssignment(inst.num_vars()), 3.0, &cache);
  EXPECT_EQ(cache.size(), 1u);
  EXPECT_EQ(cache.hits(), 3u);
}

TEST(SteepestAscentTest, AllocationCsvHeader) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.3, 0.2}}, {2, {0.4, 0.6}}});
  const SteepestAscentPlan plan =
      PlanSteepestAscent(inst, PartialAssignment(4), 1.0);
  EXPECT_EQ(AllocationCsv(plan).rfind("class,budget,utility\n", 0), 0u);
}

}  // namespace
}  // namespace sbfe
