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


#include <gtest/gtest.h>

#include "sbfe/expectations.h"
#include "sbfe/generators.h"
#include "sbfe/inside_out.h"
#include "sbfe/oracles.h"
#include "sbfe/pruning.h"

namespace sbfe {
namespace {

using V = std::vector<int>;

TEST(RoundPlanTest, MixedProbabilities) {
  const RoundPlan plan = BuildRoundPlan({1, {0.2, 0.6, 0.9}});
  EXPECT_EQ(plan.low, V({0}));
  EXPECT_EQ(plan.high, V({1, 2}));
  EXPECT_EQ(plan.sequence, V({0, 1, 2}));
  EXPECT_EQ(plan.round_end, V({2, 3}));
}

TEST(RoundPlanTest, HalfGoesLow) {
  const RoundPlan plan = BuildRoundPlan({1, {0.5, 0.5}});
  EXPECT_EQ(plan.low, V({0, 1}));
  EXPECT_TRUE(plan.high.empty());
  EXPECT_EQ(plan.round_end, V({1, 2}));
}

TEST(RoundPlanTest, AllHigh) {
  const RoundPlan plan = BuildRoundPlan({2, {0.8, 0.6, 0.7}});
  EXPECT_TRUE(plan.low.empty());
  EXPECT_EQ(plan.high, V({1, 2, 0}));
  EXPECT_EQ(plan.round_end, V({1, 2, 3}));
}

TEST(InsideOutDagTest, SingleVariable) {
  const Expectations e = ExactExpectations(BuildInsideOutDag({1, {0.5}}));
  EXPECT_DOUBLE_EQ(e.cost, 1.0);
  EXPECT_DOUBLE_EQ(e.u0 + e.u1, 1.0);
}

TEST(InsideOutDagTest, RoundCompletionForcesBothTests) {
  const Expectations e =
      ExactExpectations(BuildInsideOutDag({2, {0.3, 0.6}}));
  EXPECT_DOUBLE_EQ(e.cost, 2.0);
}

TEST(InsideOutDagTest, OneOfThree) {
  const ClassSpec cls{1, {0.4, 0.3, 0.8}};
  const RoundPlan plan = BuildRoundPlan(cls);
  EXPECT_EQ(plan.sequence, V({0, 2, 1}));
  const StrategyDag dag = BuildInsideOutDag(cls);
  EXPECT_DOUBLE_EQ(dag.stop(2, 0), 1.0);
  EXPECT_DOUBLE_EQ(dag.stop(2, 1), 1.0);
  EXPECT_DOUBLE_EQ(dag.stop(2, 2), 0.0);
  EXPECT_NEAR(ExactExpectations(dag).cost, 2.0 + 0.6 * 0.2, 1e-12);
}

TEST(AmortizedCostTest, Examples) {
  EXPECT_EQ(AmortizedCost(0.3, false), 1);
  EXPECT_EQ(AmortizedCost(0.3, true), 0);
  EXPECT_EQ(AmortizedCost(0.9, true), 1);
  EXPECT_EQ(AmortizedCost(0.9, false), 0);
  EXPECT_EQ(AmortizedCost(0.5, false), 1);
}

TEST(OptimalEvaluationTreeTest, MatchesDynamicProgram) {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    const Instance inst = RandomInstance(2 + seed % 6, 1, seed);
    const Expectations e = ExactExpectations(
        BuildOptimalEvaluationTree(inst.class_spec(0)), inst);
    EXPECT_NEAR(e.cost, OptEvalCost(inst), 1e-9) << seed;
    EXPECT_NEAR(e.u0 + e.u1, 1.0, 1e-12);
  }
}

TEST(InsideOutTest, FactorSixAgainstMp0) {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    const Instance inst = RandomInstance(3 + seed % 5, 1, seed);
    const PiecewiseLinearFn q_io = ComputePruningFunction(
        BuildInsideOutDag(inst.class_spec(0)), Target::kZero);
    const PiecewiseLinearFn q_star = Mp0Envelope(inst).q;
    for (double b = 0; b <= inst.num_vars(); b += 0.25) {
      EXPECT_GE(q_io(6 * b), q_star(b) - 1e-9) << seed << " B=" << b;
    }
  }
}

TEST(InsideOutTest, Fig3ClassBeatsBudgetTwoOptimum) {
  const StrategyDag dag = BuildInsideOutDag(Fig3Class(0.1));
  const PiecewiseLinearFn q = ComputePruningFunction(dag, Target::kZero);
  EXPECT_GE(q(12.0), 0.1);
}

}  // namespace
}  // namespace sbfe
