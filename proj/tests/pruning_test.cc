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
#include <limits>

#include <gtest/gtest.h>

#include "sbfe/expectations.h"
#include "sbfe/generators.h"
#include "sbfe/inside_out.h"
#include "sbfe/oracles.h"
#include "sbfe/piecewise_linear.h"
#include "sbfe/pruning.h"

namespace sbfe {
namespace {

StrategyTree SingleTest(const Instance& inst) {
  StrategyTree t;
  t.set_root(t.AddTest(0, t.AddTerminal(), t.AddTerminal()));
  t.AssignLabels(inst);
  return t;
}

TEST(PiecewiseLinearTest, EvaluateAndDerivative) {
  const PiecewiseLinearFn f({{0, 0}, {1, 0.5}, {2, 0.6}});
  EXPECT_DOUBLE_EQ(f(0.5), 0.25);
  EXPECT_DOUBLE_EQ(f(10), 0.6);
  EXPECT_DOUBLE_EQ(f.RightDerivative(0), 0.5);
  EXPECT_NEAR(f.RightDerivative(1), 0.1, 1e-12);
  EXPECT_DOUBLE_EQ(f.RightDerivative(2), 0.0);
  EXPECT_DOUBLE_EQ(f.NextBreakpoint(0.5), 1.0);
  EXPECT_TRUE(f.IsConcave());
  EXPECT_TRUE(f.IsMonotone());
}

TEST(ConcaveEnvelopeTest, Examples) {
  const PiecewiseLinearFn a = ConcaveEnvelope({{0, 0}, {1, 0.5}});
  EXPECT_DOUBLE_EQ(a.RightDerivative(0), 0.5);
  EXPECT_DOUBLE_EQ(a(5), 0.5);
  const PiecewiseLinearFn b = ConcaveEnvelope({{0, 0}, {1, 0.5}, {2, 0.6}});
  EXPECT_EQ(b.breakpoints().size(), 3u);
  const PiecewiseLinearFn c = ConcaveEnvelope({{0, 0}, {1, 0.2}, {2, 0.6}});
  ASSERT_EQ(c.breakpoints().size(), 2u);
  EXPECT_NEAR(c.RightDerivative(0), 0.3, 1e-12);
}

TEST(PruningFunctionTest, SingleTest) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.5}}});
  const PiecewiseLinearFn q =
      ComputePruningFunction(SingleTest(inst), inst, Target::kZero);
  EXPECT_DOUBLE_EQ(q(1), 0.5);
  EXPECT_DOUBLE_EQ(q(std::numeric_limits<double>::infinity()), 0.5);
  EXPECT_DOUBLE_EQ(q.saturation_budget(), 1.0);
  EXPECT_DOUBLE_EQ(q(0), 0.0);
}

TEST(PruningFunctionTest, FreeCertificate) {
  const Instance inst(std::vector<ClassSpec>{{2, {0.5}}});  // zero threshold 0
  const PiecewiseLinearFn q =
      ComputePruningFunction(StrategyTree(), inst, Target::kZero);
  EXPECT_DOUBLE_EQ(q(0), 1.0);
  EXPECT_DOUBLE_EQ(q(3), 1.0);
}

TEST(PruningFunctionTest, Fig3TestYThenXs) {
  const ClassSpec cls = Fig3Class(0.1);
  const Instance inst({cls});
  // y is variable 10; the x's are 0..9.
  StrategyTree t;
  int chain = t.AddTerminal();
  for (int x = 9; x >= 0; --x) chain = t.AddTest(x, chain, t.AddTerminal());
  t.set_root(t.AddTest(10, chain, t.AddTerminal()));
  t.AssignLabels(inst);
  const Expectations e = ExactExpectations(t, inst);
  EXPECT_NEAR(e.cost, 2.0, 1e-12);
  EXPECT_NEAR(e.u0, 0.1, 1e-12);
  const PiecewiseLinearFn q = ComputePruningFunction(t, inst, Target::kZero);
  EXPECT_NEAR(q(2.0), 0.1, 1e-12);
}

TEST(PrunedStrategyTest, RandomStopAtRoot) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.5}}});
  const StrategyTree pruned =
      ComputePrunedStrategy(SingleTest(inst), inst, Target::kZero, 0.4);
  const TreeNode& root = pruned.node(pruned.root());
  ASSERT_EQ(root.kind, TreeNode::Kind::kCoin);
  EXPECT_NEAR(root.alpha, 0.6, 1e-12);
  const Expectations e = ExactExpectations(pruned, inst);
  EXPECT_NEAR(e.cost, 0.4, 1e-12);
  EXPECT_NEAR(e.u0, 0.2, 1e-12);
}

TEST(PrunedStrategyTest, LargeBudgetKeepsStrategy) {
  const ClassSpec cls{2, {0.3, 0.6, 0.8, 0.4}};
  const StrategyDag dag = BuildInsideOutDag(cls);
  const Expectations full = ExactExpectations(dag);
  const StrategyDag same =
      ComputePrunedStrategy(dag, Target::kZero, full.cost + 1);
  for (int i = 0; i < dag.num_states(); ++i) {
    EXPECT_EQ(same.stored_stop(i), dag.stored_stop(i));
  }
  const StrategyDag none = ComputePrunedStrategy(dag, Target::kZero, 0.0);
  EXPECT_DOUBLE_EQ(ExactExpectations(none).cost, 0.0);
}

TEST(PrunedStrategyTest, DagMatchesFunctionOnGrid) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = RandomInstance(7, 1, seed);
    const StrategyDag dag = BuildInsideOutDag(inst.class_spec(0));
    for (Target target : {Target::kZero, Target::kOne, Target::kAny}) {
      const DagSchedule sched = ComputeDagSchedule(dag, target);
      EXPECT_TRUE(sched.q.IsConcave());
      EXPECT_TRUE(sched.q.IsMonotone());
      for (double b = 0; b <= 7.0; b += 0.37) {
        const Expectations e =
            ExactExpectations(ComputePrunedStrategy(dag, sched, target, b));
        EXPECT_LE(e.cost, b + 1e-9);
        EXPECT_NEAR(e.utility(target), sched.q(b), 1e-9);
      }
    }
  }
}

TEST(PruningOracleTest, RandomTreesMatchEnumeration) {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const Instance inst = RandomInstance(2 + i % 4, 1 + i % 2, 100 + i);
    const StrategyTree tree = RandomStrategyTree(inst, 10, rng);
    const PiecewiseLinearFn q =
        ComputePruningFunction(tree, inst, Target::kZero);
    const PiecewiseLinearFn env =
        ConcaveEnvelope(EnumeratePrunings(tree, inst, Target::kZero));
    EXPECT_LE(MaxDifference(q, env), 1e-9) << i;
  }
}

}  // namespace
}  // namespace sbfe
