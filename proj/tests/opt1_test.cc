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

#include "sbfe/generators.h"
#include "sbfe/matroid.h"
#include "sbfe/opt1.h"
#include "sbfe/oracles.h"
#include "sbfe/rational.h"

namespace sbfe {
namespace {

TEST(Opt1Test, RankZeroIsImmediatelyFound) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.5, 0.5}}});
  const std::vector<int> order = DecreasingProbabilityOrder(inst.probs());
  Opt1State s(inst, PartialAssignment::FromString("1*"), 3, order);
  EXPECT_EQ(s.Next().verdict, Opt1Verdict::kFound1);
}

TEST(Opt1Test, HighestProbabilityFirst) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.9, 0.4}}});
  const std::vector<int> order = DecreasingProbabilityOrder(inst.probs());
  Opt1State s(inst, PartialAssignment(2), 2, order);
  const Opt1Step step = s.Next();
  EXPECT_EQ(step.verdict, Opt1Verdict::kTest);
  EXPECT_EQ(step.var, 0);
}

TEST(Opt1Test, SkipsDependentElements) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.5}}, {1, {0.8}}});
  const std::vector<int> order = DecreasingProbabilityOrder(inst.probs());
  Opt1State s(inst, PartialAssignment(2), 5, order);
  Opt1Step step = s.Next();
  ASSERT_EQ(step.var, 1);
  s.Record(1, true);
  step = s.Next();
  EXPECT_EQ(step.verdict, Opt1Verdict::kTest);
  EXPECT_EQ(step.var, 0);
}

TEST(Opt1Test, SuccessProbabilityExamples) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.9, 0.4}}});
  EXPECT_NEAR(Opt1SuccessProbability(inst, 2), 0.94, 1e-12);
  EXPECT_NEAR(Opt1SuccessProbability(inst, 1), 0.9, 1e-12);
  EXPECT_EQ(Opt1SuccessProbability(inst, 0), 0.0);
  EXPECT_NEAR(MaxOneCertProb(inst, 2), 0.94, 1e-12);
  EXPECT_NEAR(MaxOneCertProb(inst, 1), 0.9, 1e-12);
}

TEST(Opt1Test, ZeroBudgetDoesNotTest) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.9, 0.4}}});
  Realization r(std::vector<uint8_t>{1, 1});
  Executor exec(inst, r);
  const Opt1Result res = Opt1Run(inst, PartialAssignment(2), 0, exec);
  EXPECT_EQ(res.verdict, Opt1Verdict::kBudgetExhausted);
  EXPECT_EQ(exec.cost(), 0);
}

TEST(Opt1Test, MatchesOracleOnRandomInstances) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 2 + seed % 6;
    const Instance inst = RandomInstance(n, 1 + seed % std::min(3, n), seed);
    for (int b = 0; b <= n; ++b) {
      EXPECT_NEAR(Opt1SuccessProbability(inst, b), MaxOneCertProb(inst, b),
                  1e-9)
          << seed << " B=" << b;
    }
  }
}

TEST(Opt1Test, ExactRationalEquality) {
  const Instance inst(std::vector<ClassSpec>{{2, {0.25, 0.5, 0.75}}, {1, {0.125, 0.375}}});
  const std::vector<Rational> p = ToRational(inst.probs());
  const PartialAssignment empty(inst.num_vars());
  for (int b = 0; b <= 5; ++b) {
    EXPECT_EQ(Opt1SuccessProbability<Rational>(inst, p, empty, b),
              MaxOneCertProb<Rational>(inst, p, empty, b));
  }
}

TEST(Opt1Test, GenericOracleAgreesWithPartitionTracker) {
  const Instance inst = Instance::Uniform(2, {0.7, 0.2, 0.9, 0.5});
  const UniformMatroid m(4, 2);
  const std::vector<int> order = DecreasingProbabilityOrder(inst.probs());
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<uint8_t> values(4);
    for (int i = 0; i < 4; ++i) values[i] = (mask >> i) & 1;
    Realization r(values);
    Executor a(inst, r), b(inst, r);
    const Opt1Result ra = Opt1Run(inst, PartialAssignment(4), 3, a, order);
    const Opt1Result rb = Opt1Run(m, PartialAssignment(4), 3, b, order);
    EXPECT_EQ(ra.verdict, rb.verdict);
    EXPECT_EQ(a.cost(), b.cost());
  }
}

}  // namespace
}  // namespace sbfe
