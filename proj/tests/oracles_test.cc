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

#include "sbfe/error.h"
#include "sbfe/expectations.h"
#include "sbfe/generators.h"
#include "sbfe/monte_carlo.h"
#include "sbfe/oracles.h"
#include "sbfe/rational.h"

namespace sbfe {
namespace {

double ProbabilityOfOne(const Instance& inst) {
  const int n = inst.num_vars();
  double total = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    PartialAssignment full(n);
    double p = 1;
    for (int i = 0; i < n; ++i) {
      const bool v = (mask >> i) & 1;
      full.Assign(i, v);
      p *= v ? inst.prob(i) : 1 - inst.prob(i);
    }
    if (Classify(full, inst) == Certificate::kOne) total += p;
  }
  return total;
}

TEST(OptEvalCostTest, Examples) {
  EXPECT_DOUBLE_EQ(OptEvalCost(Instance(std::vector<ClassSpec>{{1, {0.5}}})), 1.0);
  EXPECT_DOUBLE_EQ(OptEvalCost(Instance(std::vector<ClassSpec>{{1, {0.5, 0.5}}})), 1.5);
  EXPECT_DOUBLE_EQ(OptEvalCost(Instance(std::vector<ClassSpec>{{3, {1, 1, 1, 1}}})), 3.0);
  const Instance inst(std::vector<ClassSpec>{{1, {0.5, 0.5}}});
  EXPECT_EQ(OptEvalCost<Rational>(inst, ToRational(inst.probs())),
            Rational(3, 2));
}

TEST(OptEvalCostTest, SizeGuard) {
  try {
    OptEvalCost(RandomInstance(14, 2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(OptEvalCostTest, CertificateLowerBound) {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    const Instance inst = RandomInstance(3 + seed % 6, 1 + seed % 3, seed);
    EXPECT_GE(OptEvalCost(inst), ExpectedMinCertificateSize(inst) - 1e-12);
  }
  // Strict on the depth-first counterexample family.
  const Instance fig2 = Fig2Instance(0.5, 1);
  EXPECT_GT(OptEvalCost(fig2), ExpectedMinCertificateSize(fig2) + 0.1);
}

TEST(OptimalPolicyTest, TreeAndSamplerAgree) {
  const Instance inst = RandomInstance(6, 2, 3);
  OptimalPolicy policy(inst);
  const StrategyTree tree = policy.ToTree();
  EXPECT_NEAR(ExactExpectations(tree, inst).cost, OptEvalCost(inst), 1e-12);
  const MonteCarloSummary s =
      RunTrials(inst, 20000, 3, [&](int, const Realization& r, Rng&) {
        return TrialOutcome{static_cast<double>(policy.Cost(r)), "", ""};
      });
  EXPECT_NEAR(s.mean, OptEvalCost(inst), 4 * s.std_error);
}

TEST(MaxOneCertTest, Examples) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.9, 0.4}}});
  EXPECT_NEAR(MaxOneCertProb(inst, 2), 0.94, 1e-12);
  EXPECT_EQ(MaxOneCertProb(inst, 0), 0.0);
  EXPECT_EQ(MaxOneCertProb<double>(inst, inst.probs(),
                                   PartialAssignment::FromString("1*"), 0),
            1.0);
}

TEST(MaxOneCertTest, MonotoneAndReachesProbabilityOfOne) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = RandomInstance(3 + seed % 5, 1 + seed % 2, seed);
    double prev = 0;
    for (int b = 0; b <= inst.num_vars(); ++b) {
      const double v = MaxOneCertProb(inst, b);
      EXPECT_GE(v, prev - 1e-12);
      prev = v;
    }
    EXPECT_NEAR(prev, ProbabilityOfOne(inst), 1e-12);
  }
}

TEST(Mp0Test, SingleVariable) {
  const ParetoEnvelope env = Mp0Envelope(Instance(std::vector<ClassSpec>{{1, {0.9}}}));
  const auto& bp = env.q.breakpoints();
  ASSERT_EQ(bp.size(), 2u);
  EXPECT_DOUBLE_EQ(bp[0].budget, 0.0);
  EXPECT_DOUBLE_EQ(bp[0].value, 0.0);
  EXPECT_DOUBLE_EQ(bp[1].budget, 1.0);
  EXPECT_NEAR(bp[1].value, 0.1, 1e-15);
  EXPECT_EQ(EnvelopeCsv(env), "budget,utility\n0,0\n1,0.1\n");
}

TEST(Mp0Test, FreeCertificate) {
  const ParetoEnvelope env = Mp0Envelope(Instance(std::vector<ClassSpec>{{2, {0.5}}}));
  EXPECT_DOUBLE_EQ(env.q(0), 1.0);
  EXPECT_DOUBLE_EQ(env.q(5), 1.0);
}

TEST(Mp0Test, ConcaveMonotoneAndWitnessed) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = RandomInstance(3 + seed % 5, 1 + seed % 3, seed);
    const ParetoEnvelope env = Mp0Envelope(inst);
    EXPECT_TRUE(env.q.IsConcave());
    EXPECT_TRUE(env.q.IsMonotone());
    for (const Mp0Vertex& v : env.vertices) {
      const Expectations e =
          ExactExpectations(Mp0WitnessPolicy(inst, v.lambda), inst);
      EXPECT_NEAR(e.cost, v.cost, 1e-9);
      EXPECT_NEAR(e.u0, v.utility, 1e-9);
    }
  }
}

TEST(Mp0Test, MatchesEnumerationOfStrategies) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 1 + seed % 3;
    const Instance inst = RandomInstance(n, 1 + seed % n, seed);
    const PiecewiseLinearFn brute = ConcaveEnvelope(
        EnumerateDeterministicStrategies(inst, Target::kZero));
    EXPECT_LE(MaxDifference(brute, Mp0Envelope(inst).q), 1e-12) << seed;
  }
}

TEST(Mp0Test, ExactRationalVertices) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.5, 0.25}}});
  const auto points = Mp0Points<Rational>(inst, ToRational(inst.probs()));
  const auto approx = Mp0Envelope(inst).vertices;
  ASSERT_EQ(points.size(), approx.size());
  for (size_t i = 0; i < points.size(); ++i) {
    EXPECT_DOUBLE_EQ(ToDouble(points[i].cost), approx[i].cost);
    EXPECT_DOUBLE_EQ(ToDouble(points[i].utility), approx[i].utility);
  }
}

TEST(Mp0Test, Fig3ClassAtBudgetTwo) {
  Mp0Options options;
  options.max_budget = 2.0;
  const ParetoEnvelope env = Mp0Envelope(Fig3Instance(0.1), options);
  EXPECT_NEAR(env.q(2.0), 0.1, 1e-9);
}

TEST(EnumeratePruningsTest, Examples) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.5, 0.5, 0.5}}});
  StrategyTree single;
  single.set_root(single.AddTest(0, single.AddTerminal(), single.AddTerminal()));
  const auto one = EnumeratePrunings(single, inst, Target::kZero);
  EXPECT_EQ(one.size(), 2u);
  EXPECT_EQ(EnumeratePrunings(StrategyTree(), inst, Target::kZero).size(), 1u);
  StrategyTree chain;
  int node = chain.AddTerminal();
  for (int v = 2; v >= 0; --v) node = chain.AddTest(v, node, chain.AddTerminal());
  chain.set_root(node);
  chain.AssignLabels(inst);
  const auto four = EnumeratePrunings(chain, inst, Target::kZero);
  ASSERT_EQ(four.size(), 4u);
  EXPECT_DOUBLE_EQ(four[0].budget, 0.0);
  EXPECT_DOUBLE_EQ(four[3].budget, 1.75);
  EXPECT_DOUBLE_EQ(four[3].value, 0.125);
}

TEST(MonteCarloTest, DeterministicInstance) {
  const Instance inst(std::vector<ClassSpec>{{2, {1.0, 0.0, 1.0}}});
  const MonteCarloSummary s =
      RunTrials(inst, 1000, 1, [&](int, const Realization& r, Rng&) {
        OptimalPolicy p(inst);
        return TrialOutcome{static_cast<double>(p.Cost(r)), "x", ""};
      });
  EXPECT_EQ(s.std_error, 0.0);
  EXPECT_DOUBLE_EQ(s.mean, OptEvalCost(inst));
}

TEST(MonteCarloTest, OptimalReplayMean) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.5, 0.5}}});
  OptimalPolicy policy(inst);
  const MonteCarloSummary s =
      RunTrials(inst, 1000000, 7, [&](int, const Realization& r, Rng&) {
        return TrialOutcome{static_cast<double>(policy.Cost(r)), "", ""};
      });
  EXPECT_NEAR(s.mean, 1.5, 4 * s.std_error);
}

TEST(MonteCarloTest, ReproducibleAcrossThreadCounts) {
  const Instance inst = RandomInstance(7, 2, 2);
  auto runner = [&](int, const Realization& r, Rng& rng) {
    double c = 0;
    for (int i = 0; i < inst.num_vars(); ++i) c += r.value(i);
    return TrialOutcome{c + Uniform01(rng), r.value(0) ? "a" : "b", ""};
  };
  const MonteCarloSummary a = RunTrials(inst, 5000, 42, runner, 1);
  const MonteCarloSummary b = RunTrials(inst, 5000, 42, runner, 4);
  EXPECT_EQ(a.costs, b.costs);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.histogram, b.histogram);
  EXPECT_EQ(TrialSeed(42, 0), TrialSeed(42, 0));
  EXPECT_NE(TrialSeed(42, 0), TrialSeed(42, 1));
}

}  // namespace
}  // namespace sbfe
