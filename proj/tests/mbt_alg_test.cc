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
#include "sbfe/generators.h"
#include "sbfe/mbt_alg.h"
#include "sbfe/monte_carlo.h"
#include "sbfe/oracles.h"

namespace sbfe {
namespace {

int Tested(const PartialAssignment& sigma) {
  int count = 0;
  for (int v = 0; v < sigma.size(); ++v) count += sigma.tested(v) ? 1 : 0;
  return count;
}

TEST(AlgTest, RatioBoundConstant) {
  EXPECT_NEAR(RatioBound(), 66.982, 0.001);
}

TEST(AlgTest, SingleVariable) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.5}}});
  Alg alg(inst);
  for (uint8_t v : {0, 1}) {
    Realization r(std::vector<uint8_t>{v});
    Rng rng(3);
    const AlgRun run = alg.Run(r, rng);
    EXPECT_EQ(run.cost, 1);
    EXPECT_EQ(run.phases, 1);
    EXPECT_EQ(run.certificate, v ? Certificate::kOne : Certificate::kZero);
  }
}

TEST(AlgTest, DeterministicOnes) {
  const Instance inst(std::vector<ClassSpec>{{2, {1.0, 1.0}}});
  Alg alg(inst);
  Realization r(std::vector<uint8_t>{1, 1});
  Rng rng(3);
  const AlgRun run = alg.Run(r, rng);
  EXPECT_EQ(run.cost, 2);
  EXPECT_EQ(run.certificate, Certificate::kOne);
}

TEST(AlgTest, CertificateMatchesFunctionOnEveryRealization) {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 3 + seed % 6;
    const Instance inst = RandomInstance(n, 1 + seed % 3, seed);
    for (bool faithful : {false, true}) {
      AlgOptions options;
      options.faithful = faithful;
      Alg alg(inst, options);
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<uint8_t> values(n);
        PartialAssignment full(n);
        for (int i = 0; i < n; ++i) {
          values[i] = (mask >> i) & 1;
          full.Assign(i, values[i]);
        }
        Realization r(values);
        Rng rng(mask);
        const AlgRun run = alg.Run(r, rng);
        EXPECT_EQ(run.certificate, Classify(full, inst));
        EXPECT_FALSE(run.fallback_used);
        EXPECT_LE(run.cost, n);
        EXPECT_NE(Classify(run.final_sigma, inst), Certificate::kNone);
      }
    }
  }
}

TEST(AlgTest, ReusedResultsAreFreeByDefault) {
  const Instance inst = RandomInstance(8, 2, 4);
  Alg free_alg(inst), charged_alg(inst, AlgOptions{false, true, true});
  double free_sum = 0, charged_sum = 0;
  for (int i = 0; i < 2000; ++i) {
    Realization r(TrialSeed(9, i), inst.probs());
    Rng a(i), b(i);
    const AlgRun fr = free_alg.Run(r, a);
    const AlgRun cr = charged_alg.Run(r, b);
    free_sum += fr.cost;
    charged_sum += cr.cost;
    EXPECT_EQ(fr.cost, Tested(fr.final_sigma));
    EXPECT_EQ(cr.cost, Tested(cr.final_sigma) + cr.reused);
  }
  EXPECT_LE(free_sum, charged_sum);
}

TEST(AlgTest, Fig2BeatsDepthFirst) {
  const Instance inst = Fig2Instance(0.2, 25);
  Alg alg(inst, AlgOptions{false, false, false});
  double alg_sum = 0, df_sum = 0;
  const int trials = 300;
  for (int i = 0; i < trials; ++i) {
    Realization r(TrialSeed(1, i), inst.probs());
    Rng rng(i);
    alg_sum += alg.Run(r, rng).cost;
    Executor exec(inst, r);
    df_sum += RunDepthFirst(inst, exec);
    EXPECT_NE(exec.certificate(), Certificate::kNone);
  }
  EXPECT_LT(alg_sum, df_sum);
}

TEST(LatencyTest, PhaseZeroAlwaysCertifies) {
  const LatencyStats s = EstimateLatency(Instance(std::vector<ClassSpec>{{1, {0.3}}}), 500, 1);
  EXPECT_DOUBLE_EQ(s.mu[0], 0.0);
  EXPECT_DOUBLE_EQ(s.mu_star[0], 1.0);
}

TEST(LatencyTest, RecurrenceOnSmallInstance) {
  const Instance inst(std::vector<ClassSpec>{{2, {0.3, 0.7, 0.5}}});
  const LatencyStats s = EstimateLatency(inst, 100000, 5);
  for (size_t l = 1; l < s.mu.size(); ++l) {
    const double se = std::sqrt(s.mu_se[l] * s.mu_se[l] +
                                s.mu_se[l - 1] * s.mu_se[l - 1] / std::exp(2) +
                                s.mu_star_se[l] * s.mu_star_se[l]);
    EXPECT_LE(s.mu[l], s.mu[l - 1] / std::exp(1) + s.mu_star[l] + 3 * se);
  }
}

TEST(LatencyTest, NeedsOracle) {
  const Instance inst = RandomInstance(14, 1, 1);
  try {
    EstimateLatency(inst, 10, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleUnavailable);
  }
}

TEST(PhaseLogTest, CsvRows) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.5}}});
  Alg alg(inst);
  Realization r(std::vector<uint8_t>{1});
  Rng rng(1);
  EXPECT_EQ(PhaseLogCsv(4, alg.Run(r, rng)), "4,0,1,0,one\n");
}

}  // namespace
}  // namespace sbfe
