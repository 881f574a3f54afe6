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

#include "sbfe/error.h"
#include "sbfe/generators.h"
#include "sbfe/instance_json.h"

namespace sbfe {
namespace {

TEST(GeneratorsTest, Fig2Dimensions) {
  const Instance inst = Fig2Instance(0.1);
  ASSERT_EQ(inst.num_classes(), 100);
  for (int j = 0; j < 100; ++j) {
    EXPECT_EQ(inst.class_size(j), 1011);
    EXPECT_EQ(inst.threshold(j), 1001);
  }
  EXPECT_EQ(Fig2Instance(0.1, 25).num_classes(), 25);
}

TEST(GeneratorsTest, Fig3Class) {
  const ClassSpec cls = Fig3Class(0.1);
  EXPECT_EQ(cls.k, 1001);
  ASSERT_EQ(cls.probs.size(), 1011u);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(cls.probs[i], 0.0);
  EXPECT_DOUBLE_EQ(cls.probs[10], 0.9);
  EXPECT_DOUBLE_EQ(cls.probs[11], 0.99);
  EXPECT_DOUBLE_EQ(cls.probs[1010], 0.99);
}

TEST(GeneratorsTest, PruneGap) {
  const Instance inst = PruneGapInstanceForM(5);
  ASSERT_EQ(inst.num_vars(), 41);
  EXPECT_EQ(inst.threshold(0), 40);
  EXPECT_DOUBLE_EQ(inst.prob(0), 0.975);
  for (int i = 1; i < 41; ++i) EXPECT_DOUBLE_EQ(inst.prob(i), 0.999375);
  EXPECT_EQ(PruneGapInstance(0.025).probs(), inst.probs());
}

TEST(GeneratorsTest, Counters) {
  const Instance inc = IncreasingCounterInstance(0.1);
  EXPECT_EQ(inc.num_vars(), 11);
  EXPECT_EQ(inc.threshold(0), 1);
  EXPECT_DOUBLE_EQ(inc.prob(10), 0.9);
  const Instance dec = DecreasingCounterInstance(inc, 5);
  EXPECT_EQ(dec.num_vars(), 16);
  EXPECT_EQ(dec.threshold(0), 6);
  EXPECT_DOUBLE_EQ(dec.prob(15), 0.999);
}

TEST(GeneratorsTest, ParameterChecks) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kOk;
  };
  EXPECT_EQ(code([] { Fig3Class(0.3); }), ErrorCode::kParameterNotIntegral);
  EXPECT_EQ(code([] { Fig3Class(0.7); }), ErrorCode::kBadRange);
  EXPECT_EQ(code([] { Fig3Class(0.0); }), ErrorCode::kBadRange);
  EXPECT_EQ(code([] { RandomInstance(3, 4, 1); }), ErrorCode::kBadRange);
  EXPECT_EQ(code([] { RandomInstance(3, 1, 1, 0.8, 0.2); }),
            ErrorCode::kBadRange);
}

TEST(GeneratorsTest, RandomIsReproducible) {
  const Instance a = RandomInstance(6, 2, 1, 0.1, 0.9);
  const Instance b = RandomInstance(6, 2, 1, 0.1, 0.9);
  EXPECT_TRUE(ValidateInstance(a).ok());
  EXPECT_EQ(a.probs(), b.probs());
  EXPECT_EQ(a.threshold(0), b.threshold(0));
  EXPECT_EQ(a.num_classes(), 2);
  for (double p : a.probs()) {
    EXPECT_GE(p, 0.1);
    EXPECT_LE(p, 0.9);
  }
}

TEST(GeneratorsTest, RoundTripEveryFamily) {
  std::vector<Instance> all;
  for (double eps : {0.5, 0.25, 0.2, 0.1}) {
    all.push_back(Fig3Instance(eps));
    all.push_back(Fig2Instance(eps, 3));
    all.push_back(PruneGapInstance(eps));
    all.push_back(IncreasingCounterInstance(eps));
    all.push_back(DecreasingCounterInstance(IncreasingCounterInstance(eps), 3));
  }
  for (int n = 1; n <= 8; ++n) all.push_back(RandomInstance(n, 1 + n / 3, n));
  for (const Instance& inst : all) {
    const Instance back = InstanceFromJson(InstanceToJson(inst));
    EXPECT_TRUE(ValidateInstance(back).ok());
    EXPECT_EQ(back.probs(), inst.probs());
  }
}

}  // namespace
}  // namespace sbfe
