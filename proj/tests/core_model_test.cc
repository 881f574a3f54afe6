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

#include "sbfe/assignment.h"
#include "sbfe/error.h"
#include "sbfe/instance.h"
#include "sbfe/instance_json.h"
#include "sbfe/matroid.h"

namespace sbfe {
namespace {

Instance TwoClasses() { return Instance(std::vector<ClassSpec>{{1, {0.5, 0.5}}, {1, {0.9}}}); }

TEST(ValidateTest, AcceptsMinimalInstance) {
  EXPECT_TRUE(ValidateInstance(Instance(std::vector<ClassSpec>{{1, {0.5, 0.5}}})).ok());
}

TEST(ValidateTest, RejectsThresholdAboveClassSize) {
  EXPECT_EQ(ValidateInstance(Instance(std::vector<ClassSpec>{{3, {0.5, 0.5}}})).code,
            ErrorCode::kThresholdOutOfRange);
}

TEST(ValidateTest, RejectsProbabilityOutsideUnitInterval) {
  EXPECT_EQ(ValidateInstance(Instance(std::vector<ClassSpec>{{1, {1.2}}})).code,
            ErrorCode::kProbabilityOutOfRange);
}

TEST(ValidateTest, RejectsEmptyClass) {
  EXPECT_EQ(ValidateInstance(Instance(std::vector<ClassSpec>{{1, {}}})).code,
            ErrorCode::kEmptyClass);
  EXPECT_THROW(CheckValid(Instance(std::vector<ClassSpec>{{1, {}}})), Error);
}

TEST(ClassifyTest, Examples) {
  const Instance inst = TwoClasses();
  EXPECT_EQ(Classify(PartialAssignment::FromString("00*"), inst),
            Certificate::kZero);
  EXPECT_EQ(Classify(PartialAssignment::FromString("1*1"), inst),
            Certificate::kOne);
  EXPECT_EQ(Classify(PartialAssignment::FromString("***"), inst),
            Certificate::kNone);
  EXPECT_THROW(Classify(PartialAssignment::FromString("**"), inst), Error);
}

TEST(PartialAssignmentTest, StringRoundTripAndKey) {
  const PartialAssignment s = PartialAssignment::FromString("01*");
  EXPECT_EQ(s.ToString(), "01*");
  EXPECT_EQ(s.Key(), 0u + 1u * 3 + 2u * 9);
  EXPECT_THROW(PartialAssignment::FromString("0x"), Error);
}

TEST(InduceTest, OneObservedLowersThreshold) {
  const Instance inst(std::vector<ClassSpec>{{2, {0.3, 0.5, 0.7}}});
  const InducedInstance r =
      Induce(inst, PartialAssignment::FromString("1**"));
  ASSERT_EQ(r.instance.num_classes(), 1);
  EXPECT_EQ(r.instance.threshold(0), 1);
  EXPECT_EQ(r.instance.probs(), (std::vector<double>{0.5, 0.7}));
  EXPECT_EQ(r.to_global, (std::vector<int>{1, 2}));
}

TEST(InduceTest, ZeroOnlyShrinksClass) {
  const Instance inst(std::vector<ClassSpec>{{2, {0.3, 0.5, 0.7}}});
  const InducedInstance r =
      Induce(inst, PartialAssignment::FromString("0**"));
  EXPECT_EQ(r.instance.threshold(0), 2);
  EXPECT_EQ(r.instance.probs(), (std::vector<double>{0.5, 0.7}));
}

TEST(InduceTest, SatisfiedClassDropped) {
  const InducedInstance r =
      Induce(TwoClasses(), PartialAssignment::FromString("**1"));
  ASSERT_EQ(r.instance.num_classes(), 1);
  EXPECT_EQ(r.instance.threshold(0), 1);
  EXPECT_EQ(r.source_class, (std::vector<int>{0}));
}

TEST(InduceTest, CertifiedAssignmentRejected) {
  try {
    Induce(TwoClasses(), PartialAssignment::FromString("00*"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlreadyCertified);
  }
}

TEST(MatroidTest, PartitionIndependenceAndRank) {
  const PartitionMatroid m(Instance(std::vector<ClassSpec>{{1, {0.5, 0.5}}, {2, {0.1, 0.2, 0.3}}}));
  const std::vector<int> a = {0, 2, 3};
  const std::vector<int> b = {0, 1};
  EXPECT_TRUE(m.IsIndependent(a));
  EXPECT_FALSE(m.IsIndependent(b));
  const std::vector<int> all = {0, 1, 2, 3, 4};
  EXPECT_EQ(m.Rank(all), 3);
  const UniformMatroid u(4, 2);
  EXPECT_EQ(u.Rank(all), 2);
}

TEST(MatroidTest, TrackerAfterAcceptedOne) {
  const Instance inst(std::vector<ClassSpec>{{1, {0.5}}, {1, {0.8}}});
  PartitionTracker t(inst, PartialAssignment(2));
  ASSERT_TRUE(t.CanAdd(1));
  t.Add(1);
  EXPECT_FALSE(t.IsBasis());
  EXPECT_TRUE(t.CanAdd(0));
  const PartitionMatroid m(inst);
  OracleTracker o(m, PartialAssignment::FromString("*1"));
  EXPECT_FALSE(o.CanAdd(1));
  EXPECT_TRUE(o.CanAdd(0));
}

TEST(JsonTest, RoundTrip) {
  const Instance inst = TwoClasses();
  const Instance back = InstanceFromJson(InstanceToJson(inst));
  EXPECT_EQ(back.num_classes(), 2);
  EXPECT_EQ(back.probs(), inst.probs());
  EXPECT_EQ(back.threshold(1), 1);
}

TEST(JsonTest, StrictParsing) {
  auto code = [](const std::string& text) {
    try {
      InstanceFromJson(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("ok");
  };
  EXPECT_NE(code(R"({"classes":[{"k":1,"probs":[0.5]}],"extra":0})")
                .find("/extra"),
            std::string::npos);
  EXPECT_NE(code(R"({"classes":[{"k":1.5,"probs":[0.5]}]})").find("/classes/0/k"),
            std::string::npos);
  EXPECT_NE(code("{\n  \"classes\": [\n}").find("line 3"), std::string::npos);
}

}  // namespace
}  // namespace sbfe
