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


#include "sbfe/assignment.h"

namespace sbfe {

const char* CertificateName(Certificate c) {
  switch (c) {
    case Certificate::kNone:
      return "none";
    case Certificate::kZero:
      return "zero";
    case Certificate::kOne:
      return "one";
  }
  return "?";
}

uint64_t PartialAssignment::Key() const {
  uint64_t key = 0;
  for (int i = size() - 1; i >= 0; --i) {
    key = key * 3 + static_cast<uint64_t>(values_[i]);
  }
  return key;
}

std::string PartialAssignment::ToString() const {
  std::string s(values_.size(), '*');
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == Value::kZero) s[i] = '0';
    if (values_[i] == Value::kOne) s[i] = '1';
  }
  return s;
}

PartialAssignment PartialAssignment::FromString(const std::string& s) {
  PartialAssignment a(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case '0':
        a.Set(i, Value::kZero);
        break;
      case '1':
        a.Set(i, Value::kOne);
        break;
      case '*':
        break;
      default:
        throw Error(ErrorCode::kParseError,
                    "bad assignment character '" + std::string(1, s[i]) + "'");
    }
  }
  return a;
}

std::vector<ClassCounts> CountByClass(const PartialAssignment& sigma,
                                      const Instance& inst) {
  if (sigma.size() != inst.num_vars()) {
    throw Error(ErrorCode::kLengthMismatch,
                "assignment has " + std::to_string(sigma.size()) +
                    " entries, instance has " +
                    std::to_string(inst.num_vars()) + " variables");
  }
  std::vector<ClassCounts> counts(inst.num_classes());
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma.get(i) == Value::kOne) ++counts[inst.class_of(i)].ones;
    if (sigma.get(i) == Value::kZero) ++counts[inst.class_of(i)].zeros;
  }
  return counts;
}

Certificate ClassifyCounts(const std::vector<ClassCounts>& counts,
                           const Instance& inst) {
  bool all_satisfied = true;
  for (int j = 0; j < inst.num_classes(); ++j) {
    if (counts[j].zeros >= inst.zero_threshold(j)) return Certificate::kZero;
    if (counts[j].ones < inst.threshold(j)) all_satisfied = false;
  }
  return all_satisfied ? Certificate::kOne : Certificate::kNone;
}

Certificate Classify(const PartialAssignment& sigma, const Instance& inst) {
  return ClassifyCounts(CountByClass(sigma, inst), inst);
}

InducedInstance Induce(const Instance& inst, const PartialAssignment& sigma) {
  const std::vector<ClassCounts> counts = CountByClass(sigma, inst);
  const Certificate c = ClassifyCounts(counts, inst);
  if (c != Certificate::kNone) {
    throw Error(ErrorCode::kAlreadyCertified,
                std::string("assignment is already a ") + CertificateName(c) +
                    "-certificate");
  }
  InducedInstance out;
  std::vector<ClassSpec> classes;
  for (int j = 0; j < inst.num_classes(); ++j) {
    if (counts[j].ones >= inst.threshold(j)) continue;
    ClassSpec spec;
    spec.k = inst.threshold(j) - counts[j].ones;
    for (int v = inst.first_var(j); v < inst.first_var(j) + inst.class_size(j);
         ++v) {
      if (sigma.tested(v)) continue;
      spec.probs.push_back(inst.prob(v));
      out.to_global.push_back(v);
    }
    classes.push_back(std::move(spec));
    out.source_class.push_back(j);
  }
  out.instance = Instance(std::move(classes));
  return out;
}

}  // namespace sbfe
