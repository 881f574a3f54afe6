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


#ifndef SBFE_ASSIGNMENT_H_
#define SBFE_ASSIGNMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sbfe/instance.h"

namespace sbfe {

enum class Value : uint8_t { kZero = 0, kOne = 1, kStar = 2 };

enum class Certificate { kNone, kZero, kOne };

const char* CertificateName(Certificate c);

// Which certificates count as utility for pruning and MP0.
enum class Target { kZero, kOne, kAny };

inline bool Matches(Certificate c, Target t) {
  switch (t) {
    case Target::kZero:
      return c == Certificate::kZero;
    case Target::kOne:
      return c == Certificate::kOne;
    case Target::kAny:
      return c != Certificate::kNone;
  }
  return false;
}

class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(int n) : values_(n, Value::kStar) {}

  int size() const { return static_cast<int>(values_.size()); }
  Value get(int var) const { return values_[var]; }
  bool tested(int var) const { return values_[var] != Value::kStar; }
  void Set(int var, Value v) { values_[var] = v; }
  void Assign(int var, bool outcome) {
    values_[var] = outcome ? Value::kOne : Value::kZero;
  }
  const std::vector<Value>& values() const { return values_; }

  // Base-3 encoding (star = 2); only meaningful for small n.
  uint64_t Key() const;

  // Characters '0', '1', '*'.
  std::string ToString() const;
  static PartialAssignment FromString(const std::string& s);

  bool operator==(const PartialAssignment& o) const {
    return values_ == o.values_;
  }

 private:
  std::vector<Value> values_;
};

struct ClassCounts {
  int ones = 0;
  int zeros = 0;
};

std::vector<ClassCounts> CountByClass(const PartialAssignment& sigma,
                                      const Instance& inst);

Certificate ClassifyCounts(const std::vector<ClassCounts>& counts,
                           const Instance& inst);

// Throws kLengthMismatch when sizes differ.
Certificate Classify(const PartialAssignment& sigma, const Instance& inst);

// Certificate status of a single k-of-n function from its counts.
inline Certificate ClassifyThreshold(int k, int n, int ones, int zeros) {
  if (zeros >= n - k + 1) return Certificate::kZero;
  if (ones >= k) return Certificate::kOne;
  return Certificate::kNone;
}

// Residual instance of f restricted by sigma. Satisfied classes are dropped;
// the others keep their untested variables with threshold k - ones.
struct InducedInstance {
  Instance instance;
  std::vector<int> to_global;     // residual var -> original var
  std::vector<int> source_class;  // residual class -> original class
};

InducedInstance Induce(const Instance& inst, const PartialAssignment& sigma);

}  // namespace sbfe

#endif  // SBFE_ASSIGNMENT_H_
