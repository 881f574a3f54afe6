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

#ifndef SBFE_INSTANCE_H_
#define SBFE_INSTANCE_H_

#include <string>
#include <vector>

#include "sbfe/error.h"

namespace sbfe {

// One partition class: a k-of-n threshold over its variables.
struct ClassSpec {
  int k = 1;
  std::vector<double> probs;
};

// A partition matroid with activation probabilities. Variables are numbered
// 0..n-1 internally in class order; user-facing surfaces add one.
//
// The constructor accepts degenerate thresholds (k <= 0 or k > n_j) because
// residual instances need them; ValidateInstance enforces the strict rules.
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::vector<ClassSpec> classes);

  static Instance Uniform(int k, std::vector<double> probs);

  int num_vars() const { return static_cast<int>(probs_.size()); }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const ClassSpec& class_spec(int j) const { return classes_[j]; }
  const std::vector<ClassSpec>& classes() const { return classes_; }
  int threshold(int j) const { return classes_[j].k; }
  int class_size(int j) const {
    return static_cast<int>(classes_[j].probs.size());
  }
  // n_j - k_j + 1: number of zeros that kills class j.
  int zero_threshold(int j) const { return class_size(j) - threshold(j) + 1; }
  int first_var(int j) const { return first_[j]; }
  int class_of(int var) const { return class_of_[var]; }
  double prob(int var) const { return probs_[var]; }
  const std::vector<double>& probs() const { return probs_; }

  std::string DebugString() const;

 private:
  std::vector<ClassSpec> classes_;
  std::vector<double> probs_;
  std::vector<int> class_of_;
  std::vector<int> first_;
};

struct Validation {
  ErrorCode code = ErrorCode::kOk;
  std::string message;
  bool ok() const { return code == ErrorCode::kOk; }
};

// Returns the first violated invariant, or kOk.
Validation ValidateInstance(const Instance& inst);

// Throws Error if ValidateInstance fails.
void CheckValid(const Instance& inst);

}  // namespace sbfe

#endif  // SBFE_INSTANCE_H_
