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

#include "sbfe/instance.h"

#include <sstream>
#include <utility>

namespace sbfe {

Instance::Instance(std::vector<ClassSpec> classes)
    : classes_(std::move(classes)) {
  for (int j = 0; j < num_classes(); ++j) {
    first_.push_back(num_vars());
    for (double p : classes_[j].probs) {
      probs_.push_back(p);
      class_of_.push_back(j);
    }
  }
}

Instance Instance::Uniform(int k, std::vector<double> probs) {
  return Instance({ClassSpec{k, std::move(probs)}});
}

std::string Instance::DebugString() const {
  std::ostringstream out;
  out << "Instance(d=" << num_classes() << ", n=" << num_vars() << ")";
  for (int j = 0; j < num_classes(); ++j) {
    out << " [k=" << threshold(j) << ", n=" << class_size(j) << "]";
  }
  return out.str();
}

Validation ValidateInstance(const Instance& inst) {
  for (int j = 0; j < inst.num_classes(); ++j) {
    const ClassSpec& c = inst.class_spec(j);
    const std::string where = "class " + std::to_string(j + 1);
    if (c.probs.empty()) {
      return {ErrorCode::kEmptyClass, where + " has no variables"};
    }
    if (c.k < 1 || c.k > static_cast<int>(c.probs.size())) {
      return {ErrorCode::kThresholdOutOfRange,
              where + ": k=" + std::to_string(c.k) + " outside [1, " +
                  std::to_string(c.probs.size()) + "]"};
    }
    for (size_t i = 0; i < c.probs.size(); ++i) {
      const double p = c.probs[i];
      if (!(p >= 0.0 && p <= 1.0)) {
        return {ErrorCode::kProbabilityOutOfRange,
                where + ": probability " + std::to_string(p) +
                    " at position " + std::to_string(i + 1) +
                    " outside [0, 1]"};
      }
    }
  }
  return {};
}

void CheckValid(const Instance& inst) {
  Validation v = ValidateInstance(inst);
  if (!v.ok()) throw Error(v.code, v.message);
}

}  // namespace sbfe
