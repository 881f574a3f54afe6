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


#include "sbfe/matroid.h"

#include <algorithm>

namespace sbfe {

int MatroidOracle::Rank(std::span<const int> set) const {
  std::vector<int> basis;
  for (int e : set) {
    basis.push_back(e);
    if (!IsIndependent(basis)) basis.pop_back();
  }
  return static_cast<int>(basis.size());
}

PartitionMatroid::PartitionMatroid(const Instance& inst) {
  for (int j = 0; j < inst.num_classes(); ++j) {
    capacity_.push_back(std::max(0, inst.threshold(j)));
  }
  for (int v = 0; v < inst.num_vars(); ++v) part_.push_back(inst.class_of(v));
}

bool PartitionMatroid::IsIndependent(std::span<const int> set) const {
  std::vector<int> used(capacity_.size(), 0);
  for (int e : set) {
    if (++used[part_[e]] > capacity_[part_[e]]) return false;
  }
  return true;
}

int PartitionMatroid::Rank(std::span<const int> set) const {
  std::vector<int> used(capacity_.size(), 0);
  int rank = 0;
  for (int e : set) {
    if (used[part_[e]] < capacity_[part_[e]]) {
      ++used[part_[e]];
      ++rank;
    }
  }
  return rank;
}

int UniformMatroid::Rank(std::span<const int> set) const {
  return std::min(static_cast<int>(set.size()), k_);
}

PartitionTracker::PartitionTracker(const Instance& inst,
                                   const PartialAssignment& sigma)
    : inst_(inst), room_(inst.num_classes()) {
  const std::vector<ClassCounts> counts = CountByClass(sigma, inst);
  for (int j = 0; j < inst.num_classes(); ++j) {
    const int untested = inst.class_size(j) - counts[j].ones - counts[j].zeros;
    room_[j] = std::max(
        0, std::min(inst.threshold(j) - counts[j].ones, untested));
    deficit_ += room_[j];
  }
}

bool PartitionTracker::CanAdd(int e) const {
  return room_[inst_.class_of(e)] > 0;
}

void PartitionTracker::Add(int e) {
  --room_[inst_.class_of(e)];
  --deficit_;
}

OracleTracker::OracleTracker(const MatroidOracle& oracle,
                             const PartialAssignment& sigma)
    : oracle_(oracle) {
  std::vector<int> kept;
  for (int e = 0; e < oracle.ground_size(); ++e) {
    if (sigma.get(e) == Value::kOne) ones_.push_back(e);
    if (sigma.get(e) != Value::kZero) kept.push_back(e);
  }
  ones_rank_ = oracle.Rank(ones_);
  target_rank_ = oracle.Rank(kept);
}

bool OracleTracker::CanAdd(int e) const {
  std::vector<int> set = ones_;
  set.insert(set.end(), accepted_.begin(), accepted_.end());
  set.push_back(e);
  return oracle_.Rank(set) ==
         ones_rank_ + static_cast<int>(accepted_.size()) + 1;
}

void OracleTracker::Add(int e) { accepted_.push_back(e); }

bool OracleTracker::IsBasis() const {
  return ones_rank_ + static_cast<int>(accepted_.size()) == target_rank_;
}

}  // namespace sbfe
