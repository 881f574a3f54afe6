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


#ifndef SBFE_MATROID_H_
#define SBFE_MATROID_H_

#include <memory>
#include <span>
#include <vector>

#include "sbfe/assignment.h"
#include "sbfe/instance.h"

namespace sbfe {

// Independence oracle over ground set {0, ..., ground_size() - 1}.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  virtual int ground_size() const = 0;
  virtual bool IsIndependent(std::span<const int> set) const = 0;

  // Greedy rank; subclasses may override with a closed form.
  virtual int Rank(std::span<const int> set) const;
};

class PartitionMatroid : public MatroidOracle {
 public:
  explicit PartitionMatroid(const Instance& inst);

  int ground_size() const override { return static_cast<int>(part_.size()); }
  bool IsIndependent(std::span<const int> set) const override;
  int Rank(std::span<const int> set) const override;

  int num_parts() const { return static_cast<int>(capacity_.size()); }
  int part(int e) const { return part_[e]; }
  int capacity(int j) const { return capacity_[j]; }

 private:
  std::vector<int> part_;
  std::vector<int> capacity_;
};

class UniformMatroid : public MatroidOracle {
 public:
  UniformMatroid(int n, int k) : n_(n), k_(k) {}

  int ground_size() const override { return n_; }
  bool IsIndependent(std::span<const int> set) const override {
    return static_cast<int>(set.size()) <= k_;
  }
  int Rank(std::span<const int> set) const override;

 private:
  int n_;
  int k_;
};

// Incremental independence test in the matroid induced by a partial
// assignment: ones are contracted, zeros deleted.
class IndependenceTracker {
 public:
  virtual ~IndependenceTracker() = default;
  virtual bool CanAdd(int e) const = 0;
  virtual void Add(int e) = 0;
  virtual bool IsBasis() const = 0;
  virtual std::unique_ptr<IndependenceTracker> Clone() const = 0;
};

// Constant-time tracker for partition matroids.
class PartitionTracker : public IndependenceTracker {
 public:
  PartitionTracker(const Instance& inst, const PartialAssignment& sigma);

  bool CanAdd(int e) const override;
  void Add(int e) override;
  bool IsBasis() const override { return deficit_ == 0; }
  std::unique_ptr<IndependenceTracker> Clone() const override {
    return std::make_unique<PartitionTracker>(*this);
  }

 private:
  const Instance& inst_;
  std::vector<int> room_;  // remaining capacity per class
  int deficit_ = 0;        // sum of room_
};

// Rank-query tracker for any oracle.
class OracleTracker : public IndependenceTracker {
 public:
  OracleTracker(const MatroidOracle& oracle, const PartialAssignment& sigma);

  bool CanAdd(int e) const override;
  void Add(int e) override;
  bool IsBasis() const override;
  std::unique_ptr<IndependenceTracker> Clone() const override {
    return std::make_unique<OracleTracker>(*this);
  }

 private:
  const MatroidOracle& oracle_;
  std::vector<int> ones_;
  std::vector<int> accepted_;
  int ones_rank_ = 0;
  int target_rank_ = 0;
};

}  // namespace sbfe

#endif  // SBFE_MATROID_H_
