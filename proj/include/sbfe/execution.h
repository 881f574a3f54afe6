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


#ifndef SBFE_EXECUTION_H_
#define SBFE_EXECUTION_H_

#include <cstdint>
#include <random>
#include <vector>

#include "sbfe/assignment.h"
#include "sbfe/instance.h"
#include "sbfe/strategy_dag.h"
#include "sbfe/strategy_tree.h"

namespace sbfe {

using Rng = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits.
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

uint64_t SplitMix64(uint64_t x);

// Full assignment of the variables, possibly materialized lazily.
class Realization {
 public:
  // Explicit values.
  explicit Realization(std::vector<uint8_t> values);
  // Variable i is active iff U(seed, i) < p_i, with U a counter-based hash.
  // Values are consistent however often or in whatever order they are read.
  Realization(uint64_t seed, const std::vector<double>& probs);

  static Realization Sample(const Instance& inst, Rng& rng);

  bool value(int var) const;
  int size() const { return size_; }

 private:
  std::vector<uint8_t> values_;
  const std::vector<double>* probs_ = nullptr;
  uint64_t seed_ = 0;
  int size_ = 0;
};

struct TestRecord {
  int var = -1;  // global index
  bool outcome = false;
  bool charged = true;
};

struct Transcript {
  std::vector<TestRecord> tests;
  std::vector<uint8_t> coin_flips;  // 1 = heads
  int cost = 0;                     // number of charged tests
  Label label = Label::kAbort;      // terminal reached by the strategy
  Certificate certificate = Certificate::kNone;  // status of the executor
};

// Shared test oracle for one run. Results already in `known` (or obtained
// earlier through this executor) are returned without charge unless
// `charge_known` is set.
class Executor {
 public:
  Executor(const Instance& inst, const Realization& realization);
  Executor(const Instance& inst, const Realization& realization,
           const PartialAssignment& known, bool charge_known = false);

  // Tests global variable `var` and appends to `log` if given.
  bool Test(int var, Transcript* log = nullptr);

  const PartialAssignment& state() const { return state_; }
  const Instance& instance() const { return inst_; }
  int cost() const { return cost_; }
  int reused() const { return reused_; }
  Certificate certificate() const {
    return ClassifyCounts(counts_, inst_);
  }
  const std::vector<ClassCounts>& counts() const { return counts_; }

 private:
  const Instance& inst_;
  const Realization& realization_;
  PartialAssignment state_;
  std::vector<ClassCounts> counts_;
  bool charge_known_ = false;
  int cost_ = 0;
  int reused_ = 0;
};

// Runs a strategy; `to_global` maps strategy variables to executor variables
// (identity if empty). The executor's certificate is recorded at the end.
Transcript Execute(const StrategyTree& tree, Executor& exec, Rng& rng,
                   const std::vector<int>& to_global = {});
Transcript Execute(const StrategyDag& dag, Executor& exec, Rng& rng,
                   const std::vector<int>& to_global = {});

}  // namespace sbfe

#endif  // SBFE_EXECUTION_H_
