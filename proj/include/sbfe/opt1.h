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


#ifndef SBFE_OPT1_H_
#define SBFE_OPT1_H_

#include <memory>
#include <vector>

#include "sbfe/assignment.h"
#include "sbfe/execution.h"
#include "sbfe/instance.h"
#include "sbfe/matroid.h"

namespace sbfe {

// Variables by decreasing probability, ties by ascending index.
std::vector<int> DecreasingProbabilityOrder(const std::vector<double>& probs);

enum class Opt1Verdict { kTest, kFound1, kBudgetExhausted, kListExhausted };

const char* Opt1VerdictName(Opt1Verdict v);

struct Opt1Step {
  Opt1Verdict verdict = Opt1Verdict::kTest;
  int var = -1;  // valid when verdict == kTest
};

// State of one OPT1(sigma, B) call. The candidate list is the untested part
// of a precomputed global order.
class Opt1State {
 public:
  Opt1State(const Instance& inst, const PartialAssignment& sigma, int budget,
            const std::vector<int>& order);
  Opt1State(const MatroidOracle& oracle, const PartialAssignment& sigma,
            int budget,
            const std::vector<int>& order);
  Opt1State(const Opt1State& other);

  // Next variable to test or the final verdict.
  Opt1Step Next();
  // Reports the outcome of the variable returned by the last Next().
  void Record(int var, bool outcome);

  int spent() const { return spent_; }
  const std::vector<int>& accepted() const { return accepted_; }

 private:
  std::unique_ptr<IndependenceTracker> tracker_;
  const PartialAssignment sigma_;
  const std::vector<int>& order_;
  size_t pos_ = 0;
  int budget_;
  int spent_ = 0;
  std::vector<int> accepted_;
};

struct Opt1Result {
  Opt1Verdict verdict = Opt1Verdict::kListExhausted;
  Transcript transcript;
};

// Runs OPT1 against the executor, whose known values seed sigma.
Opt1Result Opt1Run(const Instance& inst, const PartialAssignment& sigma,
                   int budget, Executor& exec,
                   const std::vector<int>& order);
Opt1Result Opt1Run(const Instance& inst, const PartialAssignment& sigma,
                   int budget, Executor& exec);
// Generic-matroid variant; independence comes from `oracle`.
Opt1Result Opt1Run(const MatroidOracle& oracle, const PartialAssignment& sigma,
                   int budget, Executor& exec, const std::vector<int>& order);

// Exact P[OPT1(sigma, B) returns Found1], by walking its outcome tree.
template <typename Scalar>
Scalar Opt1SuccessProbability(const Instance& inst,
                              const std::vector<Scalar>& probs,
                              const PartialAssignment& sigma, int budget);

double Opt1SuccessProbability(const Instance& inst, int budget);

}  // namespace sbfe

#endif  // SBFE_OPT1_H_
