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


#include "sbfe/opt1.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sbfe/rational.h"

namespace sbfe {

std::vector<int> DecreasingProbabilityOrder(const std::vector<double>& probs) {
  std::vector<int> order(probs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return probs[a] > probs[b]; });
  return order;
}

const char* Opt1VerdictName(Opt1Verdict v) {
  switch (v) {
    case Opt1Verdict::kTest:
      return "test";
    case Opt1Verdict::kFound1:
      return "found1";
    case Opt1Verdict::kBudgetExhausted:
      return "budget_exhausted";
    case Opt1Verdict::kListExhausted:
      return "list_exhausted";
  }
  return "?";
}

Opt1State::Opt1State(const Instance& inst, const PartialAssignment& sigma,
                     int budget, const std::vector<int>& order)
    : tracker_(std::make_unique<PartitionTracker>(inst, sigma)),
      sigma_(sigma),
      order_(order),
      budget_(budget) {}

Opt1State::Opt1State(const MatroidOracle& oracle,
                     const PartialAssignment& sigma, int budget,
                     const std::vector<int>& order)
    : tracker_(std::make_unique<OracleTracker>(oracle, sigma)),
      sigma_(sigma),
      order_(order),
      budget_(budget) {}

Opt1State::Opt1State(const Opt1State& other)
    : tracker_(other.tracker_->Clone()),
      sigma_(other.sigma_),
      order_(other.order_),
      pos_(other.pos_),
      budget_(other.budget_),
      spent_(other.spent_),
      accepted_(other.accepted_) {}

Opt1Step Opt1State::Next() {
  if (tracker_->IsBasis()) return {Opt1Verdict::kFound1, -1};
  if (spent_ >= budget_) return {Opt1Verdict::kBudgetExhausted, -1};
  while (pos_ < order_.size()) {
    const int v = order_[pos_++];
    if (sigma_.tested(v)) continue;
    if (!tracker_->CanAdd(v)) continue;
    return {Opt1Verdict::kTest, v};
  }
  return {Opt1Verdict::kListExhausted, -1};
}

void Opt1State::Record(int var, bool outcome) {
  ++spent_;
  if (outcome) {
    tracker_->Add(var);
    accepted_.push_back(var);
  }
}

namespace {

Opt1Result RunState(Opt1State& state, Executor& exec) {
  Opt1Result result;
  while (true) {
    const Opt1Step step = state.Next();
    if (step.verdict != Opt1Verdict::kTest) {
      result.verdict = step.verdict;
      break;
    }
    state.Record(step.var, exec.Test(step.var, &result.transcript));
  }
  result.transcript.label = result.verdict == Opt1Verdict::kFound1
                                ? Label::kFound1
                                : Label::kAbort;
  result.transcript.certificate = exec.certificate();
  return result;
}

}  // namespace

Opt1Result Opt1Run(const Instance& inst, const PartialAssignment& sigma,
                   int budget, Executor& exec,
                   const std::vector<int>& order) {
  Opt1State state(inst, sigma, budget, order);
  return RunState(state, exec);
}

Opt1Result Opt1Run(const MatroidOracle& oracle, const PartialAssignment& sigma,
                   int budget, Executor& exec, const std::vector<int>& order) {
  Opt1State state(oracle, sigma, budget, order);
  return RunState(state, exec);
}

Opt1Result Opt1Run(const Instance& inst, const PartialAssignment& sigma,
                   int budget, Executor& exec) {
  const std::vector<int> order = DecreasingProbabilityOrder(inst.probs());
  return Opt1Run(inst, sigma, budget, exec, order);
}

template <typename Scalar>
Scalar Opt1SuccessProbability(const Instance& inst,
                              const std::vector<Scalar>& probs,
                              const PartialAssignment& sigma, int budget) {
  const std::vector<int> order = DecreasingProbabilityOrder(inst.probs());
  // OPT1's test sequence depends only on the outcomes so far; explore both
  // branches of every test.
  std::function<Scalar(Opt1State&)> walk = [&](Opt1State& state) -> Scalar {
    const Opt1Step step = state.Next();
    if (step.verdict == Opt1Verdict::kFound1) return Scalar(1);
    if (step.verdict != Opt1Verdict::kTest) return Scalar(0);
    Opt1State one = state;
    one.Record(step.var, true);
    Opt1State zero = state;
    zero.Record(step.var, false);
    const Scalar& p = probs[step.var];
    return p * walk(one) + (Scalar(1) - p) * walk(zero);
  };
  Opt1State root(inst, sigma, budget, order);
  return walk(root);
}

template double Opt1SuccessProbability<double>(const Instance&,
                                               const std::vector<double>&,
                                               const PartialAssignment&, int);
template Rational Opt1SuccessProbability<Rational>(
    const Instance&, const std::vector<Rational>&, const PartialAssignment&,
    int);

double Opt1SuccessProbability(const Instance& inst, int budget) {
  return Opt1SuccessProbability<double>(
      inst, inst.probs(), PartialAssignment(inst.num_vars()), budget);
}

}  // namespace sbfe
