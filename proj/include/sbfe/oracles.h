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


#ifndef SBFE_ORACLES_H_
#define SBFE_ORACLES_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "sbfe/assignment.h"
#include "sbfe/execution.h"
#include "sbfe/instance.h"
#include "sbfe/piecewise_linear.h"
#include "sbfe/rational.h"
#include "sbfe/strategy_tree.h"

namespace sbfe {

// Size guards of the exhaustive oracles.
inline constexpr int kMaxOracleVars = 13;
inline constexpr int kMaxMp0Vars = 12;
inline constexpr int kMaxPruningNodes = 15;
inline constexpr int kMaxEnumerationVars = 4;

// Throws kTooLarge if inst.num_vars() > limit.
void CheckOracleSize(const Instance& inst, int limit, const char* what);

// Minimum expected number of tests of any evaluation strategy.
template <typename Scalar>
Scalar OptEvalCost(const Instance& inst, const std::vector<Scalar>& probs);
double OptEvalCost(const Instance& inst);

// Optimal evaluation policy over full partial assignments (ties go to the
// lowest variable index). States are solved lazily and memoized.
class OptimalPolicy {
 public:
  explicit OptimalPolicy(const Instance& inst);
  ~OptimalPolicy();

  double expected_cost();
  // Variable tested at sigma, or -1 if sigma is a certificate.
  int NextTest(const PartialAssignment& sigma);
  // Number of tests the policy performs on a realization.
  int Cost(const Realization& realization);
  StrategyTree ToTree();
  size_t states() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Maximum probability that a strategy performing at most `budget` tests on
// every realization ends with a 1-certificate, starting from sigma.
template <typename Scalar>
Scalar MaxOneCertProb(const Instance& inst, const std::vector<Scalar>& probs,
                      const PartialAssignment& sigma, int budget);
double MaxOneCertProb(const Instance& inst, int budget);

struct Mp0Vertex {
  double cost = 0.0;
  double utility = 0.0;
  double lambda = 0.0;  // penalty whose optimal policy yields this point
};

struct ParetoEnvelope {
  PiecewiseLinearFn q;
  std::vector<Mp0Vertex> vertices;  // all distinct Lagrangian points found
  size_t states_visited = 0;
  int evaluations = 0;
};

struct Mp0Options {
  // Intervals whose cheaper endpoint already costs at least this much are
  // not refined; the envelope is then exact on [0, max_budget].
  double max_budget = std::numeric_limits<double>::infinity();
};

// Exact max P[0-certificate] subject to E[cost] <= B, as a function of B.
// Variables of one class with equal probability are exchangeable, so the
// dynamic program runs over per-group (ones, zeros) counts. Guard: n <= 12
// or a single class.
ParetoEnvelope Mp0Envelope(const Instance& inst, Mp0Options options = {});

template <typename Scalar>
struct Mp0ExactPoint {
  Scalar lambda, cost, utility;
};

// Lagrangian vertices in exact or double arithmetic, cheapest first.
template <typename Scalar>
std::vector<Mp0ExactPoint<Scalar>> Mp0Points(const Instance& inst,
                                             const std::vector<Scalar>& probs,
                                             Mp0Options options = {});

// Deterministic optimal policy of the Lagrangian at `lambda`.
StrategyTree Mp0WitnessPolicy(const Instance& inst, double lambda);

// E[size of a smallest certificate of f(x)], a lower bound on OptEvalCost.
double ExpectedMinCertificateSize(const Instance& inst);

// (E[cost], E[U]) of every deterministic pruning of the tree.
std::vector<Breakpoint> EnumeratePrunings(const StrategyTree& tree,
                                          const Instance& inst,
                                          Target target);

// (E[cost], E[U]) of every deterministic strategy that stops exactly at
// certificates or earlier; duplicates removed.
std::vector<Breakpoint> EnumerateDeterministicStrategies(const Instance& inst,
                                                         Target target);

std::string EnvelopeCsv(const ParetoEnvelope& env);

}  // namespace sbfe

#endif  // SBFE_ORACLES_H_
