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


#ifndef SBFE_MONTE_CARLO_H_
#define SBFE_MONTE_CARLO_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sbfe/execution.h"
#include "sbfe/instance.h"

namespace sbfe {

// Seed of trial i: SplitMix64(seed + (i + 1) * golden gamma).
uint64_t TrialSeed(uint64_t seed, uint64_t trial);

// Worker count: SBFE_THREADS if set (>= 1), else hardware concurrency.
int NumWorkers();

struct TrialOutcome {
  double cost = 0.0;
  std::string terminal;  // histogram bucket
  std::string log;       // optional CSV rows
};

// A trial receives the realization drawn for it and a private generator for
// internal randomization, both derived from the trial seed.
using TrialRunner =
    std::function<TrialOutcome(int trial, const Realization&, Rng&)>;

struct MonteCarloSummary {
  int trials = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::map<std::string, int> histogram;
  std::vector<double> costs;  // by trial index
  std::string log;            // concatenated in trial order
};

// Results do not depend on the number of threads (0 = NumWorkers()).
MonteCarloSummary RunTrials(const Instance& inst, int trials, uint64_t seed,
                            const TrialRunner& runner, int threads = 0);

// Mean and standard error of a sample.
std::pair<double, double> MeanAndStdError(const std::vector<double>& xs);

std::string SummaryCsv(const MonteCarloSummary& s);

}  // namespace sbfe

#endif  // SBFE_MONTE_CARLO_H_
