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


#ifndef SBFE_MBT_ALG_H_
#define SBFE_MBT_ALG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sbfe/assignment.h"
#include "sbfe/execution.h"
#include "sbfe/instance.h"
#include "sbfe/steepest_ascent.h"

namespace sbfe {

// Approximation-ratio constant 14 + 14 / (1 - 2/e).
double RatioBound();

struct AlgOptions {
  // Replicates the pseudocode literally: SteepestAscent runs every class and
  // every phase runs both sub-strategies.
  bool faithful = false;
  // Charge tests whose outcome was already obtained in the same phase.
  bool charge_reused = false;
  // Keep per-phase transcripts (costly for large instances).
  bool keep_log = true;
};

struct PhaseRecord {
  int phase = 0;
  Transcript opt1;
  Transcript steepest_ascent;
  bool steepest_ascent_skipped = false;
  int charged = 0;
  int reused = 0;
  Certificate certificate = Certificate::kNone;
  std::string sigma;  // snapshot for n <= 64, else empty
};

struct AlgRun {
  int cost = 0;
  int reused = 0;
  int phases = 0;  // phases executed
  Certificate certificate = Certificate::kNone;
  bool fallback_used = false;
  std::vector<PhaseRecord> log;
  PartialAssignment final_sigma;
};

// The phased algorithm: OPT1(sigma, 2^l) then SteepestAscent(sigma, 6 * 2^l).
class Alg {
 public:
  Alg(const Instance& inst, AlgOptions options = {});

  AlgRun Run(const Realization& realization, Rng& rng);

  int phase_cap() const { return phase_cap_; }
  ClassPlanCache& cache() { return cache_; }
  const Instance& instance() const { return inst_; }

 private:
  const Instance& inst_;
  AlgOptions options_;
  std::vector<int> order_;
  ClassPlanCache cache_;
  int phase_cap_;
};

// Baseline: evaluate the classes one after another, each with the optimal
// single-class evaluation order, stopping at the first dead class.
int RunDepthFirst(const Instance& inst, Executor& exec);

// Full evaluation in index order until a certificate.
int RunExhaustive(const Instance& inst, Executor& exec);

// Monte Carlo estimates of mu_l = P[no certificate after phase l] and
// mu*_l = P[cost of the optimal strategy >= 2^l], with binomial standard
// errors. Requires the exact optimal policy (n <= 13).
struct LatencyStats {
  int trials = 0;
  std::vector<double> mu, mu_se, mu_star, mu_star_se;
  double alg_mean_cost = 0.0;
  double opt_mean_cost = 0.0;
};

LatencyStats EstimateLatency(const Instance& inst, int trials, uint64_t seed,
                             AlgOptions options = {});

// Per-phase CSV rows "trial,phase,charged_cost,reused,certificate".
std::string PhaseLogCsv(int trial, const AlgRun& run);

}  // namespace sbfe

#endif  // SBFE_MBT_ALG_H_
