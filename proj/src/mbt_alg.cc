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


#include "sbfe/mbt_alg.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sbfe/error.h"
#include "sbfe/monte_carlo.h"
#include "sbfe/opt1.h"
#include "sbfe/oracles.h"

namespace sbfe {

double RatioBound() { return 14.0 + 14.0 / (1.0 - 2.0 / std::exp(1.0)); }

Alg::Alg(const Instance& inst, AlgOptions options)
    : inst_(inst),
      options_(options),
      order_(DecreasingProbabilityOrder(inst.probs())) {
  int log_n = 0;
  while ((1 << log_n) < std::max(1, inst.num_vars())) ++log_n;
  phase_cap_ = log_n + 2;
}

AlgRun Alg::Run(const Realization& realization, Rng& rng) {
  AlgRun run;
  PartialAssignment sigma(inst_.num_vars());
  Certificate cert = Classify(sigma, inst_);
  int phase = 0;
  while (cert == Certificate::kNone && phase <= phase_cap_) {
    PhaseRecord rec;
    rec.phase = phase;
    const int budget = 1 << phase;
    Executor exec(inst_, realization, sigma, options_.charge_reused);
    const Opt1Result o1 = Opt1Run(inst_, sigma, budget, exec, order_);
    const bool skip = !options_.faithful &&
                      (o1.verdict == Opt1Verdict::kFound1 ||
                       exec.certificate() != Certificate::kNone);
    if (!skip) {
      const SteepestAscentPlan plan =
          PlanSteepestAscent(inst_, sigma, 6.0 * budget, &cache_);
      SteepestAscentResult sa =
          RunSteepestAscent(plan, exec, rng, options_.faithful);
      if (options_.keep_log) rec.steepest_ascent = std::move(sa.transcript);
    }
    sigma = exec.state();
    cert = exec.certificate();
    run.cost += exec.cost();
    run.reused += exec.reused();
    ++run.phases;
    if (options_.keep_log) {
      rec.opt1 = o1.transcript;
      rec.steepest_ascent_skipped = skip;
      rec.charged = exec.cost();
      rec.reused = exec.reused();
      rec.certificate = cert;
      if (inst_.num_vars() <= 64) rec.sigma = sigma.ToString();
      run.log.push_back(std::move(rec));
    }
    ++phase;
  }
  if (cert == Certificate::kNone) {
    run.fallback_used = true;
    Executor exec(inst_, realization, sigma, options_.charge_reused);
    run.cost += RunExhaustive(inst_, exec);
    sigma = exec.state();
    cert = exec.certificate();
  }
  run.certificate = cert;
  run.final_sigma = std::move(sigma);
  return run;
}

int RunExhaustive(const Instance& inst, Executor& exec) {
  const int before = exec.cost();
  for (int v = 0; v < inst.num_vars(); ++v) {
    if (exec.certificate() != Certificate::kNone) break;
    if (!exec.state().tested(v)) exec.Test(v);
  }
  return exec.cost() - before;
}

int RunDepthFirst(const Instance& inst, Executor& exec) {
  const int before = exec.cost();
  for (int j = 0; j < inst.num_classes(); ++j) {
    if (exec.certificate() != Certificate::kNone) break;
    const int first = inst.first_var(j);
    const int n = inst.class_size(j);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), first);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return inst.prob(a) > inst.prob(b);
    });
    // The tested variables always form a window [left, right) of `order`.
    // The next test is the k'-th largest untested variable, where k' is the
    // residual threshold: left - 1 if left == k', else right.
    int left = inst.threshold(j);
    int right = left;
    while (true) {
      const ClassCounts& c = exec.counts()[j];
      if (ClassifyThreshold(inst.threshold(j), n, c.ones, c.zeros) !=
          Certificate::kNone) {
        break;
      }
      const int residual = inst.threshold(j) - c.ones;
      const int var = left == residual ? order[--left] : order[right++];
      exec.Test(var);
    }
  }
  return exec.cost() - before;
}

LatencyStats EstimateLatency(const Instance& inst, int trials, uint64_t seed,
                             AlgOptions options) {
  if (inst.num_vars() > kMaxOracleVars) {
    throw Error(ErrorCode::kOracleUnavailable,
                "exact optimal policy needs n <= " +
                    std::to_string(kMaxOracleVars));
  }
  options.keep_log = true;
  Alg alg(inst, options);
  OptimalPolicy opt(inst);
  const int phases = alg.phase_cap() + 1;
  std::vector<std::vector<uint8_t>> open(trials);
  std::vector<int> opt_cost(trials);
  std::vector<int> alg_cost(trials);
  RunTrials(inst, trials, seed,
            [&](int i, const Realization& r, Rng& rng) {
              const AlgRun run = alg.Run(r, rng);
              std::vector<uint8_t> row(phases, 0);
              for (int l = 0; l < phases; ++l) {
                row[l] = l < static_cast<int>(run.log.size())
                             ? run.log[l].certificate == Certificate::kNone
                             : run.fallback_used ? 1 : 0;
              }
              open[i] = std::move(row);
              opt_cost[i] = opt.Cost(r);
              alg_cost[i] = run.cost;
              return TrialOutcome{static_cast<double>(run.cost), "", ""};
            });
  LatencyStats s;
  s.trials = trials;
  auto se = [&](double m) { return std::sqrt(m * (1.0 - m) / trials); };
  for (int l = 0; l < phases; ++l) {
    double mu = 0.0, mu_star = 0.0;
    for (int i = 0; i < trials; ++i) {
      mu += open[i][l];
      mu_star += opt_cost[i] >= (1 << l) ? 1.0 : 0.0;
    }
    mu /= trials;
    mu_star /= trials;
    s.mu.push_back(mu);
    s.mu_se.push_back(se(mu));
    s.mu_star.push_back(mu_star);
    s.mu_star_se.push_back(se(mu_star));
  }
  for (int i = 0; i < trials; ++i) {
    s.alg_mean_cost += alg_cost[i];
    s.opt_mean_cost += opt_cost[i];
  }
  s.alg_mean_cost /= trials;
  s.opt_mean_cost /= trials;
  return s;
}

std::string PhaseLogCsv(int trial, const AlgRun& run) {
  std::string out;
  for (const PhaseRecord& rec : run.log) {
    out += std::to_string(trial) + "," + std::to_string(rec.phase) + "," +
           std::to_string(rec.charged) + "," + std::to_string(rec.reused) +
           "," + CertificateName(rec.certificate) + "\n";
  }
  return out;
}

}  // namespace sbfe
