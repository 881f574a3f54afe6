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


#include "sbfe/monte_carlo.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "sbfe/error.h"
#include "sbfe/piecewise_linear.h"

namespace sbfe {

uint64_t TrialSeed(uint64_t seed, uint64_t trial) {
  return SplitMix64(seed + (trial + 1) * 0x9E3779B97F4A7C15ULL);
}

int NumWorkers() {
  if (const char* env = std::getenv("SBFE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::pair<double, double> MeanAndStdError(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / xs.size();
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double var = ss / (xs.size() - 1);
  return {mean, std::sqrt(var / xs.size())};
}

MonteCarloSummary RunTrials(const Instance& inst, int trials, uint64_t seed,
                            const TrialRunner& runner, int threads) {
  if (trials < 1) throw Error(ErrorCode::kBadRange, "trials must be >= 1");
  if (threads <= 0) threads = NumWorkers();
  threads = std::min(threads, trials);
  std::vector<TrialOutcome> outcomes(trials);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= trials) return;
      try {
        const uint64_t ts = TrialSeed(seed, i);
        Realization realization(ts, inst.probs());
        Rng rng(SplitMix64(ts ^ 0xD1B54A32D192ED03ULL));
        outcomes[i] = runner(i, realization, rng);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = trials;
      }
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  MonteCarloSummary s;
  s.trials = trials;
  s.costs.reserve(trials);
  for (TrialOutcome& o : outcomes) {
    s.costs.push_back(o.cost);
    ++s.histogram[o.terminal];
    s.log += o.log;
  }
  std::tie(s.mean, s.std_error) = MeanAndStdError(s.costs);
  return s;
}

std::string SummaryCsv(const MonteCarloSummary& s) {
  std::string out = "trials,mean_cost,std_error\n";
  out += std::to_string(s.trials) + "," + FormatDouble(s.mean) + "," +
         FormatDouble(s.std_error) + "\n";
  out += "terminal,count\n";
  for (const auto& [k, v] : s.histogram) {
    out += k + "," + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace sbfe
