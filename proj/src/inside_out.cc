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


#include "sbfe/inside_out.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sbfe/assignment.h"

namespace sbfe {

RoundPlan BuildRoundPlan(const ClassSpec& cls) {
  RoundPlan plan;
  const int n = static_cast<int>(cls.probs.size());
  for (int i = 0; i < n; ++i) {
    (cls.probs[i] <= 0.5 ? plan.low : plan.high).push_back(i);
  }
  std::stable_sort(plan.low.begin(), plan.low.end(), [&](int a, int b) {
    return cls.probs[a] > cls.probs[b];
  });
  std::stable_sort(plan.high.begin(), plan.high.end(), [&](int a, int b) {
    return cls.probs[a] < cls.probs[b];
  });
  const size_t rounds = std::max(plan.low.size(), plan.high.size());
  for (size_t r = 0; r < rounds; ++r) {
    if (r < plan.low.size()) plan.sequence.push_back(plan.low[r]);
    if (r < plan.high.size()) plan.sequence.push_back(plan.high[r]);
    plan.round_end.push_back(static_cast<int>(plan.sequence.size()));
  }
  return plan;
}

StrategyDag BuildInsideOutDag(const ClassSpec& cls) {
  return BuildInsideOutDag(cls, BuildRoundPlan(cls));
}

StrategyDag BuildInsideOutDag(const ClassSpec& cls, const RoundPlan& plan) {
  const int n = static_cast<int>(cls.probs.size());
  const int k = cls.k;
  const int kbar = n - k + 1;
  // A round starts without a certificate and has at most two tests, so the
  // reachable states satisfy z <= kbar + 1 and t - z <= k + 1.
  std::vector<int> lo(n + 1), hi(n + 1);
  for (int t = 0; t <= n; ++t) {
    lo[t] = std::max(0, t - std::max(k, 0) - 1);
    hi[t] = std::min(t, std::max(kbar, 0) + 1);
    if (hi[t] < lo[t]) hi[t] = lo[t] = std::min(t, std::max(lo[t], 0));
  }
  StrategyDag dag(cls, plan.sequence, lo, hi);
  std::vector<char> is_end(n + 1, 0);
  is_end[0] = 1;
  for (int t : plan.round_end) is_end[t] = 1;
  for (int t = 0; t < n; ++t) {
    for (int z = dag.lo(t); z <= dag.hi(t); ++z) {
      const bool certified = dag.CertificateAt(t, z) != Certificate::kNone;
      dag.set_stop(t, z, is_end[t] && certified ? 1.0 : 0.0);
    }
  }
  return dag;
}

int AmortizedCost(double p, bool outcome) {
  return p <= 0.5 ? (outcome ? 0 : 1) : (outcome ? 1 : 0);
}

StrategyTree BuildOptimalEvaluationTree(const ClassSpec& cls) {
  const int n = static_cast<int>(cls.probs.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cls.probs[a] > cls.probs[b];
  });
  StrategyTree tree;
  std::vector<char> tested(n, 0);
  std::function<int(int, int)> build = [&](int ones, int zeros) -> int {
    const Certificate c = ClassifyThreshold(cls.k, n, ones, zeros);
    if (c != Certificate::kNone) return tree.AddTerminal(LabelFor(c));
    const int need = cls.k - ones;
    int seen = 0, pick = -1;
    for (int v : order) {
      if (tested[v]) continue;
      if (++seen == need) {
        pick = v;
        break;
      }
    }
    tested[pick] = 1;
    const int c0 = build(ones, zeros + 1);
    const int c1 = build(ones + 1, zeros);
    tested[pick] = 0;
    return tree.AddTest(pick, c0, c1);
  };
  tree.set_root(build(0, 0));
  return tree.Compact();
}

}  // namespace sbfe
