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


#include "sbfe/steepest_ascent.h"

#include <algorithm>
#include <limits>

#include "sbfe/expectations.h"
#include "sbfe/inside_out.h"

namespace sbfe {

BudgetAllocation AllocateBudgets(const std::vector<PiecewiseLinearFn>& q,
                                 double budget) {
  BudgetAllocation out;
  const int d = static_cast<int>(q.size());
  out.budgets.assign(d, 0.0);
  double total = 0.0;
  while (total < budget) {
    int best = -1;
    double slope = 0.0;
    for (int j = 0; j < d; ++j) {
      const double s = q[j].RightDerivative(out.budgets[j]);
      if (s > slope) {
        slope = s;
        best = j;
      }
    }
    if (best < 0) break;
    const double next = q[best].NextBreakpoint(out.budgets[best]);
    const double room = budget - total;
    if (next - out.budgets[best] <= room) {
      total += next - out.budgets[best];
      out.budgets[best] = next;
    } else {
      out.budgets[best] += room;
      total = budget;
    }
  }
  for (int j = 0; j < d; ++j) {
    out.value += q[j](out.budgets[j]);
    out.spent += out.budgets[j];
  }
  return out;
}

std::shared_ptr<const ClassPlan> BuildClassPlan(const ClassSpec& cls) {
  auto plan = std::make_shared<ClassPlan>();
  plan->io = BuildInsideOutDag(cls);
  plan->schedule = ComputeDagSchedule(plan->io, Target::kZero);
  return plan;
}

std::shared_ptr<const ClassPlan> ClassPlanCache::Get(const ClassSpec& cls) {
  Key key(cls.k, cls.probs);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      ++hits_;
      return it->second;
    }
  }
  std::shared_ptr<const ClassPlan> plan = BuildClassPlan(cls);
  std::lock_guard<std::mutex> lock(mu_);
  if (entries_.size() >= capacity_) entries_.clear();
  entries_.emplace(std::move(key), plan);
  return plan;
}

size_t ClassPlanCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

SteepestAscentPlan PlanSteepestAscent(const Instance& inst,
                                      const PartialAssignment& sigma,
                                      double budget, ClassPlanCache* cache) {
  SteepestAscentPlan plan;
  plan.induced = Induce(inst, sigma);
  const Instance& res = plan.induced.instance;
  for (int j = 0; j < res.num_classes(); ++j) {
    const ClassSpec& cls = res.class_spec(j);
    plan.classes.push_back(cache != nullptr ? cache->Get(cls)
                                            : BuildClassPlan(cls));
    plan.q.push_back(plan.classes.back()->schedule.q);
    std::vector<int> map(cls.probs.size());
    for (size_t v = 0; v < map.size(); ++v) {
      map[v] = plan.induced.to_global[res.first_var(j) + v];
    }
    plan.to_global.push_back(std::move(map));
  }
  plan.allocation = AllocateBudgets(plan.q, budget);
  for (int j = 0; j < res.num_classes(); ++j) {
    plan.pruned.push_back(ComputePrunedStrategy(
        plan.classes[j]->io, plan.classes[j]->schedule, Target::kZero,
        plan.allocation.budgets[j]));
  }
  return plan;
}

SteepestAscentResult RunSteepestAscent(const SteepestAscentPlan& plan,
                                       Executor& exec, Rng& rng,
                                       bool faithful) {
  SteepestAscentResult out;
  for (size_t j = 0; j < plan.pruned.size(); ++j) {
    const Transcript tr = Execute(plan.pruned[j], exec, rng, plan.to_global[j]);
    out.transcript.tests.insert(out.transcript.tests.end(), tr.tests.begin(),
                                tr.tests.end());
    out.transcript.coin_flips.insert(out.transcript.coin_flips.end(),
                                     tr.coin_flips.begin(),
                                     tr.coin_flips.end());
    out.transcript.cost += tr.cost;
    ++out.classes_run;
    if (!faithful && exec.certificate() == Certificate::kZero) break;
  }
  out.transcript.certificate = exec.certificate();
  out.found_zero = out.transcript.certificate == Certificate::kZero;
  out.transcript.label = out.found_zero ? Label::kFound0 : Label::kAbort;
  return out;
}

SteepestAscentExact ExactSteepestAscent(const SteepestAscentPlan& plan) {
  SteepestAscentExact out;
  double miss = 1.0;
  for (const StrategyDag& dag : plan.pruned) {
    const Expectations e = ExactExpectations(dag);
    out.expected_cost += e.cost;
    out.sum_of_class_probs += e.u0;
    miss *= 1.0 - e.u0;
  }
  out.zero_cert_prob = 1.0 - miss;
  return out;
}

std::string AllocationCsv(const SteepestAscentPlan& plan) {
  std::string out = "class,budget,utility\n";
  for (size_t j = 0; j < plan.q.size(); ++j) {
    const double b = plan.allocation.budgets[j];
    out += std::to_string(plan.induced.source_class[j] + 1) + "," +
           FormatDouble(b) + "," + FormatDouble(plan.q[j](b)) + "\n";
  }
  return out;
}

}  // namespace sbfe
