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


#include "sbfe/execution.h"

#include <utility>

namespace sbfe {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Realization::Realization(std::vector<uint8_t> values)
    : values_(std::move(values)), size_(static_cast<int>(values_.size())) {}

Realization::Realization(uint64_t seed, const std::vector<double>& probs)
    : probs_(&probs), seed_(seed), size_(static_cast<int>(probs.size())) {}

Realization Realization::Sample(const Instance& inst, Rng& rng) {
  std::vector<uint8_t> v(inst.num_vars());
  for (int i = 0; i < inst.num_vars(); ++i) {
    v[i] = Uniform01(rng) < inst.prob(i);
  }
  return Realization(std::move(v));
}

bool Realization::value(int var) const {
  if (probs_ == nullptr) return values_[var] != 0;
  const uint64_t h =
      SplitMix64(seed_ ^ SplitMix64(static_cast<uint64_t>(var) + 1));
  return static_cast<double>(h >> 11) * 0x1.0p-53 < (*probs_)[var];
}

Executor::Executor(const Instance& inst, const Realization& realization)
    : Executor(inst, realization, PartialAssignment(inst.num_vars())) {}

Executor::Executor(const Instance& inst, const Realization& realization,
                   const PartialAssignment& known, bool charge_known)
    : inst_(inst),
      realization_(realization),
      state_(known),
      counts_(CountByClass(known, inst)),
      charge_known_(charge_known) {
  if (realization.size() != inst.num_vars()) {
    throw Error(ErrorCode::kLengthMismatch,
                "realization size differs from instance");
  }
}

bool Executor::Test(int var, Transcript* log) {
  TestRecord rec;
  rec.var = var;
  if (state_.tested(var)) {
    rec.outcome = state_.get(var) == Value::kOne;
    rec.charged = charge_known_;
    ++reused_;
  } else {
    rec.outcome = realization_.value(var);
    rec.charged = true;
    state_.Assign(var, rec.outcome);
    ClassCounts& c = counts_[inst_.class_of(var)];
    (rec.outcome ? c.ones : c.zeros) += 1;
  }
  if (rec.charged) ++cost_;
  if (log != nullptr) {
    log->tests.push_back(rec);
    if (rec.charged) ++log->cost;
  }
  return rec.outcome;
}

namespace {

int Map(const std::vector<int>& to_global, int v) {
  return to_global.empty() ? v : to_global[v];
}

}  // namespace

Transcript Execute(const StrategyTree& tree, Executor& exec, Rng& rng,
                   const std::vector<int>& to_global) {
  Transcript tr;
  std::vector<int> on_path;
  int id = tree.root();
  while (true) {
    const TreeNode& n = tree.node(id);
    if (n.kind == TreeNode::Kind::kTerminal) {
      tr.label = n.label;
      break;
    }
    if (n.kind == TreeNode::Kind::kCoin) {
      const bool heads = Uniform01(rng) < n.alpha;
      tr.coin_flips.push_back(heads);
      id = n.child[heads ? 1 : 0];
      continue;
    }
    for (int v : on_path) {
      if (v == n.var) {
        throw Error(ErrorCode::kDuplicateTest,
                    "x" + std::to_string(n.var + 1) + " tested twice");
      }
    }
    on_path.push_back(n.var);
    const bool outcome = exec.Test(Map(to_global, n.var), &tr);
    id = n.child[outcome ? 1 : 0];
  }
  tr.certificate = exec.certificate();
  return tr;
}

Transcript Execute(const StrategyDag& dag, Executor& exec, Rng& rng,
                   const std::vector<int>& to_global) {
  Transcript tr;
  int t = 0, z = 0;
  while (true) {
    const double s = dag.stop(t, z);
    bool stop = s >= 1.0;
    if (!stop && s > 0.0) {
      stop = Uniform01(rng) < s;
      tr.coin_flips.push_back(stop);
    }
    if (stop) break;
    const bool outcome = exec.Test(Map(to_global, dag.sequence()[t]), &tr);
    ++t;
    if (!outcome) ++z;
  }
  tr.label = dag.LabelAt(t, z);
  tr.certificate = exec.certificate();
  return tr;
}

}  // namespace sbfe
