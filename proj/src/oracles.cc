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


#include "sbfe/oracles.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "sbfe/error.h"
#include "sbfe/expectations.h"

namespace sbfe {

void CheckOracleSize(const Instance& inst, int limit, const char* what) {
  if (inst.num_vars() > limit) {
    throw Error(ErrorCode::kTooLarge,
                std::string(what) + " supports n <= " + std::to_string(limit) +
                    ", got n = " + std::to_string(inst.num_vars()));
  }
}

namespace {

// Partial assignment with its base-3 key and class counts kept up to date.
class FullState {
 public:
  FullState(const Instance& inst, const PartialAssignment& sigma)
      : inst_(inst), pow3_(inst.num_vars()) {
    uint64_t p = 1;
    for (int i = 0; i < inst.num_vars(); ++i) {
      pow3_[i] = p;
      p *= 3;
    }
    Reset(sigma);
  }

  void Reset(const PartialAssignment& sigma) {
    sigma_ = sigma;
    counts_ = CountByClass(sigma, inst_);
    key_ = sigma.Key();
  }

  void Assign(int var, bool outcome) {
    sigma_.Assign(var, outcome);
    key_ -= (outcome ? 1 : 2) * pow3_[var];
    auto& c = counts_[inst_.class_of(var)];
    ++(outcome ? c.ones : c.zeros);
  }

  void Undo(int var) {
    const bool outcome = sigma_.get(var) == Value::kOne;
    sigma_.Set(var, Value::kStar);
    key_ += (outcome ? 1 : 2) * pow3_[var];
    auto& c = counts_[inst_.class_of(var)];
    --(outcome ? c.ones : c.zeros);
  }

  Certificate certificate() const { return ClassifyCounts(counts_, inst_); }
  bool tested(int var) const { return sigma_.tested(var); }
  uint64_t key() const { return key_; }
  const PartialAssignment& sigma() const { return sigma_; }

 private:
  const Instance& inst_;
  std::vector<uint64_t> pow3_;
  PartialAssignment sigma_;
  std::vector<ClassCounts> counts_;
  uint64_t key_ = 0;
};

template <typename Scalar>
class EvalDp {
 public:
  struct Entry {
    Scalar value;
    int var;
  };

  EvalDp(const Instance& inst, const std::vector<Scalar>& probs)
      : inst_(inst),
        probs_(probs),
        state_(inst, PartialAssignment(inst.num_vars())),
        terminal_{Scalar(0), -1} {}

  FullState& state() { return state_; }
  const std::unordered_map<uint64_t, Entry>& memo() const { return memo_; }

  const Entry& Solve() {
    if (state_.certificate() != Certificate::kNone) return terminal_;
    auto it = memo_.find(state_.key());
    if (it != memo_.end()) return it->second;
    Entry best{Scalar(0), -1};
    for (int v = 0; v < inst_.num_vars(); ++v) {
      if (state_.tested(v)) continue;
      const Scalar& p = probs_[v];
      Scalar val(1);
      if (p != 0) {
        state_.Assign(v, true);
        val += p * Solve().value;
        state_.Undo(v);
      }
      if (p != 1) {
        state_.Assign(v, false);
        val += (Scalar(1) - p) * Solve().value;
        state_.Undo(v);
      }
      if (best.var < 0 || val < best.value) best = Entry{val, v};
    }
    return memo_.emplace(state_.key(), std::move(best)).first->second;
  }

 private:
  const Instance& inst_;
  const std::vector<Scalar>& probs_;
  FullState state_;
  std::unordered_map<uint64_t, Entry> memo_;
  Entry terminal_;
};

}  // namespace

template <typename Scalar>
Scalar OptEvalCost(const Instance& inst, const std::vector<Scalar>& probs) {
  CheckOracleSize(inst, kMaxOracleVars, "opt_eval_cost");
  if (static_cast<int>(probs.size()) != inst.num_vars()) {
    throw Error(ErrorCode::kLengthMismatch, "probability vector length");
  }
  EvalDp<Scalar> dp(inst, probs);
  return dp.Solve().value;
}

template double OptEvalCost<double>(const Instance&,
                                    const std::vector<double>&);
template Rational OptEvalCost<Rational>(const Instance&,
                                        const std::vector<Rational>&);

double OptEvalCost(const Instance& inst) {
  return OptEvalCost<double>(inst, inst.probs());
}

struct OptimalPolicy::Impl {
  explicit Impl(const Instance& inst) : dp(inst, inst.probs()) {}
  EvalDp<double> dp;
  std::mutex mu;
};

OptimalPolicy::OptimalPolicy(const Instance& inst)
    : impl_(std::make_unique<Impl>(inst)) {
  CheckOracleSize(inst, kMaxOracleVars, "optimal policy");
  impl_->dp.Solve();
}

OptimalPolicy::~OptimalPolicy() = default;

double OptimalPolicy::expected_cost() {
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->dp.state().Reset(PartialAssignment(impl_->dp.state().sigma().size()));
  return impl_->dp.Solve().value;
}

int OptimalPolicy::NextTest(const PartialAssignment& sigma) {
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->dp.state().Reset(sigma);
  return impl_->dp.Solve().var;
}

int OptimalPolicy::Cost(const Realization& realization) {
  std::lock_guard<std::mutex> lock(impl_->mu);
  FullState& s = impl_->dp.state();
  s.Reset(PartialAssignment(s.sigma().size()));
  int cost = 0;
  while (true) {
    const int var = impl_->dp.Solve().var;
    if (var < 0) break;
    s.Assign(var, realization.value(var));
    ++cost;
  }
  return cost;
}

StrategyTree OptimalPolicy::ToTree() {
  std::lock_guard<std::mutex> lock(impl_->mu);
  FullState& s = impl_->dp.state();
  s.Reset(PartialAssignment(s.sigma().size()));
  StrategyTree tree;
  std::function<int()> build = [&]() -> int {
    const int var = impl_->dp.Solve().var;
    if (var < 0) return tree.AddTerminal(LabelFor(s.certificate()));
    s.Assign(var, false);
    const int c0 = build();
    s.Undo(var);
    s.Assign(var, true);
    const int c1 = build();
    s.Undo(var);
    return tree.AddTest(var, c0, c1);
  };
  tree.set_root(build());
  return tree.Compact();
}

size_t OptimalPolicy::states() const { return impl_->dp.memo().size(); }

template <typename Scalar>
Scalar MaxOneCertProb(const Instance& inst, const std::vector<Scalar>& probs,
                      const PartialAssignment& sigma, int budget) {
  CheckOracleSize(inst, kMaxOracleVars, "max_onecert_prob");
  if (budget < 0) throw Error(ErrorCode::kBadRange, "budget must be >= 0");
  const int n = inst.num_vars();
  budget = std::min(budget, n);
  FullState state(inst, sigma);
  std::unordered_map<uint64_t, Scalar> memo;
  std::function<Scalar(int)> solve = [&](int b) -> Scalar {
    const Certificate c = state.certificate();
    if (c == Certificate::kOne) return Scalar(1);
    if (c == Certificate::kZero || b == 0) return Scalar(0);
    const uint64_t key = state.key() * static_cast<uint64_t>(n + 1) + b;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Scalar best(0);
    for (int v = 0; v < n; ++v) {
      if (state.tested(v)) continue;
      const Scalar& p = probs[v];
      Scalar val(0);
      if (p != 0) {
        state.Assign(v, true);
        val += p * solve(b - 1);
        state.Undo(v);
      }
      if (p != 1) {
        state.Assign(v, false);
        val += (Scalar(1) - p) * solve(b - 1);
        state.Undo(v);
      }
      if (val > best) best = val;
    }
    memo.emplace(key, best);
    return best;
  };
  return solve(budget);
}

template double MaxOneCertProb<double>(const Instance&,
                                       const std::vector<double>&,
                                       const PartialAssignment&, int);
template Rational MaxOneCertProb<Rational>(const Instance&,
                                           const std::vector<Rational>&,
                                           const PartialAssignment&, int);

double MaxOneCertProb(const Instance& inst, int budget) {
  return MaxOneCertProb<double>(inst, inst.probs(),
                                PartialAssignment(inst.num_vars()), budget);
}

double ExpectedMinCertificateSize(const Instance& inst) {
  const int d = inst.num_classes();
  // P[class j has at least zbar_j zeros] by a Poisson-binomial pass.
  std::vector<double> dead(d);
  for (int j = 0; j < d; ++j) {
    const int n = inst.class_size(j);
    std::vector<double> dist(n + 1, 0.0);
    dist[0] = 1.0;
    for (int i = 0; i < n; ++i) {
      const double q = 1.0 - inst.class_spec(j).probs[i];
      for (int z = i + 1; z >= 1; --z) {
        dist[z] = dist[z] * (1.0 - q) + dist[z - 1] * q;
      }
      dist[0] *= 1.0 - q;
    }
    double tail = 0.0;
    for (int z = inst.zero_threshold(j); z <= n; ++z) tail += dist[z];
    dead[j] = tail;
  }
  std::vector<int> order(d);
  for (int j = 0; j < d; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.zero_threshold(a) < inst.zero_threshold(b);
  });
  // f = 0: smallest zbar among dead classes; f = 1: sum of thresholds.
  double expected = 0.0;
  double all_alive = 1.0;
  int ones_needed = 0;
  for (int j : order) {
    expected += all_alive * dead[j] * inst.zero_threshold(j);
    all_alive *= 1.0 - dead[j];
    ones_needed += inst.threshold(j);
  }
  return expected + all_alive * ones_needed;
}

std::vector<Breakpoint> EnumeratePrunings(const StrategyTree& tree,
                                          const Instance& inst,
                                          Target target) {
  if (tree.NumInternal() > kMaxPruningNodes) {
    throw Error(ErrorCode::kTooLarge,
                "enumerate_prunings supports at most " +
                    std::to_string(kMaxPruningNodes) + " internal nodes");
  }
  const TreePasses passes = ComputeTreePasses(tree, inst, target);
  // Unconditional (cost, utility) contributions of the subtree at `id`.
  std::function<std::vector<Breakpoint>(int)> walk =
      [&](int id) -> std::vector<Breakpoint> {
    const TreeNode& node = tree.node(id);
    const double reach = passes.reach[id];
    const double stop_value = Matches(passes.cert[id], target) ? reach : 0.0;
    if (node.kind == TreeNode::Kind::kTerminal) return {{0.0, stop_value}};
    const std::vector<Breakpoint> a = walk(node.child[0]);
    const std::vector<Breakpoint> b = walk(node.child[1]);
    std::vector<Breakpoint> out;
    const bool is_test = node.kind == TreeNode::Kind::kTest;
    if (is_test) out.push_back({0.0, stop_value});
    for (const Breakpoint& x : a) {
      for (const Breakpoint& y : b) {
        out.push_back({x.budget + y.budget + (is_test ? reach : 0.0),
                       x.value + y.value});
      }
    }
    return out;
  };
  return walk(tree.root());
}

std::vector<Breakpoint> EnumerateDeterministicStrategies(const Instance& inst,
                                                         Target target) {
  CheckOracleSize(inst, kMaxEnumerationVars, "strategy enumeration");
  FullState state(inst, PartialAssignment(inst.num_vars()));
  auto dedupe = [](std::vector<Breakpoint>& v) {
    std::sort(v.begin(), v.end(), [](const Breakpoint& a, const Breakpoint& b) {
      return a.budget != b.budget ? a.budget < b.budget : a.value < b.value;
    });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const Breakpoint& a, const Breakpoint& b) {
                          return a.budget == b.budget && a.value == b.value;
                        }),
            v.end());
  };
  std::function<std::vector<Breakpoint>()> walk =
      [&]() -> std::vector<Breakpoint> {
    const Certificate c = state.certificate();
    if (c != Certificate::kNone) return {{0.0, Matches(c, target) ? 1.0 : 0.0}};
    std::vector<Breakpoint> out = {{0.0, 0.0}};
    for (int v = 0; v < inst.num_vars(); ++v) {
      if (state.tested(v)) continue;
      const double p = inst.prob(v);
      state.Assign(v, true);
      const std::vector<Breakpoint> ones = walk();
      state.Undo(v);
      state.Assign(v, false);
      const std::vector<Breakpoint> zeros = walk();
      state.Undo(v);
      for (const Breakpoint& x : ones) {
        for (const Breakpoint& y : zeros) {
          out.push_back({1.0 + p * x.budget + (1.0 - p) * y.budget,
                         p * x.value + (1.0 - p) * y.value});
        }
      }
    }
    dedupe(out);
    return out;
  };
  return walk();
}

std::string EnvelopeCsv(const ParetoEnvelope& env) {
  std::string out = "budget,utility\n";
  for (const Breakpoint& b : env.q.breakpoints()) {
    out += FormatDouble(b.budget) + "," + FormatDouble(b.value) + "\n";
  }
  return out;
}

}  // namespace sbfe
