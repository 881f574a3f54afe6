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


#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <unordered_map>

#include "sbfe/error.h"
#include "sbfe/oracles.h"

namespace sbfe {
namespace {

template <typename Scalar>
Scalar Tolerance() {
  return Scalar(0);
}
template <>
double Tolerance<double>() {
  return 1e-12;
}

double Abs(double x) { return std::fabs(x); }
Rational Abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Lagrangian dynamic program V(s) = 1 at 0-certificates, else
// max(0, max_g -lambda + p V(s + one in g) + q V(s + zero in g)), over
// states s of per-group (ones, zeros) counts.
template <typename Scalar>
class GroupedMp0 {
 public:
  struct Entry {
    Scalar value, cost, utility;
    int group;
  };

  GroupedMp0(const Instance& inst, const std::vector<Scalar>& probs)
      : inst_(inst),
        class_ones_(inst.num_classes(), 0),
        class_zeros_(inst.num_classes(), 0),
        dead_entry_{Scalar(1), Scalar(0), Scalar(1), -1},
        idle_entry_{Scalar(0), Scalar(0), Scalar(0), -1} {
    unsigned __int128 mult = 1;
    for (int j = 0; j < inst.num_classes(); ++j) {
      const int first = static_cast<int>(groups_.size());
      for (int v = inst.first_var(j); v < inst.first_var(j) + inst.class_size(j);
           ++v) {
        auto it = std::find_if(
            groups_.begin() + first, groups_.end(),
            [&](const Group& g) { return g.p == probs[v]; });
        if (it == groups_.end()) {
          groups_.push_back(Group{j, probs[v], {}, 0});
          it = groups_.end() - 1;
        }
        it->vars.push_back(v);
      }
    }
    for (Group& g : groups_) {
      g.mult = static_cast<uint64_t>(mult);
      const uint64_t radix = g.vars.size() + 1;
      mult *= radix * radix;
      if (mult > (static_cast<unsigned __int128>(1) << 63)) {
        throw Error(ErrorCode::kTooLarge, "MP0 state space too large");
      }
    }
    ones_.assign(groups_.size(), 0);
    zeros_.assign(groups_.size(), 0);
    for (int j = 0; j < inst.num_classes(); ++j) {
      if (inst.zero_threshold(j) <= 0) ++dead_;
    }
  }

  void SetLambda(const Scalar& lambda) {
    lambda_ = lambda;
    visited_ += memo_.size();
    memo_.clear();
  }
  size_t visited() const { return visited_ + memo_.size(); }

  const Entry& Solve() {
    if (dead_ > 0) return dead_entry_;
    if (satisfied_ == inst_.num_classes()) return idle_entry_;
    auto it = memo_.find(key_);
    if (it != memo_.end()) return it->second;
    Entry best = idle_entry_;
    for (size_t g = 0; g < groups_.size(); ++g) {
      const Group& grp = groups_[g];
      if (ones_[g] + zeros_[g] == static_cast<int>(grp.vars.size())) continue;
      Scalar value = -lambda_, cost(1), utility(0);
      if (grp.p != 0) {
        Add(g, true);
        const Entry& e = Solve();
        value += grp.p * e.value;
        cost += grp.p * e.cost;
        utility += grp.p * e.utility;
        Remove(g, true);
      }
      if (grp.p != 1) {
        const Scalar q = Scalar(1) - grp.p;
        Add(g, false);
        const Entry& e = Solve();
        value += q * e.value;
        cost += q * e.cost;
        utility += q * e.utility;
        Remove(g, false);
      }
      if (value > best.value) {
        best = Entry{value, cost, utility, static_cast<int>(g)};
      }
    }
    return memo_.emplace(key_, std::move(best)).first->second;
  }

  // Builds the chosen policy as a tree over the original variables.
  int Build(StrategyTree& tree) {
    const Entry& e = Solve();
    if (e.group < 0) {
      Certificate c = dead_ > 0 ? Certificate::kZero
                      : satisfied_ == inst_.num_classes() ? Certificate::kOne
                                                          : Certificate::kNone;
      return tree.AddTerminal(LabelFor(c));
    }
    const size_t g = e.group;
    const int var = groups_[g].vars[ones_[g] + zeros_[g]];
    Add(g, false);
    const int c0 = Build(tree);
    Remove(g, false);
    Add(g, true);
    const int c1 = Build(tree);
    Remove(g, true);
    return tree.AddTest(var, c0, c1);
  }

 private:
  struct Group {
    int cls;
    Scalar p;
    std::vector<int> vars;
    uint64_t mult;
  };

  void Add(size_t g, bool one) {
    const Group& grp = groups_[g];
    const int j = grp.cls;
    const uint64_t radix = grp.vars.size() + 1;
    if (one) {
      ++ones_[g];
      key_ += grp.mult * radix;
      if (++class_ones_[j] == inst_.threshold(j)) ++satisfied_;
    } else {
      ++zeros_[g];
      key_ += grp.mult;
      if (++class_zeros_[j] == inst_.zero_threshold(j)) ++dead_;
    }
  }

  void Remove(size_t g, bool one) {
    const Group& grp = groups_[g];
    const int j = grp.cls;
    const uint64_t radix = grp.vars.size() + 1;
    if (one) {
      --ones_[g];
      key_ -= grp.mult * radix;
      if (class_ones_[j]-- == inst_.threshold(j)) --satisfied_;
    } else {
      --zeros_[g];
      key_ -= grp.mult;
      if (class_zeros_[j]-- == inst_.zero_threshold(j)) --dead_;
    }
  }

  const Instance& inst_;
  std::vector<Group> groups_;
  std::vector<int> ones_, zeros_, class_ones_, class_zeros_;
  int dead_ = 0;
  int satisfied_ = 0;
  uint64_t key_ = 0;
  Scalar lambda_ = Scalar(0);
  std::unordered_map<uint64_t, Entry> memo_;
  size_t visited_ = 0;
  Entry dead_entry_, idle_entry_;
};

void CheckMp0Size(const Instance& inst) {
  if (inst.num_classes() > 1) CheckOracleSize(inst, kMaxMp0Vars, "mp0");
}

template <typename Scalar>
std::vector<Mp0ExactPoint<Scalar>> Sweep(const Instance& inst,
                                         const std::vector<Scalar>& probs,
                                         const Mp0Options& options,
                                         size_t* visited, int* evaluations) {
  CheckMp0Size(inst);
  if (static_cast<int>(probs.size()) != inst.num_vars()) {
    throw Error(ErrorCode::kLengthMismatch, "probability vector length");
  }
  GroupedMp0<Scalar> dp(inst, probs);
  const Scalar tol = Tolerance<Scalar>();
  auto evaluate = [&](const Scalar& lambda) {
    dp.SetLambda(lambda);
    const auto& e = dp.Solve();
    ++*evaluations;
    return Mp0ExactPoint<Scalar>{lambda, e.cost, e.utility};
  };
  auto same = [&](const Mp0ExactPoint<Scalar>& a,
                  const Mp0ExactPoint<Scalar>& b) {
    return Abs(Scalar(a.cost - b.cost)) <= tol &&
           Abs(Scalar(a.utility - b.utility)) <= tol;
  };
  std::vector<Mp0ExactPoint<Scalar>> points;
  // Every test has penalized value below zero once lambda exceeds 1.
  const Mp0ExactPoint<Scalar> hi = evaluate(Scalar(0));
  const Mp0ExactPoint<Scalar> lo = evaluate(Scalar(2));
  points.push_back(hi);
  points.push_back(lo);
  std::function<void(const Mp0ExactPoint<Scalar>&,
                     const Mp0ExactPoint<Scalar>&, int)>
      refine = [&](const Mp0ExactPoint<Scalar>& a,
                   const Mp0ExactPoint<Scalar>& b, int depth) {
        if (same(a, b) || depth >= 64) return;
        if (ToDouble(b.cost) >= options.max_budget) return;
        const Scalar dc = a.cost - b.cost;
        if (dc <= tol) return;
        const Scalar lambda = Scalar(a.utility - b.utility) / dc;
        const Mp0ExactPoint<Scalar> m = evaluate(lambda);
        const Scalar line = a.utility - lambda * a.cost;
        if (Scalar(m.utility - lambda * m.cost) <= line + tol) return;
        points.push_back(m);
        refine(a, m, depth + 1);
        refine(m, b, depth + 1);
      };
  refine(hi, lo, 0);
  std::sort(points.begin(), points.end(),
            [](const Mp0ExactPoint<Scalar>& a, const Mp0ExactPoint<Scalar>& b) {
              return a.cost != b.cost ? a.cost < b.cost
                                      : a.utility < b.utility;
            });
  std::vector<Mp0ExactPoint<Scalar>> unique;
  for (const auto& p : points) {
    if (unique.empty() || !same(unique.back(), p)) unique.push_back(p);
  }
  *visited = dp.visited();
  return unique;
}

}  // namespace

template <typename Scalar>
std::vector<Mp0ExactPoint<Scalar>> Mp0Points(const Instance& inst,
                                             const std::vector<Scalar>& probs,
                                             Mp0Options options) {
  size_t visited = 0;
  int evaluations = 0;
  return Sweep(inst, probs, options, &visited, &evaluations);
}

template std::vector<Mp0ExactPoint<double>> Mp0Points<double>(
    const Instance&, const std::vector<double>&, Mp0Options);
template std::vector<Mp0ExactPoint<Rational>> Mp0Points<Rational>(
    const Instance&, const std::vector<Rational>&, Mp0Options);

ParetoEnvelope Mp0Envelope(const Instance& inst, Mp0Options options) {
  ParetoEnvelope env;
  const auto points = Sweep<double>(inst, inst.probs(), options,
                                    &env.states_visited, &env.evaluations);
  std::vector<Breakpoint> raw;
  for (const auto& p : points) {
    env.vertices.push_back(Mp0Vertex{p.cost, p.utility, p.lambda});
    raw.push_back(Breakpoint{p.cost, p.utility});
  }
  env.q = ConcaveEnvelope(raw);
  return env;
}

StrategyTree Mp0WitnessPolicy(const Instance& inst, double lambda) {
  CheckOracleSize(inst, kMaxMp0Vars, "mp0 witness");
  GroupedMp0<double> dp(inst, inst.probs());
  dp.SetLambda(lambda);
  StrategyTree tree;
  tree.set_root(dp.Build(tree));
  return tree.Compact();
}

}  // namespace sbfe
