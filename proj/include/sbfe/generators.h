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


#ifndef SBFE_GENERATORS_H_
#define SBFE_GENERATORS_H_

#include <cstdint>

#include "sbfe/execution.h"
#include "sbfe/instance.h"
#include "sbfe/strategy_tree.h"

namespace sbfe {

// Returns 1/eps; throws kBadRange unless eps is in (0, 1/2] and
// kParameterNotIntegral unless 1/eps is an integer.
int InverseEpsilon(double eps);

// One class: 1/eps variables with p = 0, one with p = 1 - eps, 1/eps^3 with
// p = 1 - eps^2; threshold 1/eps^3 + 1.
ClassSpec Fig3Class(double eps);
Instance Fig3Instance(double eps);

// 1/eps^2 copies of the Fig3 class, optionally capped at max_classes.
Instance Fig2Instance(double eps, int max_classes = 0);

// k-of-n with n = 1 + 1/eps, k = n - 1, p_1 = 1 - eps, others 1 - eps^2.
Instance PruneGapInstance(double eps);
// Same with eps = 1 / (8 M).
Instance PruneGapInstanceForM(int m);

// k = 1: 1/eps variables with p = 0, then one with p = 1 - eps.
Instance IncreasingCounterInstance(double eps);

// Appends `extra` variables with probability p_near to every class and
// raises each threshold by `extra`.
Instance DecreasingCounterInstance(const Instance& base, int extra,
                                   double p_near = 0.999);

// n variables split into d near-equal classes, thresholds uniform in
// [1, n_j], probabilities uniform in [lo, hi].
Instance RandomInstance(int n, int d, uint64_t seed, double lo = 0.05,
                        double hi = 0.95);

// Random deterministic test tree with at most max_internal test nodes;
// paths end early at certificates or at random.
StrategyTree RandomStrategyTree(const Instance& inst, int max_internal,
                                Rng& rng);

}  // namespace sbfe

#endif  // SBFE_GENERATORS_H_
