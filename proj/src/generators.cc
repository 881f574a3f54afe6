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


#include "sbfe/generators.h"

#include <cmath>
#include <functional>
#include <string>

#include "sbfe/error.h"

namespace sbfe {

int InverseEpsilon(double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw Error(ErrorCode::kBadRange, "eps must lie in (0, 1/2]");
  }
  const double inv = 1.0 / eps;
  const double r = std::round(inv);
  if (std::fabs(inv - r) > 1e-9 * r) {
    throw Error(ErrorCode::kParameterNotIntegral,
                "1/eps must be an integer, got " + std::to_string(inv));
  }
  return static_cast<int>(r);
}

ClassSpec Fig3Class(double eps) {
  const int m = InverseEpsilon(eps);
  const int m3 = m * m * m;
  ClassSpec cls;
  cls.k = m3 + 1;
  cls.probs.assign(m, 0.0);
  cls.probs.push_back(1.0 - eps);
  cls.probs.insert(cls.probs.end(), m3, 1.0 - eps * eps);
  return cls;
}

Instance Fig3Instance(double eps) { return Instance({Fig3Class(eps)}); }

Instance Fig2Instance(double eps, int max_classes) {
  const int m = InverseEpsilon(eps);
  int d = m * m;
  if (max_classes < 0) throw Error(ErrorCode::kBadRange, "max_classes < 0");
  if (max_classes > 0) d = std::min(d, max_classes);
  return Instance(std::vector<ClassSpec>(d, Fig3Class(eps)));
}

Instance PruneGapInstance(double eps) {
  const int m = InverseEpsilon(eps);
  const int n = m + 1;
  ClassSpec cls;
  cls.k = n - 1;
  cls.probs.assign(n, 1.0 - eps * eps);
  cls.probs[0] = 1.0 - eps;
  return Instance({cls});
}

Instance PruneGapInstanceForM(int m) {
  if (m < 1) throw Error(ErrorCode::kBadRange, "M must be >= 1");
  return PruneGapInstance(1.0 / (8.0 * m));
}

Instance IncreasingCounterInstance(double eps) {
  const int m = InverseEpsilon(eps);
  ClassSpec cls;
  cls.k = 1;
  cls.probs.assign(m, 0.0);
  cls.probs.push_back(1.0 - eps);
  return Instance({cls});
}

Instance DecreasingCounterInstance(const Instance& base, int extra,
                                   double p_near) {
  if (extra < 0) throw Error(ErrorCode::kBadRange, "extra must be >= 0");
  if (!(p_near >= 0.0 && p_near <= 1.0)) {
    throw Error(ErrorCode::kBadRange, "p_near must lie in [0, 1]");
  }
  std::vector<ClassSpec> classes = base.classes();
  for (ClassSpec& cls : classes) {
    cls.k += extra;
    cls.probs.insert(cls.probs.end(), extra, p_near);
  }
  return Instance(std::move(classes));
}

Instance RandomInstance(int n, int d, uint64_t seed, double lo, double hi) {
  if (n < 1 || d < 1 || d > n) {
    throw Error(ErrorCode::kBadRange, "need 1 <= d <= n");
  }
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
    throw Error(ErrorCode::kBadRange, "need 0 <= lo <= hi <= 1");
  }
  Rng rng(seed);
  std::vector<ClassSpec> classes(d);
  for (int j = 0; j < d; ++j) {
    const int size = n / d + (j < n % d ? 1 : 0);
    classes[j].k =
        1 + static_cast<int>(std::uniform_int_distribution<int>(0, size - 1)(
                rng));
    for (int i = 0; i < size; ++i) {
      classes[j].probs.push_back(lo + (hi - lo) * Uniform01(rng));
    }
  }
  return Instance(std::move(classes));
}

StrategyTree RandomStrategyTree(const Instance& inst, int max_internal,
                                Rng& rng) {
  StrategyTree tree;
  PartialAssignment sigma(inst.num_vars());
  int remaining = max_internal;
  std::function<int(int)> build = [&](int depth) -> int {
    const Certificate c = Classify(sigma, inst);
    const bool stop_early = depth > 0 && Uniform01(rng) < 0.15;
    if (c != Certificate::kNone || remaining == 0 || stop_early) {
      return tree.AddTerminal(LabelFor(c));
    }
    std::vector<int> free;
    for (int v = 0; v < inst.num_vars(); ++v) {
      if (!sigma.tested(v)) free.push_back(v);
    }
    const int var = free[static_cast<size_t>(Uniform01(rng) * free.size())];
    --remaining;
    sigma.Assign(var, false);
    const int c0 = build(depth + 1);
    sigma.Assign(var, true);
    const int c1 = build(depth + 1);
    sigma.Set(var, Value::kStar);
    return tree.AddTest(var, c0, c1);
  };
  tree.set_root(build(0));
  return tree.Compact();
}

}  // namespace sbfe
