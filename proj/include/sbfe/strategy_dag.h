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


#ifndef SBFE_STRATEGY_DAG_H_
#define SBFE_STRATEGY_DAG_H_

#include <vector>

#include "sbfe/instance.h"
#include "sbfe/strategy_tree.h"

namespace sbfe {

// Elementary strategy for a single k-of-n class, stored as a DAG over states
// (t, z): t tests performed along a fixed sequence, z zeros among them. Each
// state stops with probability stop(t, z) and otherwise tests seq[t]. The
// terminal label at a stop is the certificate status of the counts.
//
// States are kept only inside a per-layer band lo(t) <= z <= hi(t). A state
// whose successor leaves the band, or with t == seq.size(), always stops.
class StrategyDag {
 public:
  StrategyDag() = default;
  // Full triangle band; never stops before the end of `seq`.
  StrategyDag(ClassSpec cls, std::vector<int> seq);
  StrategyDag(ClassSpec cls, std::vector<int> seq, std::vector<int> lo,
              std::vector<int> hi);

  const ClassSpec& class_spec() const { return cls_; }
  int k() const { return cls_.k; }
  int n() const { return static_cast<int>(cls_.probs.size()); }
  int zero_threshold() const { return n() - k() + 1; }
  const std::vector<int>& sequence() const { return seq_; }
  int length() const { return static_cast<int>(seq_.size()); }
  int lo(int t) const { return lo_[t]; }
  int hi(int t) const { return hi_[t]; }
  int num_states() const { return static_cast<int>(stop_.size()); }

  bool InBand(int t, int z) const {
    return t >= 0 && t <= length() && z >= lo_[t] && z <= hi_[t];
  }
  int Index(int t, int z) const { return offset_[t] + (z - lo_[t]); }
  int LayerOf(int index) const;

  // Effective stop probability: 1 for forced stops.
  double stop(int t, int z) const;
  double stored_stop(int index) const { return stop_[index]; }
  bool Forced(int t, int z) const;
  void set_stop(int t, int z, double s) { stop_[Index(t, z)] = s; }
  void set_stop_index(int index, double s) { stop_[index] = s; }

  // Probability that the variable tested at layer t is active.
  double prob_at(int t) const { return cls_.probs[seq_[t]]; }

  Certificate CertificateAt(int t, int z) const {
    return ClassifyThreshold(k(), n(), t - z, z);
  }
  Label LabelAt(int t, int z) const { return LabelFor(CertificateAt(t, z)); }

  Instance AsInstance() const { return Instance({cls_}); }

 private:
  void Layout();

  ClassSpec cls_;
  std::vector<int> seq_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<int> offset_;
  std::vector<double> stop_;
};

// Expands an elementary DAG into an equivalent tree. Randomized stops become
// coin nodes whose heads child is the terminal.
StrategyTree DagToTree(const StrategyDag& dag);

// Merges equal-count nodes of an elementary tree over a single-class
// instance. Throws kNotElementary naming two divergent nodes.
StrategyDag TreeToDag(const StrategyTree& tree, const Instance& inst);

}  // namespace sbfe

#endif  // SBFE_STRATEGY_DAG_H_
