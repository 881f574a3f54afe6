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


#ifndef SBFE_PIECEWISE_LINEAR_H_
#define SBFE_PIECEWISE_LINEAR_H_

#include <string>
#include <utility>
#include <vector>

namespace sbfe {

struct Breakpoint {
  double budget = 0.0;
  double value = 0.0;
};

// Piecewise-linear q(B) given by finite breakpoints sorted by budget; flat at
// the first value to the left of the first breakpoint and flat after the
// last one (the implicit plateau at B = infinity).
class PiecewiseLinearFn {
 public:
  PiecewiseLinearFn() = default;
  // Sorts, merges equal budgets (keeping the larger value), and drops
  // interior points whose value does not exceed the previous value.
  explicit PiecewiseLinearFn(std::vector<Breakpoint> points);

  static PiecewiseLinearFn Constant(double value) {
    return PiecewiseLinearFn({{0.0, value}});
  }

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  bool empty() const { return points_.empty(); }
  double plateau() const { return points_.empty() ? 0 : points_.back().value; }
  double saturation_budget() const {
    return points_.empty() ? 0 : points_.back().budget;
  }

  double operator()(double budget) const { return Evaluate(budget); }
  double Evaluate(double budget) const;
  // Right derivative at `budget`; zero at and beyond the last breakpoint.
  double RightDerivative(double budget) const;
  // Smallest breakpoint budget strictly greater than `budget`, or +inf.
  double NextBreakpoint(double budget) const;

  bool IsMonotone(double tol = 1e-9) const;
  bool IsConcave(double tol = 1e-9) const;

  // Rows "budget,utility" with 12 significant digits, plus a header line.
  std::string ToCsv() const;

 private:
  std::vector<Breakpoint> points_;
};

// Max absolute difference evaluated at the union of both breakpoint sets.
double MaxDifference(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b);

// Upper concave envelope of a point cloud, truncated at the maximum value and
// extended flat. Throws kInvalidArgument for an empty input.
PiecewiseLinearFn ConcaveEnvelope(std::vector<Breakpoint> points);

std::string FormatDouble(double x);

}  // namespace sbfe

#endif  // SBFE_PIECEWISE_LINEAR_H_
