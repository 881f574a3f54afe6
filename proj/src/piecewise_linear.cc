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


#include "sbfe/piecewise_linear.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "sbfe/error.h"

namespace sbfe {

std::string FormatDouble(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Breakpoint> points) {
  std::sort(points.begin(), points.end(),
            [](const Breakpoint& a, const Breakpoint& b) {
              if (a.budget != b.budget) return a.budget < b.budget;
              return a.value > b.value;
            });
  for (const Breakpoint& p : points) {
    if (!points_.empty() && p.budget == points_.back().budget) continue;
    if (!points_.empty() && p.value <= points_.back().value) continue;
    points_.push_back(p);
  }
}

double PiecewiseLinearFn::Evaluate(double budget) const {
  if (points_.empty()) return 0.0;
  if (budget <= points_.front().budget) return points_.front().value;
  if (budget >= points_.back().budget) return points_.back().value;
  auto it = std::upper_bound(
      points_.begin(), points_.end(), budget,
      [](double b, const Breakpoint& p) { return b < p.budget; });
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  const double w = (budget - lo.budget) / (hi.budget - lo.budget);
  return lo.value + w * (hi.value - lo.value);
}

double PiecewiseLinearFn::RightDerivative(double budget) const {
  if (points_.size() < 2 || budget >= points_.back().budget) return 0.0;
  if (budget < points_.front().budget) return 0.0;
  auto it = std::upper_bound(
      points_.begin(), points_.end(), budget,
      [](double b, const Breakpoint& p) { return b < p.budget; });
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  return (hi.value - lo.value) / (hi.budget - lo.budget);
}

double PiecewiseLinearFn::NextBreakpoint(double budget) const {
  auto it = std::upper_bound(
      points_.begin(), points_.end(), budget,
      [](double b, const Breakpoint& p) { return b < p.budget; });
  if (it == points_.end()) return std::numeric_limits<double>::infinity();
  return it->budget;
}

bool PiecewiseLinearFn::IsMonotone(double tol) const {
  for (size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].value < points_[i - 1].value - tol) return false;
  }
  return true;
}

bool PiecewiseLinearFn::IsConcave(double tol) const {
  // Every middle point must lie on or above the chord of its neighbours.
  for (size_t i = 1; i + 1 < points_.size(); ++i) {
    const Breakpoint& a = points_[i - 1];
    const Breakpoint& b = points_[i];
    const Breakpoint& c = points_[i + 1];
    const double w = (b.budget - a.budget) / (c.budget - a.budget);
    const double chord = a.value + w * (c.value - a.value);
    if (b.value < chord - tol) return false;
  }
  return true;
}

std::string PiecewiseLinearFn::ToCsv() const {
  std::string out = "budget,utility\n";
  for (const Breakpoint& p : points_) {
    out += FormatDouble(p.budget) + "," + FormatDouble(p.value) + "\n";
  }
  return out;
}

double MaxDifference(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b) {
  double worst = 0.0;
  auto probe = [&](double x) {
    worst = std::max(worst, std::abs(a(x) - b(x)));
  };
  for (const Breakpoint& p : a.breakpoints()) probe(p.budget);
  for (const Breakpoint& p : b.breakpoints()) probe(p.budget);
  probe(0.0);
  return worst;
}

PiecewiseLinearFn ConcaveEnvelope(std::vector<Breakpoint> points) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "envelope of an empty point set");
  }
  std::sort(points.begin(), points.end(),
            [](const Breakpoint& a, const Breakpoint& b) {
              if (a.budget != b.budget) return a.budget < b.budget;
              return a.value > b.value;
            });
  // Keep only points that improve on every cheaper point.
  std::vector<Breakpoint> pareto;
  for (const Breakpoint& p : points) {
    if (!pareto.empty() && p.value <= pareto.back().value) continue;
    pareto.push_back(p);
  }
  // Upper hull (monotone chain).
  std::vector<Breakpoint> hull;
  for (const Breakpoint& p : pareto) {
    while (hull.size() >= 2) {
      const Breakpoint& a = hull[hull.size() - 2];
      const Breakpoint& b = hull.back();
      const double cross = (b.budget - a.budget) * (p.value - a.value) -
                           (b.value - a.value) * (p.budget - a.budget);
      if (cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return PiecewiseLinearFn(hull);
}

}  // namespace sbfe
