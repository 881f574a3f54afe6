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


#ifndef SBFE_RATIONAL_H_
#define SBFE_RATIONAL_H_

#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace sbfe {

// Exact arithmetic for the oracles. Doubles convert without rounding.
using Rational = boost::multiprecision::mpq_rational;

inline Rational ToRational(double x) { return Rational(x); }

inline std::vector<Rational> ToRational(const std::vector<double>& xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (double x : xs) out.emplace_back(x);
  return out;
}

inline double ToDouble(const Rational& x) { return x.convert_to<double>(); }
inline double ToDouble(double x) { return x; }

}  // namespace sbfe

#endif  // SBFE_RATIONAL_H_
