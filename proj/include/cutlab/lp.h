// Copyright 2026 The Cutlab Authors.
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

#ifndef CUTLAB_LP_H_
#define CUTLAB_LP_H_

#include <vector>

namespace cutlab {

enum class LpSense { kLessEqual, kGreaterEqual, kEqual };

struct LpTerm {
  int var = 0;
  double coef = 0;
};

struct LpConstraint {
  std::vector<LpTerm> terms;
  LpSense sense = LpSense::kLessEqual;
  double rhs = 0;
};

// Minimize objective . x subject to the constraints and lower <= x <= upper.
// Lower bounds must be finite; an infinite upper bound means none.
struct LpModel {
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LpConstraint> constraints;

  int add_variable(double cost, double lo, double hi);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;
  double objective = 0;
};

inline constexpr double kLpTolerance = 1e-7;

// Dense two-phase simplex with Bland's rule. Throws kIterationLimit and
// kInvalidArgument (malformed model).
LpSolution solve_lp(const LpModel& model, int iteration_limit = 200000);

// Largest violation of any constraint or bound.
double lp_violation(const LpModel& model, const std::vector<double>& x);

}  // namespace cutlab

#endif  // CUTLAB_LP_H_
