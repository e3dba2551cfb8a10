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

// A small dense linear-program solver.
//
//   maximize    c . x
//   subject to  a_r . x  (<= | = | >=)  b_r   for every row r
//               x >= 0
//
// Two-phase primal simplex on a full tableau. Bland's rule (lowest-index
// entering column, lowest-index leaving basic variable among ratio ties)
// is used in both phases, so the solver never cycles and its answer is a
// deterministic function of the input. Meant for problems with at most a few
// hundred rows and columns.

#ifndef DMP_LP_H_
#define DMP_LP_H_

#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace dmp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LpConstraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

struct LpProblem {
  std::vector<double> objective;  // maximized
  std::vector<LpConstraint> constraints;

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_constraints() const { return static_cast<int>(constraints.size()); }

  void AddConstraint(std::vector<double> coefficients, Relation relation,
                     double rhs) {
    constraints.push_back({std::move(coefficients), relation, rhs});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;  // original variables; empty unless optimal
  double objective_value = 0.0;
  // Standard-form column indices basic at the end, ascending. Columns
  // [0, num_variables) are the original variables; slack, surplus and
  // artificial columns follow.
  std::vector<int> basis;
  int iterations = 0;
};

inline constexpr double kPivotTolerance = 1e-9;
inline constexpr double kFeasibilityTolerance = 1e-7;

// Fails only on malformed input (ragged rows, non-finite data).
absl::StatusOr<LpSolution> SolveLp(const LpProblem& problem);

// Phase 1 only: whether any x >= 0 satisfies every constraint.
absl::StatusOr<bool> CheckFeasible(const LpProblem& problem);

}  // namespace dmp

#endif  // DMP_LP_H_
