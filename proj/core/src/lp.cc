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

#include "dmp/lp.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dmp {
namespace {

// Entries this small after a pivot are rounding residue.
constexpr double kDropTolerance = 1e-12;

// Bland's rule cannot cycle; this only guards against numerical trouble.
constexpr int kMaxIterations = 200000;

enum class ColumnKind { kOriginal, kSlack, kArtificial };

class Tableau {
 public:
  explicit Tableau(const LpProblem& problem) { Build(problem); }

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_columns() const { return static_cast<int>(kinds_.size()); }
  int iterations() const { return iterations_; }
  bool has_artificials() const { return num_artificials_ > 0; }

  // Maximizes cost . x over the current basis. Columns for which
  // `allowed(col)` is false never enter. Returns false when unbounded.
  template <typename Allowed>
  absl::StatusOr<bool> Optimize(const std::vector<double>& cost,
                                Allowed allowed) {
    // Reduced costs d_j = c_j - c_B B^-1 A_j, kept as an extra row.
    std::vector<double> reduced(num_columns() + 1, 0.0);
    for (int c = 0; c < num_columns(); ++c) reduced[c] = cost[c];
    for (int r = 0; r < num_rows(); ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      for (int c = 0; c <= num_columns(); ++c) reduced[c] -= cb * rows_[r][c];
    }

    while (true) {
      int entering = -1;
      for (int c = 0; c < num_columns(); ++c) {
        if (reduced[c] > kPivotTolerance && allowed(c)) {
          entering = c;
          break;
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      double best_ratio = 0.0;
      for (int r = 0; r < num_rows(); ++r) {
        const double a = rows_[r][entering];
        if (a <= kPivotTolerance) continue;
        const double ratio = rows_[r].back() / a;
        if (leaving < 0 || ratio < best_ratio - kDropTolerance) {
          leaving = r;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + kDropTolerance &&
                   basis_[r] < basis_[leaving]) {
          leaving = r;
        }
      }
      if (leaving < 0) return false;

      if (++iterations_ > kMaxIterations) {
        return absl::InternalError("simplex iteration limit exceeded");
      }
      Pivot(leaving, entering);
      const double factor = reduced[entering];
      for (int c = 0; c <= num_columns(); ++c) {
        reduced[c] -= factor * rows_[leaving][c];
      }
      reduced[entering] = 0.0;
    }
  }

  // Sum of artificial variables at the current basis.
  double ArtificialSum() const {
    double sum = 0.0;
    for (int r = 0; r < num_rows(); ++r) {
      if (kinds_[basis_[r]] == ColumnKind::kArtificial) sum += rows_[r].back();
    }
    return sum;
  }

  std::vector<double> Phase1Cost() const {
    std::vector<double> cost(num_columns(), 0.0);
    for (int c = 0; c < num_columns(); ++c) {
      if (kinds_[c] == ColumnKind::kArtificial) cost[c] = -1.0;
    }
    return cost;
  }

  std::vector<double> Phase2Cost(const std::vector<double>& objective) const {
    std::vector<double> cost(num_columns(), 0.0);
    std::copy(objective.begin(), objective.end(), cost.begin());
    return cost;
  }

  bool IsArtificial(int c) const { return kinds_[c] == ColumnKind::kArtificial; }

  // After a feasible phase 1: pivots zero-valued artificials out of the basis
  // and drops rows that turn out to be redundant.
  void DriveOutArtificials() {
    for (int r = 0; r < num_rows();) {
      if (!IsArtificial(basis_[r])) {
        ++r;
        continue;
      }
      int pivot_col = -1;
      for (int c = 0; c < num_columns(); ++c) {
        if (!IsArtificial(c) && std::abs(rows_[r][c]) > kPivotTolerance) {
          pivot_col = c;
          break;
        }
      }
      if (pivot_col < 0) {
        rows_.erase(rows_.begin() + r);
        basis_.erase(basis_.begin() + r);
        continue;
      }
      Pivot(r, pivot_col);
      ++r;
    }
  }

  std::vector<double> PrimalValues(int num_original) const {
    std::vector<double> x(num_original, 0.0);
    for (int r = 0; r < num_rows(); ++r) {
      if (basis_[r] < num_original) x[basis_[r]] = std::max(0.0, rows_[r].back());
    }
    return x;
  }

  std::vector<int> SortedBasis() const {
    std::vector<int> b = basis_;
    std::sort(b.begin(), b.end());
    return b;
  }

 private:
  void Build(const LpProblem& problem) {
    const int n = problem.num_variables();
    kinds_.assign(n, ColumnKind::kOriginal);

    struct Row {
      std::vector<double> a;
      Relation rel;
      double rhs;
    };
    std::vector<Row> normalized;
    for (const LpConstraint& con : problem.constraints) {
      Row row{con.coefficients, con.relation, con.rhs};
      if (row.rhs < 0) {
        for (double& v : row.a) v = -v;
        row.rhs = -row.rhs;
        if (row.rel == Relation::kLessEqual) {
          row.rel = Relation::kGreaterEqual;
        } else if (row.rel == Relation::kGreaterEqual) {
          row.rel = Relation::kLessEqual;
        }
      }
      normalized.push_back(std::move(row));
    }

    // Column layout: originals, one slack/surplus per inequality, then one
    // artificial per = or >= row.
    std::vector<int> slack_col(normalized.size(), -1);
    std::vector<int> art_col(normalized.size(), -1);
    for (size_t r = 0; r < normalized.size(); ++r) {
      if (normalized[r].rel != Relation::kEqual) {
        slack_col[r] = static_cast<int>(kinds_.size());
        kinds_.push_back(ColumnKind::kSlack);
      }
    }
    for (size_t r = 0; r < normalized.size(); ++r) {
      if (normalized[r].rel != Relation::kLessEqual) {
        art_col[r] = static_cast<int>(kinds_.size());
        kinds_.push_back(ColumnKind::kArtificial);
        ++num_artificials_;
      }
    }

    const int cols = num_columns();
    for (size_t r = 0; r < normalized.size(); ++r) {
      std::vector<double> row(cols + 1, 0.0);
      std::copy(normalized[r].a.begin(), normalized[r].a.end(), row.begin());
      row[cols] = normalized[r].rhs;
      if (slack_col[r] >= 0) {
        row[slack_col[r]] =
            normalized[r].rel == Relation::kLessEqual ? 1.0 : -1.0;
      }
      if (art_col[r] >= 0) {
        row[art_col[r]] = 1.0;
        basis_.push_back(art_col[r]);
      } else {
        basis_.push_back(slack_col[r]);
      }
      rows_.push_back(std::move(row));
    }
  }

  void Pivot(int pivot_row, int pivot_col) {
    std::vector<double>& pr = rows_[pivot_row];
    const double inv = 1.0 / pr[pivot_col];
    for (double& v : pr) v *= inv;
    pr[pivot_col] = 1.0;
    for (int r = 0; r < num_rows(); ++r) {
      if (r == pivot_row) continue;
      std::vector<double>& row = rows_[r];
      const double factor = row[pivot_col];
      if (factor == 0.0) continue;
      for (size_t c = 0; c < row.size(); ++c) {
        row[c] -= factor * pr[c];
        if (std::abs(row[c]) < kDropTolerance) row[c] = 0.0;
      }
      row[pivot_col] = 0.0;
    }
    basis_[pivot_row] = pivot_col;
  }

  std::vector<std::vector<double>> rows_;  // each row: coefficients, then rhs
  std::vector<int> basis_;
  std::vector<ColumnKind> kinds_;
  int num_artificials_ = 0;
  int iterations_ = 0;
};

absl::Status ValidateProblem(const LpProblem& problem) {
  const size_t n = problem.objective.size();
  for (double c : problem.objective) {
    if (!std::isfinite(c)) {
      return absl::InvalidArgumentError("objective coefficient not finite");
    }
  }
  for (size_t r = 0; r < problem.constraints.size(); ++r) {
    const LpConstraint& con = problem.constraints[r];
    if (con.coefficients.size() != n) {
      return absl::InvalidArgumentError(
          absl::StrCat("constraint ", r, " has ", con.coefficients.size(),
                       " coefficients, expected ", n));
    }
    if (!std::isfinite(con.rhs)) {
      return absl::InvalidArgumentError(
          absl::StrCat("constraint ", r, " has a non-finite rhs"));
    }
    for (double a : con.coefficients) {
      if (!std::isfinite(a)) {
        return absl::InvalidArgumentError(
            absl::StrCat("constraint ", r, " has a non-finite coefficient"));
      }
    }
  }
  return absl::OkStatus();
}

// Runs phase 1. Returns whether the problem is feasible.
absl::StatusOr<bool> RunPhase1(Tableau& tableau) {
  if (!tableau.has_artificials()) return true;
  absl::StatusOr<bool> bounded =
      tableau.Optimize(tableau.Phase1Cost(), [](int) { return true; });
  if (!bounded.ok()) return bounded.status();
  return tableau.ArtificialSum() <= kFeasibilityTolerance;
}

}  // namespace

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

absl::StatusOr<LpSolution> SolveLp(const LpProblem& problem) {
  if (absl::Status s = ValidateProblem(problem); !s.ok()) return s;

  Tableau tableau(problem);
  LpSolution solution;
  absl::StatusOr<bool> feasible = RunPhase1(tableau);
  if (!feasible.ok()) return feasible.status();
  if (!*feasible) {
    solution.status = LpStatus::kInfeasible;
    solution.iterations = tableau.iterations();
    return solution;
  }
  tableau.DriveOutArtificials();

  absl::StatusOr<bool> bounded =
      tableau.Optimize(tableau.Phase2Cost(problem.objective),
                       [&](int c) { return !tableau.IsArtificial(c); });
  if (!bounded.ok()) return bounded.status();
  solution.iterations = tableau.iterations();
  if (!*bounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.x = tableau.PrimalValues(problem.num_variables());
  solution.basis = tableau.SortedBasis();
  for (int j = 0; j < problem.num_variables(); ++j) {
    solution.objective_value += problem.objective[j] * solution.x[j];
  }
  return solution;
}

absl::StatusOr<bool> CheckFeasible(const LpProblem& problem) {
  if (absl::Status s = ValidateProblem(problem); !s.ok()) return s;
  Tableau tableau(problem);
  return RunPhase1(tableau);
}

}  // namespace dmp
