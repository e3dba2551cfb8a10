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

#include <cmath>
#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace dmp {
namespace {

using ::testing::ElementsAre;

LpProblem Problem(std::vector<double> objective) {
  LpProblem p;
  p.objective = std::move(objective);
  return p;
}

TEST(SolveLpTest, SingleBound) {
  LpProblem p = Problem({1});
  p.AddConstraint({1}, Relation::kLessEqual, 1);
  auto s = SolveLp(p);
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->status, LpStatus::kOptimal);
  EXPECT_THAT(s->x, ElementsAre(1));
  EXPECT_EQ(s->objective_value, 1);
}

TEST(SolveLpTest, DegenerateTieTakesLowestIndex) {
  LpProblem p = Problem({1, 1});
  p.AddConstraint({1, 1}, Relation::kLessEqual, 1);
  auto s = SolveLp(p);
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->status, LpStatus::kOptimal);
  EXPECT_THAT(s->x, ElementsAre(1, 0));
  EXPECT_EQ(s->objective_value, 1);
}

TEST(SolveLpTest, Infeasible) {
  LpProblem p = Problem({1});
  p.AddConstraint({1}, Relation::kGreaterEqual, 2);
  p.AddConstraint({1}, Relation::kLessEqual, 1);
  auto s = SolveLp(p);
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->status, LpStatus::kInfeasible);
  EXPECT_TRUE(s->x.empty());
}

TEST(SolveLpTest, Unbounded) {
  LpProblem p = Problem({1, 0});
  p.AddConstraint({1, -1}, Relation::kLessEqual, 1);
  auto s = SolveLp(p);
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->status, LpStatus::kUnbounded);
}

TEST(SolveLpTest, EqualityAndNegativeRhs) {
  // max -x - y  s.t.  x + y = 2,  x - y <= -1  (so y >= x + 1).
  LpProblem p = Problem({-1, -2});
  p.AddConstraint({1, 1}, Relation::kEqual, 2);
  p.AddConstraint({1, -1}, Relation::kLessEqual, -1);
  auto s = SolveLp(p);
  ASSERT_TRUE(s.ok());
  ASSERT_EQ(s->status, LpStatus::kOptimal);
  EXPECT_NEAR(s->x[0], 0.5, 1e-12);
  EXPECT_NEAR(s->x[1], 1.5, 1e-12);
  EXPECT_NEAR(s->objective_value, -3.5, 1e-12);
}

TEST(SolveLpTest, RedundantEqualityRows) {
  LpProblem p = Problem({1, 1});
  p.AddConstraint({1, 1}, Relation::kEqual, 1);
  p.AddConstraint({2, 2}, Relation::kEqual, 2);
  p.AddConstraint({1, 0}, Relation::kLessEqual, 0.25);
  auto s = SolveLp(p);
  ASSERT_TRUE(s.ok());
  ASSERT_EQ(s->status, LpStatus::kOptimal);
  EXPECT_NEAR(s->objective_value, 1, 1e-12);
}

TEST(SolveLpTest, DimensionMismatch) {
  LpProblem p = Problem({1, 1});
  p.AddConstraint({1}, Relation::kLessEqual, 1);
  EXPECT_EQ(SolveLp(p).status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(CheckFeasible(p).ok());
}

TEST(SolveLpTest, CyclingExampleTerminates) {
  // Beale's classic cycling problem, written as a maximization.
  LpProblem p = Problem({0.75, -150, 0.02, -6});
  p.AddConstraint({0.25, -60, -0.04, 9}, Relation::kLessEqual, 0);
  p.AddConstraint({0.5, -90, -0.02, 3}, Relation::kLessEqual, 0);
  p.AddConstraint({0, 0, 1, 0}, Relation::kLessEqual, 1);
  auto s = SolveLp(p);
  ASSERT_TRUE(s.ok());
  ASSERT_EQ(s->status, LpStatus::kOptimal);
  EXPECT_NEAR(s->objective_value, 0.05, 1e-12);
}

TEST(CheckFeasibleTest, Basic) {
  LpProblem ok = Problem({0});
  ok.AddConstraint({1}, Relation::kLessEqual, 1);
  EXPECT_TRUE(*CheckFeasible(ok));
  LpProblem bad = Problem({0});
  bad.AddConstraint({1}, Relation::kLessEqual, -1);
  EXPECT_FALSE(*CheckFeasible(bad));
}

void ExpectValidVertex(const LpProblem& p, const LpSolution& s) {
  double obj = 0;
  for (int k = 0; k < p.num_variables(); ++k) {
    EXPECT_GE(s.x[k], -1e-7);
    obj += p.objective[k] * s.x[k];
  }
  EXPECT_NEAR(obj, s.objective_value, 1e-7);
  for (const LpConstraint& c : p.constraints) {
    double lhs = 0;
    for (int k = 0; k < p.num_variables(); ++k) lhs += c.coefficients[k] * s.x[k];
    switch (c.relation) {
      case Relation::kLessEqual: EXPECT_LE(lhs, c.rhs + 1e-7); break;
      case Relation::kGreaterEqual: EXPECT_GE(lhs, c.rhs - 1e-7); break;
      case Relation::kEqual: EXPECT_NEAR(lhs, c.rhs, 1e-7); break;
    }
  }
  int support = 0;
  for (double v : s.x) support += v > 1e-9;
  EXPECT_LE(support, p.num_constraints());
}

TEST(SolveLpTest, MatchesVertexEnumerationOnRandomProblems) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> coef(0.0, 3.0);
  int optimal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + rng() % 4;
    const int rows = 1 + rng() % (8 - n);
    LpProblem p;
    for (int k = 0; k < n; ++k) p.objective.push_back(coef(rng) - 1);
    for (int r = 0; r < rows; ++r) {
      std::vector<double> a(n);
      for (double& v : a) v = rng() % 4 == 0 ? 0 : coef(rng);
      const int kind = rng() % 5;
      const Relation rel = kind < 3   ? Relation::kLessEqual
                           : kind < 4 ? Relation::kGreaterEqual
                                      : Relation::kEqual;
      p.AddConstraint(a, rel, coef(rng));
    }
    // A box keeps every feasible region bounded.
    p.AddConstraint(std::vector<double>(n, 1.0), Relation::kLessEqual, 5);

    auto s = SolveLp(p);
    ASSERT_TRUE(s.ok());
    const std::optional<double> oracle = testing::VertexEnumerationMax(p);
    if (!oracle) {
      EXPECT_EQ(s->status, LpStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(s->status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(s->objective_value, *oracle, 1e-7) << "trial " << trial;
    ExpectValidVertex(p, *s);
    EXPECT_TRUE(*CheckFeasible(p));
    ++optimal;
  }
  EXPECT_GT(optimal, 100);
}

TEST(SolveLpTest, Deterministic) {
  std::mt19937_64 rng(43);
  LpProblem p;
  for (int k = 0; k < 6; ++k) p.objective.push_back(rng() % 5);
  for (int r = 0; r < 5; ++r) {
    std::vector<double> a(6);
    for (double& v : a) v = rng() % 3;
    p.AddConstraint(a, Relation::kLessEqual, 1 + rng() % 4);
  }
  auto a = SolveLp(p);
  auto b = SolveLp(p);
  EXPECT_EQ(a->x, b->x);
  EXPECT_EQ(a->basis, b->basis);
  EXPECT_EQ(a->iterations, b->iterations);
}

TEST(LpStatusNameTest, Names) {
  EXPECT_EQ(LpStatusName(LpStatus::kOptimal), "optimal");
  EXPECT_EQ(LpStatusName(LpStatus::kInfeasible), "infeasible");
  EXPECT_EQ(LpStatusName(LpStatus::kUnbounded), "unbounded");
}

}  // namespace
}  // namespace dmp
