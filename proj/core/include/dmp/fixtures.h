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

// Instance generators for the worked examples and reductions, and the
// non-extendability check for a monotone 2-submodular function.
//
// Every generator returns an instance that passes ValidateInstance.

#ifndef DMP_FIXTURES_H_
#define DMP_FIXTURES_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "dmp/lp.h"
#include "dmp/model.h"

namespace dmp {

inline constexpr double kDefaultEpsilon = 0.001;

// Two buyers, two datasets: values [[1, 1], [eps, 2]], budgets [1, 1].
// Revenue is not submodular in the price vector. Needs 0 < eps < 1.
absl::StatusOr<Instance> GenNonsub(double eps = kDefaultEpsilon);

// One dataset; budgets and values [2, 1.9, ..., 1.9].
absl::StatusOr<Instance> GenCeSe(int n);

// Two buyers, three datasets, where every order of online greedy earns at
// most 1.2 but p = (0.2, 0.2, 0.5) earns 1.3.
Instance GenGreedySuboptimal();

// n + 1 buyers, two datasets. The first n buyers have budget 1 + eps and
// values (1 + eps, 1); the last has budget n and values (n, 1 + eps).
absl::StatusOr<Instance> GenGreedyTight(int n, double eps = kDefaultEpsilon);

// n buyers, one dataset. Buyers 1..n-1 value it at eps with budget
// eps(1 - eps); buyer n values it at (n - 1)(1 - eps) with budget
// n eps (1 - eps).
absl::StatusOr<Instance> GenLingap(int n, double eps = kDefaultEpsilon);

// m picky buyers (identity rows) then k flexible buyers (1/m everywhere);
// all budgets infinite.
absl::StatusOr<Instance> GenSepgap(int m, int k);

struct VertexCoverInstance {
  Instance instance;
  int normal_buyers = 0;  // t; these come first
  double edge_value = 0;  // B
};

// One dataset per vertex. t normal buyers value everything at 1 with budget
// |V|; one buyer per edge values its endpoints at B with budget B. t and B
// are the smallest integers with eps t > |E| + |V| and B > (1 + eps) t,
// scaled by 1.1.
absl::StatusOr<VertexCoverInstance> GenVertexCover(
    int num_vertices, const std::vector<std::pair<int, int>>& edges,
    double eps = kDefaultEpsilon);

// Values uniform in (0, value_scale], budgets uniform in (0, budget_scale].
absl::StatusOr<Instance> GenRandom(int n, int m, uint64_t seed,
                                   double value_scale = 1.0,
                                   double budget_scale = 1.0);

// Ground set {a1, a2, b1, b2} as bits 1, 2, 4, 8. f-hat(S) is variable S.
// Fixes the nine values inside the partition matroid and adds every
// submodularity row, plus every monotonicity row when requested.
LpProblem BuildAppendixBLp(bool with_monotonicity);

// True when no monotone submodular extension exists.
bool AppendixBCheck();

// Whether a submodular (not necessarily monotone) extension exists.
bool AppendixBRelaxedFeasible();

}  // namespace dmp

#endif  // DMP_FIXTURES_H_
