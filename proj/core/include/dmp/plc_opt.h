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

// Revenue-optimal separable piecewise-linear convex pricing.
//
// Some optimal separable pricing cuts each dataset j into shards whose
// per-unit prices are drawn from the buyers' values {v_tj}; only the shard
// sizes z_tj are unknown. Buyer i pays min(b_i, sum of the shards she values
// at or above their price), which is linear in z once the min is split into
// two upper bounds on a revenue variable r_i:
//
//   maximize   sum_i r_i
//   subject to r_i <= b_i
//              r_i <= sum_j sum_t v_tj [v_tj <= v_ij] z_tj
//              sum_t z_tj = 1          for every dataset j
//              z, r >= 0
//
// A basic optimal solution has at most m + n positive shard sizes.

#ifndef DMP_PLC_OPT_H_
#define DMP_PLC_OPT_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dmp/lp.h"
#include "dmp/model.h"

namespace dmp {

struct PricingLp {
  LpProblem problem;
  // Distinct candidate slopes per dataset, ascending. Dataset j's shard
  // variables occupy columns [z_offset[j], z_offset[j] + slopes[j].size()).
  std::vector<std::vector<Money>> slopes;
  std::vector<int> z_offset;
  // Column of r_i, or -1 for infinite-budget buyers, whose desire term is
  // placed directly in the objective.
  std::vector<int> r_column;
  int num_shard_variables = 0;
};

PricingLp BuildPricingLp(const Instance& instance);

struct PlcSolution {
  ShardSet shards;
  std::vector<Money> per_buyer_revenue;
  Money total_revenue = 0.0;
  int positive_shard_count = 0;
  int lp_iterations = 0;
};

absl::StatusOr<PlcSolution> SolvePlc(const Instance& instance);

// Every buyer's demanded bundle under `shards`.
absl::StatusOr<Allocation> ExtractAllocation(const Instance& instance,
                                             const ShardSet& shards);

// {"curves": ..., "per_buyer_revenue": [...], "total_revenue": t,
//  "positive_shard_count": k} plus "allocation" when given.
std::string SerializePlcSolution(
    const PlcSolution& solution,
    const std::optional<Allocation>& allocation = std::nullopt);

}  // namespace dmp

#endif  // DMP_PLC_OPT_H_
