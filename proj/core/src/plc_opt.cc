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

#include "dmp/plc_opt.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dmp/demand.h"
#include "dmp/revenue.h"
#include "json.hpp"

namespace dmp {
namespace {

constexpr double kRevenueAgreement = 1e-6;

// Coefficients of buyer i's desire as a function of the shard sizes.
std::vector<double> DesireRow(const Instance& instance, const PricingLp& lp,
                              int buyer) {
  std::vector<double> row(lp.problem.num_variables(), 0.0);
  for (int j = 0; j < instance.num_datasets(); ++j) {
    const double v = instance.value(buyer, j);
    for (size_t t = 0; t < lp.slopes[j].size(); ++t) {
      const Money slope = lp.slopes[j][t];
      if (Qualifies(v, slope)) row[lp.z_offset[j] + t] = slope;
    }
  }
  return row;
}

}  // namespace

PricingLp BuildPricingLp(const Instance& instance) {
  const int n = instance.num_buyers();
  const int m = instance.num_datasets();

  PricingLp lp;
  lp.slopes.resize(m);
  lp.z_offset.resize(m);
  int columns = 0;
  for (int j = 0; j < m; ++j) {
    std::vector<Money>& s = lp.slopes[j];
    for (int i = 0; i < n; ++i) s.push_back(instance.value(i, j));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    lp.z_offset[j] = columns;
    columns += static_cast<int>(s.size());
  }
  lp.num_shard_variables = columns;
  lp.r_column.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!IsInfinite(instance.budgets[i])) lp.r_column[i] = columns++;
  }
  lp.problem.objective.assign(columns, 0.0);

  for (int i = 0; i < n; ++i) {
    std::vector<double> desire = DesireRow(instance, lp, i);
    const int r = lp.r_column[i];
    if (r < 0) {
      for (int c = 0; c < columns; ++c) lp.problem.objective[c] += desire[c];
      continue;
    }
    lp.problem.objective[r] = 1.0;

    std::vector<double> budget_row(columns, 0.0);
    budget_row[r] = 1.0;
    lp.problem.AddConstraint(std::move(budget_row), Relation::kLessEqual,
                             instance.budgets[i]);

    for (double& c : desire) c = -c;
    desire[r] = 1.0;
    lp.problem.AddConstraint(std::move(desire), Relation::kLessEqual, 0.0);
  }

  for (int j = 0; j < m; ++j) {
    std::vector<double> row(columns, 0.0);
    for (size_t t = 0; t < lp.slopes[j].size(); ++t) {
      row[lp.z_offset[j] + t] = 1.0;
    }
    lp.problem.AddConstraint(std::move(row), Relation::kEqual, 1.0);
  }
  return lp;
}

absl::StatusOr<PlcSolution> SolvePlc(const Instance& instance) {
  const PricingLp lp = BuildPricingLp(instance);
  absl::StatusOr<LpSolution> solved = SolveLp(lp.problem);
  if (!solved.ok()) return solved.status();
  if (solved->status != LpStatus::kOptimal) {
    return absl::InternalError(absl::StrCat(
        "pricing LP is ", std::string(LpStatusName(solved->status)), "; expected optimal"));
  }

  PlcSolution out;
  out.lp_iterations = solved->iterations;
  for (int j = 0; j < instance.num_datasets(); ++j) {
    std::vector<Shard> shards;
    double total = 0.0;
    for (size_t t = 0; t < lp.slopes[j].size(); ++t) {
      const double z = std::max(0.0, solved->x[lp.z_offset[j] + t]);
      shards.push_back({z, lp.slopes[j][t]});
      total += z;
    }
    for (Shard& s : shards) s.size /= total;
    absl::StatusOr<ShardCurve> curve = ShardCurve::Create(std::move(shards));
    if (!curve.ok()) return curve.status();
    out.positive_shard_count += curve->num_shards();
    out.shards.curves.push_back(*std::move(curve));
  }

  const ShardRevenue revenue = EvaluateShardRevenue(instance, out.shards);
  for (int i = 0; i < instance.num_buyers(); ++i) {
    double lp_value = 0.0;
    if (lp.r_column[i] >= 0) {
      lp_value = solved->x[lp.r_column[i]];
    } else {
      const std::vector<double> desire = DesireRow(instance, lp, i);
      for (int c = 0; c < lp.num_shard_variables; ++c) {
        lp_value += desire[c] * solved->x[c];
      }
    }
    if (std::abs(lp_value - revenue.per_buyer[i]) > kRevenueAgreement) {
      return absl::InternalError(absl::StrCat(
          "buyer ", i, ": LP revenue ", lp_value,
          " disagrees with evaluated shard revenue ", revenue.per_buyer[i]));
    }
  }
  out.per_buyer_revenue = revenue.per_buyer;
  out.total_revenue = revenue.total;
  return out;
}

absl::StatusOr<Allocation> ExtractAllocation(const Instance& instance,
                                             const ShardSet& shards) {
  Allocation allocation;
  for (int i = 0; i < instance.num_buyers(); ++i) {
    absl::StatusOr<Bundle> bundle = OptimalDemand(instance, i, shards);
    if (!bundle.ok()) return bundle.status();
    allocation.total_revenue += bundle->payment;
    allocation.bundles.push_back(*std::move(bundle));
  }
  return allocation;
}

std::string SerializePlcSolution(const PlcSolution& solution,
                                 const std::optional<Allocation>& allocation) {
  using json = nlohmann::json;
  json doc;
  doc["curves"] = json::array();
  for (const ShardCurve& c : solution.shards.curves) {
    json curve = json::array();
    for (const Shard& s : c.shards()) {
      curve.push_back({{"size", s.size}, {"slope", s.slope}});
    }
    doc["curves"].push_back(std::move(curve));
  }
  doc["per_buyer_revenue"] = solution.per_buyer_revenue;
  doc["total_revenue"] = solution.total_revenue;
  doc["positive_shard_count"] = solution.positive_shard_count;
  if (allocation.has_value()) {
    json bundles = json::array();
    for (const Bundle& b : allocation->bundles) {
      bundles.push_back({{"fractions", b.fractions}, {"payment", b.payment}});
    }
    doc["allocation"] = {{"bundles", std::move(bundles)},
                         {"total_revenue", allocation->total_revenue}};
  }
  return doc.dump(2);
}

}  // namespace dmp
