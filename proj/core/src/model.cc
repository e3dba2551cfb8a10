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

#include "dmp/model.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dmp {
namespace {

// Sizes below this are numerical noise from the LP, not real shards.
constexpr double kZeroSize = 1e-12;

}  // namespace

std::vector<std::string> ValidateInstance(const Instance& instance) {
  std::vector<std::string> violations;
  const int n = instance.num_buyers();
  if (n < 1) violations.push_back("no buyers");
  if (static_cast<int>(instance.values.size()) != n) {
    violations.push_back(absl::StrCat("dimension mismatch: ", n,
                                      " budgets but ", instance.values.size(),
                                      " value rows"));
  }
  const int m = instance.num_datasets();
  if (m < 1) violations.push_back("no datasets");

  bool any_positive_budget = false;
  for (int i = 0; i < n; ++i) {
    const Money b = instance.budgets[i];
    if (std::isnan(b) || b < 0) {
      violations.push_back(absl::StrCat("negative budget at buyer ", i));
    } else if (b > 0) {
      any_positive_budget = true;
    }
  }
  if (n >= 1 && !any_positive_budget) {
    violations.push_back("no positive budget");
  }

  for (size_t i = 0; i < instance.values.size(); ++i) {
    const auto& row = instance.values[i];
    if (static_cast<int>(row.size()) != m) {
      violations.push_back(absl::StrCat("dimension mismatch: row ", i,
                                        " has ", row.size(), " values, expected ",
                                        m));
      continue;
    }
    for (int j = 0; j < m; ++j) {
      if (!std::isfinite(row[j])) {
        violations.push_back(
            absl::StrCat("non-finite value at (", i, ",", j, ")"));
      } else if (row[j] < 0) {
        violations.push_back(absl::StrCat("negative value at (", i, ",", j, ")"));
      }
    }
  }
  return violations;
}

absl::StatusOr<ShardCurve> ShardCurve::Create(std::vector<Shard> shards) {
  double total = 0.0;
  for (const Shard& s : shards) {
    if (!std::isfinite(s.size) || s.size < -kZeroSize) {
      return absl::InvalidArgumentError(
          absl::StrCat("shard size must be non-negative, got ", s.size));
    }
    if (!std::isfinite(s.slope) || s.slope < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("shard slope must be finite and non-negative, got ",
                       s.slope));
    }
    total += s.size;
  }
  if (std::abs(total - 1.0) > kTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("shard sizes sum to ", total, ", expected 1"));
  }

  std::vector<Shard> canonical;
  canonical.reserve(shards.size());
  for (const Shard& s : shards) {
    if (s.size <= kZeroSize) continue;
    if (!canonical.empty()) {
      Shard& last = canonical.back();
      if (s.slope < last.slope) {
        return absl::InvalidArgumentError(
            "shard slopes must be non-decreasing");
      }
      if (s.slope == last.slope) {
        last.size += s.size;
        continue;
      }
    }
    canonical.push_back(s);
  }
  return ShardCurve(std::move(canonical));
}

ShardCurve ShardCurve::Linear(Money slope) {
  return ShardCurve({Shard{1.0, slope}});
}

Money ShardCurve::PriceAt(double fraction) const {
  Money price = 0.0;
  double remaining = fraction;
  for (const Shard& s : shards_) {
    if (remaining <= 0) break;
    const double take = std::min(remaining, s.size);
    price += take * s.slope;
    remaining -= take;
  }
  return price;
}

ShardSet ShardSetFromPrices(const PriceVector& prices) {
  ShardSet set;
  set.curves.reserve(prices.prices.size());
  for (Money p : prices.prices) set.curves.push_back(ShardCurve::Linear(p));
  return set;
}

PriceVector PricesFromPartition(const Instance& instance,
                                const Partition& partition) {
  PriceVector p;
  p.prices.assign(partition.owner.size(), 0.0);
  for (int j = 0; j < partition.size(); ++j) {
    const int owner = partition.owner[j];
    if (owner != Partition::kUnpriced) p.prices[j] = instance.value(owner, j);
  }
  return p;
}

}  // namespace dmp
