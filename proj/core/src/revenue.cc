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

#include "dmp/revenue.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dmp {
namespace {

Money DesireUnchecked(const Instance& instance, int buyer,
                      const std::vector<Money>& prices) {
  Money desire = 0.0;
  const auto& row = instance.values[buyer];
  for (size_t j = 0; j < prices.size(); ++j) {
    if (Qualifies(row[j], prices[j])) desire += prices[j];
  }
  return desire;
}

}  // namespace

absl::StatusOr<Money> BuyerDesire(const Instance& instance, int buyer,
                                  const PriceVector& prices) {
  if (buyer < 0 || buyer >= instance.num_buyers()) {
    return absl::OutOfRangeError(absl::StrCat("buyer index ", buyer,
                                              " out of range [0, ",
                                              instance.num_buyers(), ")"));
  }
  if (prices.size() != instance.num_datasets()) {
    return absl::InvalidArgumentError("price vector length differs from m");
  }
  return DesireUnchecked(instance, buyer, prices.prices);
}

std::vector<Money> LinearRevenueByBuyer(const Instance& instance,
                                        const PriceVector& prices) {
  std::vector<Money> out(instance.num_buyers());
  for (int i = 0; i < instance.num_buyers(); ++i) {
    out[i] = CappedPayment(instance.budgets[i],
                           DesireUnchecked(instance, i, prices.prices));
  }
  return out;
}

Money LinearRevenue(const Instance& instance, const PriceVector& prices) {
  Money total = 0.0;
  for (int i = 0; i < instance.num_buyers(); ++i) {
    total += CappedPayment(instance.budgets[i],
                           DesireUnchecked(instance, i, prices.prices));
  }
  return total;
}

ShardRevenue EvaluateShardRevenue(const Instance& instance,
                                  const ShardSet& shards) {
  ShardRevenue out;
  out.per_buyer.resize(instance.num_buyers());
  for (int i = 0; i < instance.num_buyers(); ++i) {
    Money desire = 0.0;
    for (int j = 0; j < shards.size(); ++j) {
      const double v = instance.value(i, j);
      for (const Shard& s : shards.curves[j].shards()) {
        if (!Qualifies(v, s.slope)) break;  // slopes ascend
        desire += s.slope * s.size;
      }
    }
    out.per_buyer[i] = CappedPayment(instance.budgets[i], desire);
    out.total += out.per_buyer[i];
  }
  return out;
}

Money PartitionRevenue(const Instance& instance, const Partition& partition) {
  return LinearRevenue(instance, PricesFromPartition(instance, partition));
}

CopySet CopySet::FromPartition(const Partition& partition, int num_copies) {
  CopySet set(partition.size(), num_copies);
  for (int j = 0; j < partition.size(); ++j) {
    if (partition.owner[j] != Partition::kUnpriced) {
      set.Insert(j, partition.owner[j]);
    }
  }
  return set;
}

int CopySet::size() const {
  return static_cast<int>(std::count(member_.begin(), member_.end(), 1));
}

std::vector<std::pair<int, int>> CopySet::Elements() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < num_datasets_; ++j) {
    for (int l = 0; l < num_copies_; ++l) {
      if (Contains(j, l)) out.emplace_back(j, l);
    }
  }
  return out;
}

Money ExtensionValue(const Instance& instance, const CopySet& set) {
  Money total = 0.0;
  const int n = instance.num_buyers();
  const int m = instance.num_datasets();
  for (int i = 0; i < n; ++i) {
    Money inner = 0.0;
    for (int j = 0; j < m; ++j) {
      const double own = instance.value(i, j);
      for (int l = 0; l < n; ++l) {
        if (!set.Contains(j, l)) continue;
        const double price = instance.value(l, j);
        if (Qualifies(own, price)) inner += price;
      }
    }
    total += CappedPayment(instance.budgets[i], inner);
  }
  return total;
}

}  // namespace dmp
