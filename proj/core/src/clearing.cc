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

#include "dmp/clearing.h"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dmp/demand.h"
#include "dmp/revenue.h"

namespace dmp {
namespace {

bool Positive(Money q) { return q > kTolerance; }

// Lowest-index positively priced item without an interested satisfied buyer,
// or -1.
int FirstUnclearableItem(const ItemMarket& market,
                         const std::vector<Money>& prices,
                         const std::vector<char>& satisfied) {
  for (int j = 0; j < market.num_items(); ++j) {
    if (!Positive(prices[j])) continue;
    bool cleared = false;
    for (int i = 0; i < market.num_buyers() && !cleared; ++i) {
      cleared = satisfied[i] && IsInterested(market, prices, i, j);
    }
    if (!cleared) return j;
  }
  return -1;
}

}  // namespace

ItemMarket DirectMarket(const Instance& instance, const PriceVector& prices) {
  ItemMarket market;
  market.prices = prices.prices;
  market.values = instance.values;
  market.budgets = instance.budgets;
  return market;
}

ItemMarket ShardsToItems(const Instance& instance, const ShardSet& shards) {
  ItemMarket market;
  market.budgets = instance.budgets;
  market.values.resize(instance.num_buyers());
  for (int j = 0; j < shards.size(); ++j) {
    const auto& curve = shards.curves[j].shards();
    for (int t = 0; t < static_cast<int>(curve.size()); ++t) {
      const Shard& s = curve[t];
      market.prices.push_back(s.slope * s.size);
      for (int i = 0; i < instance.num_buyers(); ++i) {
        market.values[i].push_back(instance.value(i, j) * s.size);
      }
      market.origin.emplace_back(j, t);
    }
  }
  return market;
}

bool IsInterested(const ItemMarket& market, const std::vector<Money>& prices,
                  int buyer, int item) {
  return Qualifies(market.values[buyer][item], prices[item]);
}

Money ItemDesire(const ItemMarket& market, const std::vector<Money>& prices,
                 int buyer) {
  Money d = 0.0;
  for (int j = 0; j < market.num_items(); ++j) {
    if (IsInterested(market, prices, buyer, j)) d += prices[j];
  }
  return d;
}

bool IsSatisfied(const ItemMarket& market, const std::vector<Money>& prices,
                 int buyer) {
  const Money b = market.budgets[buyer];
  return IsInfinite(b) || ItemDesire(market, prices, buyer) <= b + kTolerance;
}

bool IsClearable(const ItemMarket& market, const std::vector<Money>& prices) {
  std::vector<char> satisfied(market.num_buyers());
  for (int i = 0; i < market.num_buyers(); ++i) {
    satisfied[i] = IsSatisfied(market, prices, i);
  }
  return FirstUnclearableItem(market, prices, satisfied) < 0;
}

std::vector<Money> ItemRevenueByBuyer(const ItemMarket& market,
                                      const std::vector<Money>& prices) {
  std::vector<Money> out(market.num_buyers());
  for (int i = 0; i < market.num_buyers(); ++i) {
    out[i] = CappedPayment(market.budgets[i], ItemDesire(market, prices, i));
  }
  return out;
}

int ClearingPotential(const ItemMarket& market,
                      const std::vector<Money>& prices) {
  const int n = market.num_buyers();
  int phi1 = 0;
  for (int j = 0; j < market.num_items(); ++j) {
    if (Positive(prices[j])) ++phi1;
    for (int i = 0; i < n; ++i) {
      if (!IsInterested(market, prices, i, j)) ++phi1;
    }
  }
  int phi2 = 0;
  for (int i = 0; i < n; ++i) {
    if (!IsSatisfied(market, prices, i)) ++phi2;
  }
  return (n + 1) * phi1 + phi2;
}

int64_t ClearingIterationBound(const ItemMarket& market) {
  const int64_t items = market.num_items();
  const int64_t buyers = market.num_buyers();
  return (items + 1) * (buyers + 1) * (buyers + 1);
}

ClearingResult Clearabilize(const ItemMarket& market) {
  const int n = market.num_buyers();
  ClearingResult result;
  result.prices = market.prices;
  std::vector<Money>& q = result.prices;
  result.potentials.push_back(ClearingPotential(market, q));

  std::vector<char> satisfied(n);
  while (true) {
    for (int i = 0; i < n; ++i) satisfied[i] = IsSatisfied(market, q, i);
    const int j = FirstUnclearableItem(market, q, satisfied);
    if (j < 0) break;

    // Every buyer is uninterested in j or constrained. Lower q_j until the
    // tightest interested constrained buyer just fits her budget.
    double beta = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (satisfied[i] || !IsInterested(market, q, i, j)) continue;
      beta = std::max(beta, q[j] - ItemDesire(market, q, i) + market.budgets[i]);
    }
    q[j] = std::max(0.0, beta);
    ++result.iterations;
    result.potentials.push_back(ClearingPotential(market, q));
  }
  return result;
}

absl::StatusOr<Allocation> ClearingAllocation(const ItemMarket& market,
                                              const std::vector<Money>& prices) {
  if (static_cast<int>(prices.size()) != market.num_items()) {
    return absl::InvalidArgumentError("price count differs from item count");
  }
  if (!IsClearable(market, prices)) {
    return absl::FailedPreconditionError("prices are not clearable");
  }

  Allocation allocation;
  for (int i = 0; i < market.num_buyers(); ++i) {
    std::vector<PurchaseItem> items;
    items.reserve(market.num_items());
    for (int j = 0; j < market.num_items(); ++j) {
      // Per-unit terms for an item of quantity 1.
      const int group = market.origin.empty() ? j : market.origin[j].first;
      items.push_back({group, 1.0, prices[j], market.values[i][j]});
    }
    const Purchase purchase = OptimalPurchase(items, market.budgets[i]);
    Bundle bundle;
    bundle.fractions.resize(market.num_items());
    for (int j = 0; j < market.num_items(); ++j) {
      const bool free = !Positive(prices[j]);
      bundle.fractions[j] = free ? 1.0 : std::min(1.0, purchase.quantities[j]);
    }
    bundle.payment = purchase.payment;
    allocation.total_revenue += bundle.payment;
    allocation.bundles.push_back(std::move(bundle));
  }
  return allocation;
}

}  // namespace dmp
