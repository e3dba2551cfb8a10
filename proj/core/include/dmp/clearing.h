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

// Supply-side market clearing.
//
// Prices are clearable when every positively priced item is wanted by some
// buyer whose desire fits her budget; such a buyer takes the whole item, so
// nothing goes unsold. Clearabilize lowers prices one item at a time until
// the vector is clearable without costing any buyer's payment.
//
// Everything works on a generic item market so that the shards of a
// piecewise-linear pricing can be cleared exactly like linearly priced
// datasets.

#ifndef DMP_CLEARING_H_
#define DMP_CLEARING_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "dmp/model.h"

namespace dmp {

struct ItemMarket {
  std::vector<Money> prices;               // q, one per item
  std::vector<std::vector<double>> values; // w, n rows of item values
  std::vector<Money> budgets;              // b, one per buyer
  // Item -> (dataset, shard index); empty for a direct market.
  std::vector<std::pair<int, int>> origin;

  int num_items() const { return static_cast<int>(prices.size()); }
  int num_buyers() const { return static_cast<int>(budgets.size()); }
};

// Items are the datasets themselves at `prices`.
ItemMarket DirectMarket(const Instance& instance, const PriceVector& prices);

// One item per shard: q = slope * size, w_i = v_ij * size.
ItemMarket ShardsToItems(const Instance& instance, const ShardSet& shards);

bool IsInterested(const ItemMarket& market, const std::vector<Money>& prices,
                  int buyer, int item);
Money ItemDesire(const ItemMarket& market, const std::vector<Money>& prices,
                 int buyer);
bool IsSatisfied(const ItemMarket& market, const std::vector<Money>& prices,
                 int buyer);

bool IsClearable(const ItemMarket& market, const std::vector<Money>& prices);
inline bool IsClearable(const ItemMarket& market) {
  return IsClearable(market, market.prices);
}

// min(b_i, d_i(q)) for every buyer.
std::vector<Money> ItemRevenueByBuyer(const ItemMarket& market,
                                      const std::vector<Money>& prices);

// (n + 1) * phi1 + phi2, where phi1 counts positively priced items plus
// (buyer, item) pairs priced above value and phi2 counts budget-constrained
// buyers. Strictly decreases across clearabilize iterations.
int ClearingPotential(const ItemMarket& market,
                      const std::vector<Money>& prices);

struct ClearingResult {
  std::vector<Money> prices;
  int iterations = 0;
  std::vector<int> potentials;  // before the first and after every iteration
};

// Repeatedly takes the lowest-index unclearable item j and resets its price
// to max(0, max_{i constrained, interested} (q_j - d_i(q) + b_i)), which
// leaves one such buyer exactly satisfied; with no such buyer the price
// drops to 0. Never raises a price or lowers a buyer's payment.
ClearingResult Clearabilize(const ItemMarket& market);

// (M' + 1)(n + 1)^2.
int64_t ClearingIterationBound(const ItemMarket& market);

// Each buyer's demanded bundle over items. Requires clearable prices; every
// positively priced item then has a satisfied buyer holding all of it.
absl::StatusOr<Allocation> ClearingAllocation(const ItemMarket& market,
                                              const std::vector<Money>& prices);

}  // namespace dmp

#endif  // DMP_CLEARING_H_
