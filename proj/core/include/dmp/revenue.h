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

// Closed-form revenue. Goods are non-rivalrous, so each buyer's payment
// depends only on the prices: buyer i buys every dataset she values at or
// above its price and pays min(b_i, d_i(p)), where the desire
// d_i(p) = sum_{j : v_ij >= p_j} p_j.

#ifndef DMP_REVENUE_H_
#define DMP_REVENUE_H_

#include <algorithm>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "dmp/model.h"

namespace dmp {

absl::StatusOr<Money> BuyerDesire(const Instance& instance, int buyer,
                                  const PriceVector& prices);

// min(b, desire); an infinite budget never caps.
inline Money CappedPayment(Money budget, Money desire) {
  return IsInfinite(budget) ? desire : std::min(budget, desire);
}

Money LinearRevenue(const Instance& instance, const PriceVector& prices);

// Per-buyer revenue under linear prices.
std::vector<Money> LinearRevenueByBuyer(const Instance& instance,
                                        const PriceVector& prices);

struct ShardRevenue {
  std::vector<Money> per_buyer;
  Money total = 0.0;
};

// Buyer i pays min(b_i, sum of slope * size over shards with slope <= v_ij).
ShardRevenue EvaluateShardRevenue(const Instance& instance,
                                  const ShardSet& shards);

Money PartitionRevenue(const Instance& instance, const Partition& partition);

// A subset of the copied ground set {j^(l) : j in [m], l in [n]}. Holding
// copy j^(l) means "dataset j may be priced at v_{l,j}". Unlike a Partition,
// several copies of the same dataset may be present.
class CopySet {
 public:
  CopySet(int num_datasets, int num_copies)
      : num_datasets_(num_datasets),
        num_copies_(num_copies),
        member_(static_cast<size_t>(num_datasets) * num_copies, 0) {}

  // Each priced dataset contributes its owner's copy.
  static CopySet FromPartition(const Partition& partition, int num_copies);

  int num_datasets() const { return num_datasets_; }
  int num_copies() const { return num_copies_; }

  bool Contains(int dataset, int copy) const {
    return member_[Index(dataset, copy)] != 0;
  }
  void Insert(int dataset, int copy) { member_[Index(dataset, copy)] = 1; }
  void Erase(int dataset, int copy) { member_[Index(dataset, copy)] = 0; }
  int size() const;

  // Pairs (dataset, copy) in ascending order.
  std::vector<std::pair<int, int>> Elements() const;

 private:
  size_t Index(int dataset, int copy) const {
    return static_cast<size_t>(dataset) * num_copies_ + copy;
  }

  int num_datasets_;
  int num_copies_;
  std::vector<char> member_;
};

// The monotone submodular extension of partition revenue to all subsets of
// copies: sum_i min(b_i, sum_{j^(l) in S, v_lj <= v_ij} v_lj).
Money ExtensionValue(const Instance& instance, const CopySet& set);

}  // namespace dmp

#endif  // DMP_REVENUE_H_
