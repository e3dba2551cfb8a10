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

// Buyer-side computations under separable convex pricing.
//
// A buyer with linear value v facing a convex curve keeps buying while the
// marginal price is at most v (rate equalization). With several datasets and
// a binding budget, the shards she would buy become fractional-knapsack
// items; she fills the budget in decreasing surplus-per-dollar order.

#ifndef DMP_DEMAND_H_
#define DMP_DEMAND_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "dmp/model.h"

namespace dmp {

// Largest prefix fraction of `curve` whose every shard slope is <= beta.
double RateThreshold(const ShardCurve& curve, Money beta);

// A divisible good offered at a constant per-unit price.
struct PurchaseItem {
  int group;          // dataset index; orders ties
  double quantity;    // units available
  Money unit_price;
  double unit_value;  // buyer's per-unit value
};

struct Purchase {
  std::vector<double> quantities;  // parallel to the item list
  Money payment = 0.0;
};

// Utility-maximizing purchase subject to `budget`; among maximizers, the one
// paying the most. Items priced above value are never bought. Items must be
// listed group by group, with ascending prices inside a group.
Purchase OptimalPurchase(std::span<const PurchaseItem> items, Money budget);

// Buyer `buyer`'s demanded bundle under `shards`.
absl::StatusOr<Bundle> OptimalDemand(const Instance& instance, int buyer,
                                     const ShardSet& shards);

// A continuous, monotone, piecewise-linear price curve with p(0) = 0,
// possibly non-convex.
class PiecewiseCurve {
 public:
  // Breakpoints must start at 0, end at 1 and strictly increase; values must
  // start at 0 and be non-decreasing.
  static absl::StatusOr<PiecewiseCurve> Create(std::vector<double> breakpoints,
                                               std::vector<Money> values);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Money>& values() const { return values_; }

  Money ValueAt(double x) const;

 private:
  PiecewiseCurve(std::vector<double> breakpoints, std::vector<Money> values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {}

  std::vector<double> breakpoints_;
  std::vector<Money> values_;
};

// Lower convex envelope over the breakpoints.
ShardCurve Convexify(const PiecewiseCurve& curve);

// Rounds every marginal price of `curve` up to the next allowed slope (down
// to the largest one past it). The result only uses slopes from `slopes`.
absl::StatusOr<ShardCurve> PiecewiseLinearize(const ShardCurve& curve,
                                              std::vector<Money> slopes);

}  // namespace dmp

#endif  // DMP_DEMAND_H_
