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

#include "dmp/demand.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dmp/revenue.h"

namespace dmp {

double RateThreshold(const ShardCurve& curve, Money beta) {
  double x = 0.0;
  for (const Shard& s : curve.shards()) {
    if (s.slope > beta + kTolerance) return x;
    x += s.size;
  }
  return 1.0;
}

Purchase OptimalPurchase(std::span<const PurchaseItem> items, Money budget) {
  Purchase out;
  out.quantities.assign(items.size(), 0.0);

  std::vector<size_t> wanted;
  Money desire = 0.0;
  for (size_t k = 0; k < items.size(); ++k) {
    const PurchaseItem& it = items[k];
    if (it.quantity <= 0 || !Qualifies(it.unit_value, it.unit_price)) continue;
    wanted.push_back(k);
    desire += it.unit_price * it.quantity;
  }

  if (IsInfinite(budget) || desire <= budget + kTolerance) {
    for (size_t k : wanted) out.quantities[k] = items[k].quantity;
    out.payment = CappedPayment(budget, desire);
    return out;
  }

  // Budget binds. Positive-surplus items go first by surplus per dollar
  // (free items first), ties filled from the highest group so the bundle is
  // lexicographically smallest; then zero-surplus items by ascending group.
  std::vector<size_t> positive;
  std::vector<size_t> zero;
  for (size_t k : wanted) {
    const PurchaseItem& it = items[k];
    if (it.unit_value - it.unit_price > kTolerance) {
      positive.push_back(k);
    } else {
      zero.push_back(k);
    }
  }
  auto ratio = [&](size_t k) {
    const PurchaseItem& it = items[k];
    if (it.unit_price <= 0) return std::numeric_limits<double>::infinity();
    return (it.unit_value - it.unit_price) / it.unit_price;
  };
  std::stable_sort(positive.begin(), positive.end(), [&](size_t a, size_t b) {
    const double ra = ratio(a);
    const double rb = ratio(b);
    if (ra != rb) return ra > rb;
    if (items[a].group != items[b].group) return items[a].group > items[b].group;
    return a < b;
  });

  Money remaining = budget;
  auto fill = [&](const std::vector<size_t>& order) {
    for (size_t k : order) {
      const PurchaseItem& it = items[k];
      const Money cost = it.unit_price * it.quantity;
      if (cost <= remaining) {
        out.quantities[k] = it.quantity;
        remaining -= cost;
      } else {
        out.quantities[k] = remaining / it.unit_price;
        remaining = 0.0;
      }
      if (remaining <= 0.0 && it.unit_price > 0) return false;
    }
    return true;
  };
  if (fill(positive)) fill(zero);
  out.payment = budget;
  return out;
}

absl::StatusOr<Bundle> OptimalDemand(const Instance& instance, int buyer,
                                     const ShardSet& shards) {
  if (buyer < 0 || buyer >= instance.num_buyers()) {
    return absl::OutOfRangeError(absl::StrCat("buyer index ", buyer,
                                              " out of range [0, ",
                                              instance.num_buyers(), ")"));
  }
  if (shards.size() != instance.num_datasets()) {
    return absl::InvalidArgumentError("shard set size differs from m");
  }

  std::vector<PurchaseItem> items;
  for (int j = 0; j < shards.size(); ++j) {
    for (const Shard& s : shards.curves[j].shards()) {
      items.push_back({j, s.size, s.slope, instance.value(buyer, j)});
    }
  }
  const Purchase purchase = OptimalPurchase(items, instance.budgets[buyer]);

  Bundle bundle;
  bundle.fractions.assign(instance.num_datasets(), 0.0);
  for (size_t k = 0; k < items.size(); ++k) {
    bundle.fractions[items[k].group] += purchase.quantities[k];
  }
  for (double& x : bundle.fractions) x = std::min(x, 1.0);
  bundle.payment = purchase.payment;
  return bundle;
}

absl::StatusOr<PiecewiseCurve> PiecewiseCurve::Create(
    std::vector<double> breakpoints, std::vector<Money> values) {
  if (breakpoints.size() < 2 || breakpoints.size() != values.size()) {
    return absl::InvalidArgumentError(
        "need at least two breakpoints and one value per breakpoint");
  }
  if (breakpoints.front() != 0.0 || breakpoints.back() != 1.0) {
    return absl::InvalidArgumentError("breakpoints must span [0, 1]");
  }
  if (values.front() != 0.0) {
    return absl::InvalidArgumentError("price at 0 must be 0");
  }
  for (size_t k = 1; k < breakpoints.size(); ++k) {
    if (!(breakpoints[k] > breakpoints[k - 1])) {
      return absl::InvalidArgumentError("breakpoints must strictly increase");
    }
    if (!std::isfinite(values[k]) || values[k] < values[k - 1]) {
      return absl::InvalidArgumentError("values must be finite, non-decreasing");
    }
  }
  return PiecewiseCurve(std::move(breakpoints), std::move(values));
}

Money PiecewiseCurve::ValueAt(double x) const {
  if (x <= 0) return 0.0;
  if (x >= 1) return values_.back();
  const auto it =
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const size_t hi = static_cast<size_t>(it - breakpoints_.begin());
  const size_t lo = hi - 1;
  const double t = (x - breakpoints_[lo]) / (breakpoints_[hi] - breakpoints_[lo]);
  return values_[lo] + t * (values_[hi] - values_[lo]);
}

ShardCurve Convexify(const PiecewiseCurve& curve) {
  const auto& xs = curve.breakpoints();
  const auto& ys = curve.values();

  // Andrew's monotone chain, lower half. Collinear points are dropped.
  std::vector<size_t> hull;
  for (size_t k = 0; k < xs.size(); ++k) {
    while (hull.size() >= 2) {
      const size_t o = hull[hull.size() - 2];
      const size_t a = hull.back();
      const double cross =
          (xs[a] - xs[o]) * (ys[k] - ys[o]) - (ys[a] - ys[o]) * (xs[k] - xs[o]);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(k);
  }

  std::vector<Shard> shards;
  for (size_t h = 1; h < hull.size(); ++h) {
    const double dx = xs[hull[h]] - xs[hull[h - 1]];
    const double slope = (ys[hull[h]] - ys[hull[h - 1]]) / dx;
    if (!shards.empty() && slope <= shards.back().slope) {
      // Rounding can flatten a barely-convex corner; keep the curve convex.
      Shard& last = shards.back();
      last.slope = (last.slope * last.size + slope * dx) / (last.size + dx);
      last.size += dx;
      continue;
    }
    shards.push_back({dx, slope});
  }
  return *ShardCurve::Create(std::move(shards));
}

absl::StatusOr<ShardCurve> PiecewiseLinearize(const ShardCurve& curve,
                                              std::vector<Money> slopes) {
  if (slopes.empty()) return absl::InvalidArgumentError("empty slope set");
  for (Money a : slopes) {
    if (!std::isfinite(a) || a < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("slopes must be finite and non-negative, got ", a));
    }
  }
  std::sort(slopes.begin(), slopes.end());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());

  std::vector<Shard> shards;
  double prev = 0.0;
  for (size_t k = 0; k + 1 < slopes.size(); ++k) {
    const double z = RateThreshold(curve, slopes[k]);
    shards.push_back({z - prev, slopes[k]});
    prev = z;
  }
  shards.push_back({1.0 - prev, slopes.back()});
  return ShardCurve::Create(std::move(shards));
}

}  // namespace dmp
