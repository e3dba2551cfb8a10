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

// Core domain types for a non-rivalrous data market: buyers with budgets and
// linear per-dataset valuations, linear price vectors, separable
// piecewise-linear convex prices expressed as shards, and allocations.

#ifndef DMP_MODEL_H_
#define DMP_MODEL_H_

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace dmp {

// Money is a plain double. Budgets may be +infinity; every price and value is
// finite and non-negative.
using Money = double;

inline constexpr Money kInfinity = std::numeric_limits<double>::infinity();

// Global comparison slack for money and fraction equalities.
inline constexpr double kTolerance = 1e-9;

inline bool IsInfinite(Money m) { return m == kInfinity; }

// True when a buyer with per-unit value `value` is willing to pay per-unit
// price `price`. Buyers buy at exact indifference.
inline bool Qualifies(double value, double price) {
  return value >= price - kTolerance;
}

// The market input: n buyers, m datasets, budgets b_i, values v_{i,j}.
struct Instance {
  std::vector<Money> budgets;               // length n
  std::vector<std::vector<double>> values;  // n rows of length m

  int num_buyers() const { return static_cast<int>(budgets.size()); }
  int num_datasets() const {
    return values.empty() ? 0 : static_cast<int>(values.front().size());
  }
  double value(int buyer, int dataset) const {
    return values[buyer][dataset];
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Returns the list of violated Instance invariants; empty means valid.
std::vector<std::string> ValidateInstance(const Instance& instance);

// One linear price per dataset.
struct PriceVector {
  std::vector<Money> prices;

  int size() const { return static_cast<int>(prices.size()); }
  friend bool operator==(const PriceVector&, const PriceVector&) = default;
};

struct Shard {
  double size;   // fraction of the dataset in (0, 1]
  Money slope;   // per-unit price

  friend bool operator==(const Shard&, const Shard&) = default;
};

// A monotone, convex, piecewise-linear price curve on [0, 1] stored as an
// ordered run of shards. Canonical form: no zero-size shards, strictly
// increasing slopes, sizes summing to 1.
class ShardCurve {
 public:
  // Canonicalizes `shards`: drops zero-size shards and merges adjacent
  // shards with equal slopes. Fails on negative sizes or slopes, decreasing
  // slopes, or sizes that do not sum to 1.
  static absl::StatusOr<ShardCurve> Create(std::vector<Shard> shards);

  // A single shard of size 1; the linear price `slope` per unit.
  static ShardCurve Linear(Money slope);

  const std::vector<Shard>& shards() const { return shards_; }
  int num_shards() const { return static_cast<int>(shards_.size()); }

  // Price of the first `fraction` of the dataset.
  Money PriceAt(double fraction) const;

  friend bool operator==(const ShardCurve&, const ShardCurve&) = default;

 private:
  explicit ShardCurve(std::vector<Shard> shards) : shards_(std::move(shards)) {}

  std::vector<Shard> shards_;
};

// One curve per dataset.
struct ShardSet {
  std::vector<ShardCurve> curves;

  int size() const { return static_cast<int>(curves.size()); }
  friend bool operator==(const ShardSet&, const ShardSet&) = default;
};

// Every dataset priced linearly at `prices`.
ShardSet ShardSetFromPrices(const PriceVector& prices);

// Assignment of each dataset to the buyer whose value sets its price, or to
// nobody (price 0).
struct Partition {
  static constexpr int kUnpriced = -1;

  std::vector<int> owner;  // length m; buyer index or kUnpriced

  int size() const { return static_cast<int>(owner.size()); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

// p_j = v_{owner(j), j}, or 0 when unpriced.
PriceVector PricesFromPartition(const Instance& instance,
                                const Partition& partition);

struct Bundle {
  std::vector<double> fractions;  // x_j in [0, 1]
  Money payment = 0.0;
};

struct Allocation {
  std::vector<Bundle> bundles;  // one per buyer
  Money total_revenue = 0.0;
};

}  // namespace dmp

#endif  // DMP_MODEL_H_
