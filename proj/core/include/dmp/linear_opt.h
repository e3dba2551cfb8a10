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

// Maximizing revenue over linear price vectors.
//
// Some optimal price vector sets every p_j to one of the values {v_ij}, so
// pricing is the same as assigning each dataset to the buyer whose value
// prices it. Revenue over such assignments is monotone and n-submodular,
// which gives a 2-approximate online greedy, and it extends to a monotone
// submodular function over copied datasets, which gives continuous greedy
// under a partition matroid.

#ifndef DMP_LINEAR_OPT_H_
#define DMP_LINEAR_OPT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dmp/model.h"

namespace dmp {

struct LinearSolution {
  PriceVector prices;
  Partition partition;
  Money revenue = 0.0;
  std::string method;
  int64_t iterations = 0;  // vectors enumerated, datasets processed or steps
  int64_t samples = 0;     // Monte Carlo samples drawn
};

// Thread cap from DMP_THREADS, else hardware concurrency (at least 1).
int MaxThreadsFromEnvironment();

struct ExactOptions {
  int64_t grid_cap = 2'000'000;
  int threads = 0;  // 0 means MaxThreadsFromEnvironment()
};

// Enumerates prod_j {v_ij > 0}. Ties go to the lexicographically smallest
// grid-index tuple; the result does not depend on the thread count.
absl::StatusOr<LinearSolution> ExactBruteforce(const Instance& instance,
                                               const ExactOptions& options = {});

// One pass over `order`; each dataset takes the value with the largest
// marginal revenue (smallest price on ties). Fails unless `order` is a
// permutation of the datasets.
absl::StatusOr<LinearSolution> Greedy(const Instance& instance,
                                      const std::vector<int>& order);

// Greedy in index order, sampling each commitment with probability
// proportional to its positive marginal gain.
LinearSolution RandomizedGreedy(const Instance& instance, uint64_t seed);

struct ContinuousGreedyOptions {
  int steps = 50;      // T
  int samples = 64;    // K, per step, shared by every copy
  int roundings = 32;  // R
};

absl::StatusOr<LinearSolution> ContinuousGreedy(
    const Instance& instance, const ContinuousGreedyOptions& options,
    uint64_t seed);

// Partition whose induced prices equal `prices` (lowest buyer index on ties;
// zero prices are unpriced).
Partition PartitionFromPrices(const Instance& instance,
                              const PriceVector& prices);

// {"prices": [...], "assignment": [buyer | null], "revenue": t,
//  "method": s, "iterations": k, "samples": s}
std::string SerializeLinearSolution(const LinearSolution& solution);

}  // namespace dmp

#endif  // DMP_LINEAR_OPT_H_
