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

#include "dmp/linear_opt.h"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "dmp/revenue.h"
#include "json.hpp"

namespace dmp {
namespace {

// Below this many grid vectors threads cost more than they save.
constexpr int64_t kParallelGridThreshold = 1 << 14;

// Marginal gains closer than this are ties.
constexpr double kGainTieTolerance = 1e-12;

double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Distinct positive values of column j, ascending; {0} if there are none.
std::vector<Money> CandidatePrices(const Instance& instance, int j) {
  std::vector<Money> c;
  for (int i = 0; i < instance.num_buyers(); ++i) {
    if (instance.value(i, j) > 0) c.push_back(instance.value(i, j));
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  if (c.empty()) c.push_back(0.0);
  return c;
}

LinearSolution Finish(const Instance& instance, PriceVector prices,
                      std::string method) {
  LinearSolution s;
  s.partition = PartitionFromPrices(instance, prices);
  s.revenue = LinearRevenue(instance, prices);
  s.prices = std::move(prices);
  s.method = std::move(method);
  return s;
}

struct ChunkBest {
  double revenue = -1.0;
  int64_t index = -1;
};

// Scans grid vectors [begin, end) in odometer order (dataset 0 most
// significant). Keeps the first vector attaining the exact maximum.
ChunkBest ScanGrid(const Instance& instance,
                   const std::vector<std::vector<Money>>& grid, int64_t begin,
                   int64_t end) {
  const int m = instance.num_datasets();
  std::vector<int> digits(m, 0);
  int64_t rest = begin;
  for (int j = m - 1; j >= 0; --j) {
    const int64_t base = static_cast<int64_t>(grid[j].size());
    digits[j] = static_cast<int>(rest % base);
    rest /= base;
  }
  PriceVector p;
  p.prices.resize(m);
  for (int j = 0; j < m; ++j) p.prices[j] = grid[j][digits[j]];

  ChunkBest best;
  for (int64_t idx = begin; idx < end; ++idx) {
    const double r = LinearRevenue(instance, p);
    if (r > best.revenue) {
      best.revenue = r;
      best.index = idx;
    }
    for (int j = m - 1; j >= 0; --j) {
      if (++digits[j] < static_cast<int>(grid[j].size())) {
        p.prices[j] = grid[j][digits[j]];
        break;
      }
      digits[j] = 0;
      p.prices[j] = grid[j][0];
    }
  }
  return best;
}

// Marginal revenue of pricing dataset j at each candidate, others fixed.
std::vector<double> MarginalGains(const Instance& instance, PriceVector& p,
                                  int j, const std::vector<Money>& candidates) {
  const Money saved = p.prices[j];
  p.prices[j] = 0.0;
  const double base = LinearRevenue(instance, p);
  std::vector<double> gains;
  gains.reserve(candidates.size());
  for (Money c : candidates) {
    p.prices[j] = c;
    gains.push_back(LinearRevenue(instance, p) - base);
  }
  p.prices[j] = saved;
  return gains;
}

size_t ArgmaxSmallestPrice(const std::vector<double>& gains) {
  size_t best = 0;
  for (size_t k = 1; k < gains.size(); ++k) {
    if (gains[k] > gains[best] + kGainTieTolerance) best = k;
  }
  return best;
}

}  // namespace

int MaxThreadsFromEnvironment() {
  if (const char* env = std::getenv("DMP_THREADS"); env != nullptr) {
    int parsed = 0;
    if (absl::SimpleAtoi(env, &parsed) && parsed >= 1) return parsed;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Partition PartitionFromPrices(const Instance& instance,
                              const PriceVector& prices) {
  Partition part;
  part.owner.assign(instance.num_datasets(), Partition::kUnpriced);
  for (int j = 0; j < instance.num_datasets(); ++j) {
    if (prices.prices[j] <= 0) continue;
    for (int i = 0; i < instance.num_buyers(); ++i) {
      if (instance.value(i, j) == prices.prices[j]) {
        part.owner[j] = i;
        break;
      }
    }
  }
  return part;
}

absl::StatusOr<LinearSolution> ExactBruteforce(const Instance& instance,
                                               const ExactOptions& options) {
  const int m = instance.num_datasets();
  std::vector<std::vector<Money>> grid(m);
  int64_t total = 1;
  for (int j = 0; j < m; ++j) {
    grid[j] = CandidatePrices(instance, j);
    const int64_t size = static_cast<int64_t>(grid[j].size());
    if (total > options.grid_cap / size) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "price grid exceeds the cap of ", options.grid_cap, " vectors"));
    }
    total *= size;
  }

  int threads = options.threads > 0 ? options.threads
                                     : MaxThreadsFromEnvironment();
  if (total < kParallelGridThreshold) threads = 1;
  threads = static_cast<int>(std::min<int64_t>(threads, total));

  std::vector<ChunkBest> chunks(threads);
  if (threads == 1) {
    chunks[0] = ScanGrid(instance, grid, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      const int64_t begin = total * t / threads;
      const int64_t end = total * (t + 1) / threads;
      pool.emplace_back([&, t, begin, end] {
        chunks[t] = ScanGrid(instance, grid, begin, end);
      });
    }
    for (std::thread& th : pool) th.join();
  }
  ChunkBest best;
  for (const ChunkBest& c : chunks) {
    if (c.revenue > best.revenue) best = c;
  }

  PriceVector p;
  p.prices.resize(m);
  int64_t rest = best.index;
  for (int j = m - 1; j >= 0; --j) {
    const int64_t base = static_cast<int64_t>(grid[j].size());
    p.prices[j] = grid[j][rest % base];
    rest /= base;
  }
  LinearSolution s = Finish(instance, std::move(p), "exact");
  s.iterations = total;
  return s;
}

absl::StatusOr<LinearSolution> Greedy(const Instance& instance,
                                      const std::vector<int>& order) {
  const int m = instance.num_datasets();
  std::vector<char> seen(m, 0);
  if (static_cast<int>(order.size()) != m) {
    return absl::InvalidArgumentError(
        absl::StrCat("order has ", order.size(), " entries, expected ", m));
  }
  for (int j : order) {
    if (j < 0 || j >= m || seen[j]) {
      return absl::InvalidArgumentError("order is not a permutation");
    }
    seen[j] = 1;
  }

  PriceVector p;
  p.prices.assign(m, 0.0);
  for (int j : order) {
    const std::vector<Money> candidates = CandidatePrices(instance, j);
    const std::vector<double> gains = MarginalGains(instance, p, j, candidates);
    p.prices[j] = candidates[ArgmaxSmallestPrice(gains)];
  }
  LinearSolution s = Finish(instance, std::move(p), "greedy");
  s.iterations = m;
  return s;
}

LinearSolution RandomizedGreedy(const Instance& instance, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int m = instance.num_datasets();
  PriceVector p;
  p.prices.assign(m, 0.0);
  for (int j = 0; j < m; ++j) {
    const std::vector<Money> candidates = CandidatePrices(instance, j);
    const std::vector<double> gains = MarginalGains(instance, p, j, candidates);
    double mass = 0.0;
    for (double g : gains) mass += std::max(0.0, g);
    if (mass <= kGainTieTolerance) {
      p.prices[j] = candidates[ArgmaxSmallestPrice(gains)];
      continue;
    }
    const double target = UniformUnit(rng) * mass;
    double acc = 0.0;
    size_t pick = candidates.size() - 1;
    for (size_t k = 0; k < gains.size(); ++k) {
      if (gains[k] <= 0) continue;
      acc += gains[k];
      if (target < acc) {
        pick = k;
        break;
      }
    }
    // Rounding can leave target == mass; land on the last positive gain.
    if (gains[pick] <= 0) {
      for (size_t k = gains.size(); k-- > 0;) {
        if (gains[k] > 0) {
          pick = k;
          break;
        }
      }
    }
    p.prices[j] = candidates[pick];
  }
  LinearSolution s = Finish(instance, std::move(p), "rgreedy");
  s.iterations = m;
  s.samples = m;
  return s;
}

absl::StatusOr<LinearSolution> ContinuousGreedy(
    const Instance& instance, const ContinuousGreedyOptions& options,
    uint64_t seed) {
  if (options.steps < 1 || options.samples < 1 || options.roundings < 1) {
    return absl::InvalidArgumentError(
        "steps, samples and roundings must all be at least 1");
  }
  const int n = instance.num_buyers();
  const int m = instance.num_datasets();
  std::mt19937_64 rng(seed);

  // contribution[(j * n + l) * n + i]: what copy j^(l) adds to buyer i's
  // inner sum in the extension.
  std::vector<double> contribution(static_cast<size_t>(m) * n * n, 0.0);
  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < n; ++l) {
      const double price = instance.value(l, j);
      for (int i = 0; i < n; ++i) {
        if (Qualifies(instance.value(i, j), price)) {
          contribution[(static_cast<size_t>(j) * n + l) * n + i] = price;
        }
      }
    }
  }

  // Fractional point in the partition-matroid polytope, y[j * n + l].
  std::vector<double> y(static_cast<size_t>(m) * n, 0.0);
  std::vector<char> member(y.size());
  std::vector<double> inner(n);
  std::vector<double> marginal(y.size());
  const double step = 1.0 / options.steps;

  for (int t = 0; t < options.steps; ++t) {
    std::fill(marginal.begin(), marginal.end(), 0.0);
    for (int k = 0; k < options.samples; ++k) {
      // One sample S ~ y, shared by every copy's marginal estimate.
      for (size_t e = 0; e < y.size(); ++e) {
        member[e] = UniformUnit(rng) < y[e] ? 1 : 0;
      }
      std::fill(inner.begin(), inner.end(), 0.0);
      for (size_t e = 0; e < y.size(); ++e) {
        if (!member[e]) continue;
        for (int i = 0; i < n; ++i) inner[i] += contribution[e * n + i];
      }
      for (size_t e = 0; e < y.size(); ++e) {
        // f(S + e) - f(S - e), buyer by buyer.
        double gain = 0.0;
        for (int i = 0; i < n; ++i) {
          const double c = contribution[e * n + i];
          if (c == 0.0) continue;
          const double without = member[e] ? inner[i] - c : inner[i];
          gain += CappedPayment(instance.budgets[i], without + c) -
                  CappedPayment(instance.budgets[i], without);
        }
        marginal[e] += gain;
      }
    }
    for (int j = 0; j < m; ++j) {
      int best = 0;
      for (int l = 1; l < n; ++l) {
        if (marginal[static_cast<size_t>(j) * n + l] >
            marginal[static_cast<size_t>(j) * n + best]) {
          best = l;
        }
      }
      y[static_cast<size_t>(j) * n + best] += step;
    }
  }

  Partition best_partition;
  double best_revenue = -1.0;
  Partition candidate;
  candidate.owner.resize(m);
  for (int r = 0; r < options.roundings; ++r) {
    for (int j = 0; j < m; ++j) {
      const double u = UniformUnit(rng);
      double acc = 0.0;
      candidate.owner[j] = Partition::kUnpriced;
      for (int l = 0; l < n; ++l) {
        acc += y[static_cast<size_t>(j) * n + l];
        if (u < acc) {
          candidate.owner[j] = l;
          break;
        }
      }
    }
    const double revenue = PartitionRevenue(instance, candidate);
    if (revenue > best_revenue) {
      best_revenue = revenue;
      best_partition = candidate;
    }
  }

  LinearSolution s =
      Finish(instance, PricesFromPartition(instance, best_partition), "cgreedy");
  s.partition = best_partition;
  s.iterations = options.steps;
  s.samples = static_cast<int64_t>(options.steps) * options.samples;
  return s;
}

std::string SerializeLinearSolution(const LinearSolution& solution) {
  using json = nlohmann::json;
  json assignment = json::array();
  for (int owner : solution.partition.owner) {
    if (owner == Partition::kUnpriced) {
      assignment.push_back(nullptr);
    } else {
      assignment.push_back(owner);
    }
  }
  json doc;
  doc["prices"] = solution.prices.prices;
  doc["assignment"] = std::move(assignment);
  doc["revenue"] = solution.revenue;
  doc["method"] = solution.method;
  doc["iterations"] = solution.iterations;
  doc["samples"] = solution.samples;
  return doc.dump(2);
}

}  // namespace dmp
