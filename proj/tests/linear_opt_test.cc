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
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

#include "dmp/fixtures.h"
#include "dmp/revenue.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "oracles.h"

namespace dmp {
namespace {

using ::testing::ElementsAre;

constexpr double kEps = 0.001;

TEST(ExactBruteforceTest, Example3) {
  auto sol = ExactBruteforce(*GenNonsub(kEps));
  ASSERT_TRUE(sol.ok());
  EXPECT_DOUBLE_EQ(sol->revenue, 2);
  EXPECT_THAT(sol->prices.prices, ElementsAre(kEps, 1));
  EXPECT_EQ(sol->method, "exact");
}

TEST(ExactBruteforceTest, GreedySuboptimal) {
  auto sol = ExactBruteforce(GenGreedySuboptimal());
  ASSERT_TRUE(sol.ok());
  EXPECT_NEAR(sol->revenue, 1.3, 1e-9);
  EXPECT_THAT(sol->prices.prices, ElementsAre(0.2, 0.2, 0.5));
  EXPECT_THAT(sol->partition.owner, ElementsAre(0, 0, 1));
}

TEST(ExactBruteforceTest, GreedyTightOptimum) {
  auto sol = ExactBruteforce(*GenGreedyTight(4, 0.01));
  ASSERT_TRUE(sol.ok());
  EXPECT_NEAR(sol->revenue, 8, 1e-9);
  EXPECT_THAT(sol->prices.prices, ElementsAre(4, 1));
}

TEST(ExactBruteforceTest, CapExceeded) {
  Instance inst = *GenRandom(10, 8, 3);
  ExactOptions options;
  options.grid_cap = 1000;
  EXPECT_EQ(ExactBruteforce(inst, options).status().code(),
            absl::StatusCode::kResourceExhausted);
}

TEST(ExactBruteforceTest, MatchesIndependentEnumerator) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = testing::RandomInstance(rng, 3, 3, true);
    auto sol = ExactBruteforce(inst);
    ASSERT_TRUE(sol.ok());
    const testing::ReferenceLinearOptimum ref =
        testing::ReferenceExactLinear(inst);
    EXPECT_NEAR(sol->revenue, ref.revenue, 1e-12) << "trial " << trial;
    EXPECT_EQ(sol->prices.prices, ref.prices) << "trial " << trial;
    EXPECT_NEAR(sol->revenue, LinearRevenue(inst, sol->prices), 1e-9);
  }
}

TEST(ExactBruteforceTest, ThreadCountDoesNotMatter) {
  Instance inst = *GenRandom(6, 7, 79);
  ExactOptions one;
  one.threads = 1;
  ExactOptions four;
  four.threads = 4;
  auto a = ExactBruteforce(inst, one);
  auto b = ExactBruteforce(inst, four);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->prices, b->prices);
  EXPECT_EQ(a->revenue, b->revenue);
}

TEST(GreedyTest, GreedySuboptimalEveryOrder) {
  const Instance inst = GenGreedySuboptimal();
  std::vector<int> order{0, 1, 2};
  do {
    auto sol = Greedy(inst, order);
    ASSERT_TRUE(sol.ok());
    EXPECT_LE(sol->revenue, 1.2 + 1e-9);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(GreedyTest, GreedyTightInstance) {
  // Hand trace: dataset 1 goes to 1 + eps (revenue n(1 + eps) + 1 + eps
  // beats n), then dataset 2 also goes to 1 + eps since only the last buyer
  // still has budget. Total (n + 2)(1 + eps).
  const int n = 4;
  const double eps = 0.01;
  auto sol = Greedy(*GenGreedyTight(n, eps), {0, 1});
  ASSERT_TRUE(sol.ok());
  EXPECT_THAT(sol->prices.prices, ElementsAre(1 + eps, 1 + eps));
  EXPECT_NEAR(sol->revenue, (n + 2) * (1 + eps), 1e-9);
}

TEST(GreedyTest, SingleBuyerSingleDataset) {
  auto sol = Greedy(Instance{{0.5}, {{2}}}, {0});
  ASSERT_TRUE(sol.ok());
  EXPECT_THAT(sol->prices.prices, ElementsAre(2));
  EXPECT_DOUBLE_EQ(sol->revenue, 0.5);
}

TEST(GreedyTest, ZeroMarginalCommitsSmallestValue) {
  // Buyer 0 has spent her budget on dataset 0, so dataset 1 gains nothing.
  auto sol = Greedy(Instance{{1}, {{1, 0.5}}}, {0, 1});
  ASSERT_TRUE(sol.ok());
  EXPECT_THAT(sol->prices.prices, ElementsAre(1, 0.5));
}

TEST(GreedyTest, RejectsBadOrder) {
  const Instance inst = GenGreedySuboptimal();
  EXPECT_FALSE(Greedy(inst, {0, 1}).ok());
  EXPECT_FALSE(Greedy(inst, {0, 1, 1}).ok());
  EXPECT_FALSE(Greedy(inst, {0, 1, 3}).ok());
}

TEST(GreedyTest, HalfApproximation) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = testing::RandomInstance(rng, 5, 5, true);
    std::vector<int> order(inst.num_datasets());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    auto greedy = Greedy(inst, order);
    auto exact = ExactBruteforce(inst);
    ASSERT_TRUE(greedy.ok() && exact.ok());
    EXPECT_GE(greedy->revenue, 0.5 * exact->revenue - 1e-9);
    EXPECT_LE(greedy->revenue, exact->revenue + 1e-9);
  }
}

TEST(RandomizedGreedyTest, SingleBuyerSingleDataset) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_THAT(RandomizedGreedy(Instance{{1}, {{0.7}}}, seed).prices.prices,
                ElementsAre(0.7));
  }
}

TEST(RandomizedGreedyTest, GreedySuboptimalMean) {
  const Instance inst = GenGreedySuboptimal();
  double sum = 0;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const LinearSolution s = RandomizedGreedy(inst, seed);
    EXPECT_GE(s.revenue, 0.65 - 1e-9);
    sum += s.revenue;
  }
  EXPECT_GE(sum / 200, 1.0);
  EXPECT_LE(sum / 200, 1.3);
}

TEST(RandomizedGreedyTest, HalfApproximationAndReproducible) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = testing::RandomInstance(rng, 4, 4, true);
    const uint64_t seed = rng();
    const LinearSolution a = RandomizedGreedy(inst, seed);
    const LinearSolution b = RandomizedGreedy(inst, seed);
    EXPECT_EQ(a.prices, b.prices);
    // The bound holds in expectation, so average over seeds.
    double mean = 0;
    for (int s = 0; s < 200; ++s) mean += RandomizedGreedy(inst, s).revenue;
    mean /= 200;
    EXPECT_GE(mean, 0.5 * ExactBruteforce(inst)->revenue - 0.02)
        << "trial " << trial;
  }
}

TEST(ContinuousGreedyTest, SingleBuyerSingleDataset) {
  ContinuousGreedyOptions o{1, 1, 1};
  auto sol = ContinuousGreedy(Instance{{1}, {{0.7}}}, o, 5);
  ASSERT_TRUE(sol.ok());
  EXPECT_THAT(sol->prices.prices, ElementsAre(0.7));
}

TEST(ContinuousGreedyTest, Example3) {
  auto sol = ContinuousGreedy(*GenNonsub(kEps), {}, 1);
  ASSERT_TRUE(sol.ok());
  EXPECT_GE(sol->revenue, (1 - 1 / std::exp(1.0)) * 2 - 0.1);
}

TEST(ContinuousGreedyTest, RejectsNonPositiveParameters) {
  EXPECT_FALSE(ContinuousGreedy(*GenNonsub(kEps), {0, 1, 1}, 1).ok());
  EXPECT_FALSE(ContinuousGreedy(*GenNonsub(kEps), {1, 0, 1}, 1).ok());
  EXPECT_FALSE(ContinuousGreedy(*GenNonsub(kEps), {1, 1, 0}, 1).ok());
}

TEST(ContinuousGreedyTest, RandomInstancesNearGuarantee) {
  std::mt19937_64 rng(97);
  int good = 0;
  const int trials = 60;
  for (int trial = 0; trial < trials; ++trial) {
    Instance inst = testing::RandomInstance(rng, 3, 3, true);
    auto sol = ContinuousGreedy(inst, {}, rng());
    ASSERT_TRUE(sol.ok());
    const double opt = ExactBruteforce(inst)->revenue;
    EXPECT_LE(sol->revenue, opt + 1e-9);
    EXPECT_NEAR(sol->revenue, LinearRevenue(inst, sol->prices), 1e-9);
    good += sol->revenue >= (1 - 1 / std::exp(1.0) - 0.05) * opt;
  }
  EXPECT_GE(good, 0.95 * trials);
}

TEST(ContinuousGreedyTest, Reproducible) {
  Instance inst = *GenRandom(3, 3, 101);
  auto a = ContinuousGreedy(inst, {}, 7);
  auto b = ContinuousGreedy(inst, {}, 7);
  EXPECT_EQ(SerializeLinearSolution(*a), SerializeLinearSolution(*b));
}

TEST(PartitionFromPricesTest, LowestBuyerAndUnpriced) {
  Instance inst{{1, 1}, {{0.5, 0.2}, {0.5, 0.3}}};
  EXPECT_THAT(PartitionFromPrices(inst, {{0.5, 0}}).owner,
              ElementsAre(0, Partition::kUnpriced));
}

TEST(SerializeLinearSolutionTest, NullForUnpriced) {
  LinearSolution s;
  s.prices = {{0.5, 0}};
  s.partition = {{1, Partition::kUnpriced}};
  s.revenue = 0.5;
  s.method = "exact";
  const auto j = nlohmann::json::parse(SerializeLinearSolution(s));
  EXPECT_EQ(j["assignment"][0], 1);
  EXPECT_TRUE(j["assignment"][1].is_null());
  EXPECT_EQ(j["method"], "exact");
}

TEST(MaxThreadsTest, ReadsEnvironment) {
  setenv("DMP_THREADS", "3", 1);
  EXPECT_EQ(MaxThreadsFromEnvironment(), 3);
  setenv("DMP_THREADS", "junk", 1);
  EXPECT_GE(MaxThreadsFromEnvironment(), 1);
  unsetenv("DMP_THREADS");
  EXPECT_GE(MaxThreadsFromEnvironment(), 1);
}

}  // namespace
}  // namespace dmp
