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


#include <cstdint>
#include <numeric>
#include <vector>

#include "benchmark/benchmark.h"
#include "dmp/clearing.h"
#include "dmp/fixtures.h"
#include "dmp/linear_opt.h"
#include "dmp/plc_opt.h"

namespace dmp {
namespace {

Instance Random(int n, int m) { return *GenRandom(n, m, /*seed=*/7); }

void BM_SolvePlc(benchmark::State& state) {
  const Instance inst = Random(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(SolvePlc(inst));
}
BENCHMARK(BM_SolvePlc)->Args({4, 4})->Args({8, 6})->Args({12, 8});

void BM_ExactBruteforce(benchmark::State& state) {
  const Instance inst = Random(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ExactBruteforce(inst));
}
BENCHMARK(BM_ExactBruteforce)->Args({4, 3})->Args({6, 4})->Args({8, 5});

void BM_Greedy(benchmark::State& state) {
  const Instance inst = Random(state.range(0), state.range(1));
  std::vector<int> order(inst.num_datasets());
  std::iota(order.begin(), order.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(Greedy(inst, order));
}
BENCHMARK(BM_Greedy)->Args({10, 10})->Args({50, 50});

void BM_ContinuousGreedy(benchmark::State& state) {
  const Instance inst = Random(state.range(0), state.range(1));
  const ContinuousGreedyOptions options;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ContinuousGreedy(inst, options, 1));
  }
}
BENCHMARK(BM_ContinuousGreedy)->Args({3, 3})->Args({6, 6});

void BM_Clearabilize(benchmark::State& state) {
  const Instance inst = Random(state.range(0), state.range(1));
  PriceVector p;
  for (int j = 0; j < inst.num_datasets(); ++j) {
    p.prices.push_back(inst.value(j % inst.num_buyers(), j));
  }
  const ItemMarket market = DirectMarket(inst, p);
  for (auto _ : state) benchmark::DoNotOptimize(Clearabilize(market));
}
BENCHMARK(BM_Clearabilize)->Args({10, 10})->Args({40, 40});

}  // namespace
}  // namespace dmp

BENCHMARK_MAIN();
