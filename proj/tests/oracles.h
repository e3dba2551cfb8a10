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

// Independent reference implementations used only by tests. None of these
// call into the solver code they are compared against.

#ifndef DMP_TESTS_ORACLES_H_
#define DMP_TESTS_ORACLES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dmp/lp.h"
#include "dmp/model.h"

namespace dmp::testing {

// sum_i min(b_i, sum_{j : v_ij >= p_j - 1e-9} p_j), written out directly.
double ReferenceRevenue(const Instance& instance,
                        const std::vector<double>& prices);

struct ReferenceLinearOptimum {
  double revenue = 0;
  std::vector<double> prices;
};

// Walks every vector of the grid prod_j sorted-distinct{v_ij > 0} in reverse
// lexicographic index order, first dataset most significant, keeping the
// final maximum so the lexicographically smallest optimum wins.
ReferenceLinearOptimum ReferenceExactLinear(const Instance& instance);

// Maximum of c.x over the vertices of {x >= 0 : rows}, found by solving every
// square system of tight rows. Equality rows are always tight. Returns
// nullopt when no vertex is feasible. Only for tiny problems with bounded
// feasible regions.
std::optional<double> VertexEnumerationMax(const LpProblem& problem);

// Single dataset priced by a piecewise-linear curve given as breakpoints on
// [0, 1]. The buyer picks x on a 1e-3 grid maximizing v x - price(x) subject
// to price(x) <= budget, preferring larger payments among ties.
double GridDemandPayment(const std::vector<double>& xs,
                         const std::vector<double>& ys, double value,
                         double budget);

// Price of the first x units under shards (size, slope), summed directly.
double ShardPrice(const std::vector<std::pair<double, double>>& shards,
                  double x);

// Random instance with n, m drawn from [1, max_n] x [1, max_m]; roughly one
// budget in four is infinite when `allow_infinite`.
Instance RandomInstance(std::mt19937_64& rng, int max_n, int max_m,
                        bool allow_infinite);

}  // namespace dmp::testing

#endif  // DMP_TESTS_ORACLES_H_
