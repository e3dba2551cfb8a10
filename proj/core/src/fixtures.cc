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

#include "dmp/fixtures.h"

#include <cmath>
#include <random>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dmp {
namespace {

absl::Status CheckEpsilon(double eps) {
  if (!(eps > 0 && eps < 1)) {
    return absl::InvalidArgumentError(
        absl::StrCat("eps must lie in (0, 1), got ", eps));
  }
  return absl::OkStatus();
}

// Uniform on (0, 1].
double UniformOpenClosed(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

constexpr int kA1 = 1, kA2 = 2, kB1 = 4, kB2 = 8;
constexpr int kGround = 4;
constexpr int kSubsets = 1 << kGround;

}  // namespace

absl::StatusOr<Instance> GenNonsub(double eps) {
  if (absl::Status s = CheckEpsilon(eps); !s.ok()) return s;
  return Instance{{1.0, 1.0}, {{1.0, 1.0}, {eps, 2.0}}};
}

absl::StatusOr<Instance> GenCeSe(int n) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  Instance inst;
  for (int i = 0; i < n; ++i) {
    const double b = i == 0 ? 2.0 : 1.9;
    inst.budgets.push_back(b);
    inst.values.push_back({b});
  }
  return inst;
}

Instance GenGreedySuboptimal() {
  return Instance{{1.0, 1.0}, {{0.2, 0.2, 0.0}, {0.6, 0.6, 0.5}}};
}

absl::StatusOr<Instance> GenGreedyTight(int n, double eps) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  if (absl::Status s = CheckEpsilon(eps); !s.ok()) return s;
  Instance inst;
  for (int i = 0; i < n; ++i) {
    inst.budgets.push_back(1.0 + eps);
    inst.values.push_back({1.0 + eps, 1.0});
  }
  inst.budgets.push_back(n);
  inst.values.push_back({static_cast<double>(n), 1.0 + eps});
  return inst;
}

absl::StatusOr<Instance> GenLingap(int n, double eps) {
  if (n < 2) return absl::InvalidArgumentError("n must be >= 2");
  if (absl::Status s = CheckEpsilon(eps); !s.ok()) return s;
  Instance inst;
  for (int i = 0; i + 1 < n; ++i) {
    inst.budgets.push_back(eps * (1 - eps));
    inst.values.push_back({eps});
  }
  inst.budgets.push_back(n * eps * (1 - eps));
  inst.values.push_back({(n - 1) * (1 - eps)});
  return inst;
}

absl::StatusOr<Instance> GenSepgap(int m, int k) {
  if (m < 1 || k < 1) {
    return absl::InvalidArgumentError("m and k must be >= 1");
  }
  Instance inst;
  for (int i = 0; i < m; ++i) {
    std::vector<double> row(m, 0.0);
    row[i] = 1.0;
    inst.values.push_back(std::move(row));
    inst.budgets.push_back(kInfinity);
  }
  for (int i = 0; i < k; ++i) {
    inst.values.emplace_back(m, 1.0 / m);
    inst.budgets.push_back(kInfinity);
  }
  return inst;
}

absl::StatusOr<VertexCoverInstance> GenVertexCover(
    int num_vertices, const std::vector<std::pair<int, int>>& edges,
    double eps) {
  if (num_vertices < 1) {
    return absl::InvalidArgumentError("need at least one vertex");
  }
  if (absl::Status s = CheckEpsilon(eps); !s.ok()) return s;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices || u == v) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad edge (", u, ", ", v, ")"));
    }
  }
  const double size = static_cast<double>(edges.size()) + num_vertices;
  const double t = std::ceil(1.1 * (std::floor(size / eps) + 1));
  const double big = std::ceil(1.1 * (std::floor((1 + eps) * t) + 1));

  VertexCoverInstance out;
  out.normal_buyers = static_cast<int>(t);
  out.edge_value = big;
  Instance& inst = out.instance;
  for (int i = 0; i < out.normal_buyers; ++i) {
    inst.budgets.push_back(num_vertices);
    inst.values.emplace_back(num_vertices, 1.0);
  }
  for (const auto& [u, v] : edges) {
    std::vector<double> row(num_vertices, 0.0);
    row[u] = big;
    row[v] = big;
    inst.budgets.push_back(big);
    inst.values.push_back(std::move(row));
  }
  return out;
}

absl::StatusOr<Instance> GenRandom(int n, int m, uint64_t seed,
                                   double value_scale, double budget_scale) {
  if (n < 1 || m < 1) return absl::InvalidArgumentError("n, m must be >= 1");
  if (!(value_scale > 0) || !std::isfinite(value_scale) ||
      !(budget_scale > 0) || !std::isfinite(budget_scale)) {
    return absl::InvalidArgumentError("scales must be positive and finite");
  }
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.values.assign(n, std::vector<double>(m));
  for (auto& row : inst.values) {
    for (double& v : row) v = value_scale * UniformOpenClosed(rng);
  }
  inst.budgets.resize(n);
  for (double& b : inst.budgets) b = budget_scale * UniformOpenClosed(rng);
  return inst;
}

LpProblem BuildAppendixBLp(bool with_monotonicity) {
  LpProblem lp;
  lp.objective.assign(kSubsets, 0.0);
  auto row = [] { return std::vector<double>(kSubsets, 0.0); };

  // f on the partition matroid: at most one copy of a and one copy of b.
  const std::pair<int, double> fixed[] = {
      {0, 0},          {kA1, 1},       {kA2, 4},
      {kB1, 1},        {kB2, 4},       {kA1 | kB1, 1},
      {kA1 | kB2, 4},  {kA2 | kB1, 5}, {kA2 | kB2, 4},
  };
  for (const auto& [set, value] : fixed) {
    std::vector<double> r = row();
    r[set] = 1;
    lp.AddConstraint(std::move(r), Relation::kEqual, value);
  }

  if (with_monotonicity) {
    for (int s = 0; s < kSubsets; ++s) {
      for (int e = 1; e < kSubsets; e <<= 1) {
        if (s & e) continue;
        std::vector<double> r = row();
        r[s] = 1;
        r[s | e] = -1;
        lp.AddConstraint(std::move(r), Relation::kLessEqual, 0);
      }
    }
  }

  // f(S + e) - f(S) >= f(T + e) - f(T) for S a subset of T, e not in T.
  for (int e = 1; e < kSubsets; e <<= 1) {
    for (int t = 0; t < kSubsets; ++t) {
      if (t & e) continue;
      for (int s = t;; s = (s - 1) & t) {
        if (s != t) {
          std::vector<double> r = row();
          r[s | e] -= 1;
          r[s] += 1;
          r[t | e] += 1;
          r[t] -= 1;
          lp.AddConstraint(std::move(r), Relation::kLessEqual, 0);
        }
        if (s == 0) break;
      }
    }
  }
  return lp;
}

bool AppendixBCheck() {
  return !*CheckFeasible(BuildAppendixBLp(/*with_monotonicity=*/true));
}

bool AppendixBRelaxedFeasible() {
  return *CheckFeasible(BuildAppendixBLp(/*with_monotonicity=*/false));
}

}  // namespace dmp
