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

// Gaussian signal model behind linear buyer valuations.
//
// A buyer's unknown parameter theta has prior N(mu, 1/tau0). Each record of
// dataset j is an independent signal theta + N(0, 1/tau_j). After seeing
// x_j records from every dataset, the posterior precision is
// tau0 + sum_j tau_j x_j, so the precision gain is linear in the counts.

#ifndef DMP_GAUSSIAN_H_
#define DMP_GAUSSIAN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace dmp {

struct GaussianTask {
  double prior_precision = 1.0;  // tau0
  double prior_mean = 0.0;       // mu
  std::vector<double> signal_precisions;  // tau_j
  std::vector<int> record_counts;         // x_j
};

absl::Status ValidateGaussianTask(const GaussianTask& task);

// sum_j tau_j x_j.
double TheoreticalGain(const GaussianTask& task);

// tau0 + sum_j tau_j x_j.
double PosteriorPrecision(const GaussianTask& task);

struct GaussianReport {
  double empirical_mse = 0.0;
  double expected_variance = 0.0;  // 1 / PosteriorPrecision
  double standard_error = 0.0;     // of empirical_mse
  double z_score = 0.0;            // (empirical - expected) / standard_error
  int64_t trials = 0;
};

// Draws theta from the prior and the records from the signal model, then
// scores the posterior mean
//   (sum_j tau_j sum_l s_jl + tau0 mu) / (sum_j tau_j x_j + tau0)
// against theta. Deterministic given `seed`.
absl::StatusOr<GaussianReport> SimulatePosteriorMse(const GaussianTask& task,
                                                    int64_t trials,
                                                    uint64_t seed);

// {"empirical_mse": ..., "expected_variance": ..., "standard_error": ...,
//  "z_score": ..., "theoretical_gain": ..., "trials": ...}
std::string SerializeGaussianReport(const GaussianTask& task,
                                    const GaussianReport& report);

}  // namespace dmp

#endif  // DMP_GAUSSIAN_H_
