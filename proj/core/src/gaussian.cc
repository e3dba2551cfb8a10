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

#include "dmp/gaussian.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace dmp {

absl::Status ValidateGaussianTask(const GaussianTask& task) {
  if (!std::isfinite(task.prior_precision) || task.prior_precision <= 0) {
    return absl::InvalidArgumentError("prior precision must be positive");
  }
  if (!std::isfinite(task.prior_mean)) {
    return absl::InvalidArgumentError("prior mean must be finite");
  }
  if (task.signal_precisions.size() != task.record_counts.size()) {
    return absl::InvalidArgumentError(
        "need one record count per signal precision");
  }
  for (size_t j = 0; j < task.signal_precisions.size(); ++j) {
    const double tau = task.signal_precisions[j];
    if (!std::isfinite(tau) || tau <= 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("signal precision ", j, " must be positive"));
    }
    if (task.record_counts[j] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("record count ", j, " is negative"));
    }
  }
  return absl::OkStatus();
}

double TheoreticalGain(const GaussianTask& task) {
  double gain = 0.0;
  for (size_t j = 0; j < task.signal_precisions.size(); ++j) {
    gain += task.signal_precisions[j] * task.record_counts[j];
  }
  return gain;
}

double PosteriorPrecision(const GaussianTask& task) {
  return task.prior_precision + TheoreticalGain(task);
}

absl::StatusOr<GaussianReport> SimulatePosteriorMse(const GaussianTask& task,
                                                    int64_t trials,
                                                    uint64_t seed) {
  if (absl::Status s = ValidateGaussianTask(task); !s.ok()) return s;
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");

  const size_t m = task.signal_precisions.size();
  std::vector<double> noise_sd(m);
  for (size_t j = 0; j < m; ++j) {
    noise_sd[j] = 1.0 / std::sqrt(task.signal_precisions[j]);
  }
  const double prior_sd = 1.0 / std::sqrt(task.prior_precision);
  const double precision = PosteriorPrecision(task);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int64_t k = 0; k < trials; ++k) {
    const double theta = task.prior_mean + prior_sd * normal(rng);
    double weighted = task.prior_precision * task.prior_mean;
    for (size_t j = 0; j < m; ++j) {
      double signals = 0.0;
      for (int l = 0; l < task.record_counts[j]; ++l) {
        signals += theta + noise_sd[j] * normal(rng);
      }
      weighted += task.signal_precisions[j] * signals;
    }
    const double err = weighted / precision - theta;
    sum += err * err;
    sum_sq += err * err * err * err;
  }

  GaussianReport report;
  report.trials = trials;
  report.empirical_mse = sum / trials;
  report.expected_variance = 1.0 / precision;
  const double second = sum_sq / trials;
  const double var = std::max(
      0.0, second - report.empirical_mse * report.empirical_mse);
  report.standard_error = std::sqrt(var / trials);
  report.z_score =
      report.standard_error > 0
          ? (report.empirical_mse - report.expected_variance) /
                report.standard_error
          : 0.0;
  return report;
}

std::string SerializeGaussianReport(const GaussianTask& task,
                                    const GaussianReport& report) {
  nlohmann::ordered_json j;
  j["empirical_mse"] = report.empirical_mse;
  j["expected_variance"] = report.expected_variance;
  j["standard_error"] = report.standard_error;
  j["z_score"] = report.z_score;
  j["theoretical_gain"] = TheoreticalGain(task);
  j["trials"] = report.trials;
  return j.dump(2);
}

}  // namespace dmp
