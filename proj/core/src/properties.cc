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

#include "dmp/properties.h"

#include <algorithm>
#include <random>

#include "dmp/revenue.h"
#include "json.hpp"

namespace dmp {
namespace {

int UniformInt(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<uint64_t>(bound));
}

void Record(double lhs, double rhs, PropertyReport& report) {
  const double gap = rhs - lhs;
  if (gap > kTolerance) ++report.violations;
  report.worst_violation = std::max(report.worst_violation, gap);
}

}  // namespace

PropertyReport SampleNSubmodularity(const Instance& instance, int64_t samples,
                                    uint64_t seed) {
  const int n = instance.num_buyers();
  const int m = instance.num_datasets();
  std::mt19937_64 rng(seed);
  PropertyReport report;
  for (int64_t k = 0; k < samples; ++k) {
    Partition s{std::vector<int>(m)};
    Partition t{std::vector<int>(m)};
    for (int j = 0; j < m; ++j) {
      s.owner[j] = UniformInt(rng, n + 1) - 1;
      t.owner[j] = (rng() & 1) ? s.owner[j] : Partition::kUnpriced;
    }
    const int j = UniformInt(rng, m);
    const int i = UniformInt(rng, n);
    s.owner[j] = t.owner[j] = Partition::kUnpriced;

    const Money base_s = PartitionRevenue(instance, s);
    const Money base_t = PartitionRevenue(instance, t);
    s.owner[j] = t.owner[j] = i;
    const Money gain_s = PartitionRevenue(instance, s) - base_s;
    const Money gain_t = PartitionRevenue(instance, t) - base_t;
    Record(gain_t, gain_s, report);
    Record(gain_s, 0.0, report);
    ++report.samples;
  }
  return report;
}

PropertyReport SampleExtensionSubmodularity(const Instance& instance,
                                            int64_t samples, uint64_t seed) {
  const int n = instance.num_buyers();
  const int m = instance.num_datasets();
  std::mt19937_64 rng(seed);
  PropertyReport report;
  for (int64_t k = 0; k < samples; ++k) {
    CopySet s(m, n);
    CopySet t(m, n);
    for (int j = 0; j < m; ++j) {
      for (int l = 0; l < n; ++l) {
        if (rng() & 1) {
          s.Insert(j, l);
          if (rng() & 1) t.Insert(j, l);
        }
      }
    }
    const int j = UniformInt(rng, m);
    const int l = UniformInt(rng, n);
    s.Erase(j, l);
    t.Erase(j, l);

    const Money base_s = ExtensionValue(instance, s);
    const Money base_t = ExtensionValue(instance, t);
    s.Insert(j, l);
    t.Insert(j, l);
    const Money gain_s = ExtensionValue(instance, s) - base_s;
    const Money gain_t = ExtensionValue(instance, t) - base_t;
    Record(gain_t, gain_s, report);
    Record(gain_s, 0.0, report);
    ++report.samples;
  }
  return report;
}

std::string SerializePropertyReport(const std::string& property,
                                    const PropertyReport& report) {
  nlohmann::ordered_json j;
  j["property"] = property;
  j["samples"] = report.samples;
  j["violations"] = report.violations;
  j["worst_violation"] = report.worst_violation;
  j["holds"] = report.violations == 0;
  return j.dump(2);
}

}  // namespace dmp
