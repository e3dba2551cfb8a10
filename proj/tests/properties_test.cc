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

#include <random>

#include "dmp/fixtures.h"
#include "dmp/revenue.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "oracles.h"

namespace dmp {
namespace {

TEST(SampleNSubmodularityTest, HoldsOnRandomInstances) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 50; ++trial) {
    Instance inst = testing::RandomInstance(rng, 5, 5, true);
    const PropertyReport r = SampleNSubmodularity(inst, 200, rng());
    EXPECT_EQ(r.samples, 200);
    EXPECT_EQ(r.violations, 0) << "worst " << r.worst_violation;
  }
}

TEST(SampleExtensionSubmodularityTest, HoldsOnRandomInstances) {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 50; ++trial) {
    Instance inst = testing::RandomInstance(rng, 5, 5, true);
    const PropertyReport r = SampleExtensionSubmodularity(inst, 200, rng());
    EXPECT_EQ(r.violations, 0) << "worst " << r.worst_violation;
  }
}

TEST(SampleNSubmodularityTest, LinearPriceVectorsAreNotSubmodular) {
  // The same diminishing-returns test on raw price vectors fails on the
  // non-submodular example, which is why prices are recast as partitions.
  const double eps = 0.001;
  const Instance inst = *GenNonsub(eps);
  const double high = LinearRevenue(inst, {{1, 2}}) -
                      LinearRevenue(inst, {{eps, 2}});
  const double low = LinearRevenue(inst, {{1, 1}}) -
                     LinearRevenue(inst, {{eps, 1}});
  EXPECT_GT(high, low);
  EXPECT_EQ(SampleNSubmodularity(inst, 1000, 1).violations, 0);
}

TEST(SerializePropertyReportTest, Keys) {
  PropertyReport r;
  r.samples = 10;
  const auto j = nlohmann::json::parse(SerializePropertyReport("extension", r));
  EXPECT_EQ(j["property"], "extension");
  EXPECT_EQ(j["samples"], 10);
  EXPECT_EQ(j["holds"], true);
}

}  // namespace
}  // namespace dmp
