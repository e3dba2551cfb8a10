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

// Randomized checks of the structural properties that the linear-pricing
// algorithms rely on.

#ifndef DMP_PROPERTIES_H_
#define DMP_PROPERTIES_H_

#include <cstdint>
#include <string>

#include "dmp/model.h"

namespace dmp {

struct PropertyReport {
  int64_t samples = 0;
  int64_t violations = 0;     // by more than kTolerance
  double worst_violation = 0; // largest amount by which an inequality failed
};

// Samples nested partitions T <= S (T keeps a random subset of S's
// assignments), an unassigned dataset j and a buyer i, and checks that
// assigning j to i gains at least as much from T as from S, and that the
// gain from S is non-negative.
PropertyReport SampleNSubmodularity(const Instance& instance, int64_t samples,
                                    uint64_t seed);

// Samples copy sets T subset of S and a copy e outside S, and checks
// diminishing returns and monotonicity of the extension.
PropertyReport SampleExtensionSubmodularity(const Instance& instance,
                                            int64_t samples, uint64_t seed);

// {"property": name, "samples": k, "violations": v, "worst_violation": w,
//  "holds": bool}
std::string SerializePropertyReport(const std::string& property,
                                    const PropertyReport& report);

}  // namespace dmp

#endif  // DMP_PROPERTIES_H_
