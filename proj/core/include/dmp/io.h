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

// JSON file formats.
//
//   Instance:    {"budgets": [number | "inf"], "values": [[number]]}
//   ShardSet:    {"curves": [[{"size": s, "slope": a}]]}
//   PriceVector: {"prices": [number]}
//
// Doubles are written in shortest round-trip form, so save-then-load is
// exact.

#ifndef DMP_IO_H_
#define DMP_IO_H_

#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dmp/model.h"

namespace dmp {

// Parse errors map to InvalidArgument; validation failures to
// FailedPrecondition with every violation listed.
absl::StatusOr<Instance> ParseInstance(std::string_view json);
absl::StatusOr<Instance> LoadInstance(const std::string& path);
std::string SerializeInstance(const Instance& instance);
absl::Status SaveInstance(const Instance& instance, const std::string& path);

absl::StatusOr<ShardSet> ParseShardSet(std::string_view json);
absl::StatusOr<ShardSet> LoadShardSet(const std::string& path);
std::string SerializeShardSet(const ShardSet& shards);

absl::StatusOr<PriceVector> ParsePriceVector(std::string_view json);
absl::StatusOr<PriceVector> LoadPriceVector(const std::string& path);
std::string SerializePriceVector(const PriceVector& prices);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, std::string_view contents);

}  // namespace dmp

#endif  // DMP_IO_H_
