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

#include "dmp/io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "json.hpp"

namespace dmp {
namespace {

using json = nlohmann::json;

absl::StatusOr<json> ParseJson(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr,
                         /*allow_exceptions=*/false);
  if (doc.is_discarded()) return absl::InvalidArgumentError("malformed JSON");
  if (!doc.is_object()) {
    return absl::InvalidArgumentError("expected a JSON object");
  }
  return doc;
}

absl::StatusOr<double> ParseNumber(const json& v, std::string_view what) {
  if (!v.is_number()) {
    return absl::InvalidArgumentError(
        absl::StrCat(std::string(what), " must be a number"));
  }
  return v.get<double>();
}

json BudgetToJson(Money b) {
  if (IsInfinite(b)) return "inf";
  return b;
}

}  // namespace

absl::StatusOr<Instance> ParseInstance(std::string_view text) {
  absl::StatusOr<json> doc = ParseJson(text);
  if (!doc.ok()) return doc.status();
  if (!doc->contains("budgets") || !(*doc)["budgets"].is_array()) {
    return absl::InvalidArgumentError("missing \"budgets\" array");
  }
  if (!doc->contains("values") || !(*doc)["values"].is_array()) {
    return absl::InvalidArgumentError("missing \"values\" array");
  }

  Instance instance;
  for (const json& b : (*doc)["budgets"]) {
    if (b.is_string()) {
      if (b.get<std::string>() != "inf") {
        return absl::InvalidArgumentError(
            "budget strings other than \"inf\" are not allowed");
      }
      instance.budgets.push_back(kInfinity);
      continue;
    }
    absl::StatusOr<double> value = ParseNumber(b, "budget");
    if (!value.ok()) return value.status();
    instance.budgets.push_back(*value);
  }
  for (const json& row : (*doc)["values"]) {
    if (!row.is_array()) {
      return absl::InvalidArgumentError("each values row must be an array");
    }
    std::vector<double> parsed;
    parsed.reserve(row.size());
    for (const json& v : row) {
      absl::StatusOr<double> value = ParseNumber(v, "value");
      if (!value.ok()) return value.status();
      parsed.push_back(*value);
    }
    instance.values.push_back(std::move(parsed));
  }

  std::vector<std::string> violations = ValidateInstance(instance);
  if (!violations.empty()) {
    return absl::FailedPreconditionError(
        absl::StrCat("invalid instance: ", absl::StrJoin(violations, "; ")));
  }
  return instance;
}

absl::StatusOr<Instance> LoadInstance(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  return ParseInstance(*text);
}

std::string SerializeInstance(const Instance& instance) {
  json doc;
  doc["budgets"] = json::array();
  for (Money b : instance.budgets) doc["budgets"].push_back(BudgetToJson(b));
  doc["values"] = instance.values;
  return doc.dump(2);
}

absl::Status SaveInstance(const Instance& instance, const std::string& path) {
  return WriteFile(path, SerializeInstance(instance) + "\n");
}

absl::StatusOr<ShardSet> ParseShardSet(std::string_view text) {
  absl::StatusOr<json> doc = ParseJson(text);
  if (!doc.ok()) return doc.status();
  if (!doc->contains("curves") || !(*doc)["curves"].is_array()) {
    return absl::InvalidArgumentError("missing \"curves\" array");
  }
  ShardSet set;
  for (const json& curve : (*doc)["curves"]) {
    if (!curve.is_array()) {
      return absl::InvalidArgumentError("each curve must be an array");
    }
    std::vector<Shard> shards;
    for (const json& s : curve) {
      if (!s.is_object() || !s.contains("size") || !s.contains("slope")) {
        return absl::InvalidArgumentError(
            "each shard must be an object with \"size\" and \"slope\"");
      }
      absl::StatusOr<double> size = ParseNumber(s["size"], "shard size");
      if (!size.ok()) return size.status();
      absl::StatusOr<double> slope = ParseNumber(s["slope"], "shard slope");
      if (!slope.ok()) return slope.status();
      shards.push_back({*size, *slope});
    }
    absl::StatusOr<ShardCurve> c = ShardCurve::Create(std::move(shards));
    if (!c.ok()) return c.status();
    set.curves.push_back(*std::move(c));
  }
  return set;
}

absl::StatusOr<ShardSet> LoadShardSet(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  return ParseShardSet(*text);
}

std::string SerializeShardSet(const ShardSet& shards) {
  json doc;
  doc["curves"] = json::array();
  for (const ShardCurve& c : shards.curves) {
    json curve = json::array();
    for (const Shard& s : c.shards()) {
      curve.push_back({{"size", s.size}, {"slope", s.slope}});
    }
    doc["curves"].push_back(std::move(curve));
  }
  return doc.dump(2);
}

absl::StatusOr<PriceVector> ParsePriceVector(std::string_view text) {
  absl::StatusOr<json> doc = ParseJson(text);
  if (!doc.ok()) return doc.status();
  if (!doc->contains("prices") || !(*doc)["prices"].is_array()) {
    return absl::InvalidArgumentError("missing \"prices\" array");
  }
  PriceVector p;
  for (const json& v : (*doc)["prices"]) {
    absl::StatusOr<double> price = ParseNumber(v, "price");
    if (!price.ok()) return price.status();
    if (!std::isfinite(*price) || *price < 0) {
      return absl::FailedPreconditionError(
          absl::StrCat("price must be finite and non-negative, got ", *price));
    }
    p.prices.push_back(*price);
  }
  return p;
}

absl::StatusOr<PriceVector> LoadPriceVector(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  return ParsePriceVector(*text);
}

std::string SerializePriceVector(const PriceVector& prices) {
  json doc;
  doc["prices"] = prices.prices;
  return doc.dump(2);
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

absl::Status WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out << contents;
  if (!out) return absl::DataLossError(absl::StrCat("short write to ", path));
  return absl::OkStatus();
}

}  // namespace dmp
