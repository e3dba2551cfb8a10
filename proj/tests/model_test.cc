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

#include "dmp/model.h"

#include <algorithm>
#include <cstdio>
#include <string>

#include "dmp/io.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace dmp {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;

TEST(ValidateInstanceTest, AcceptsWellFormed) {
  Instance inst{{1, 1}, {{1, 1}, {0.001, 2}}};
  EXPECT_THAT(ValidateInstance(inst), IsEmpty());
}

TEST(ValidateInstanceTest, FlagsNegativeValue) {
  Instance inst{{1}, {{-1}}};
  EXPECT_THAT(ValidateInstance(inst),
              ElementsAre(HasSubstr("negative value")));
}

TEST(ValidateInstanceTest, FlagsAllZeroBudgets) {
  Instance inst{{0, 0}, {{1}, {1}}};
  EXPECT_THAT(ValidateInstance(inst),
              ElementsAre(HasSubstr("no positive budget")));
}

TEST(ValidateInstanceTest, FlagsRaggedRows) {
  Instance inst{{1, 1}, {{1, 1}, {1}}};
  EXPECT_THAT(ValidateInstance(inst), ElementsAre(HasSubstr("dimension")));
}

TEST(ValidateInstanceTest, InfiniteBudgetCountsAsPositive) {
  Instance inst{{kInfinity}, {{0}}};
  EXPECT_THAT(ValidateInstance(inst), IsEmpty());
}

TEST(ShardCurveTest, MergesEqualSlopesAndDropsEmptyShards) {
  auto c = ShardCurve::Create({{0.25, 1}, {0.0, 2}, {0.25, 1}, {0.5, 3}});
  ASSERT_TRUE(c.ok()) << c.status();
  EXPECT_THAT(c->shards(), ElementsAre(Shard{0.5, 1}, Shard{0.5, 3}));
}

TEST(ShardCurveTest, RejectsBadSizesAndSlopes) {
  EXPECT_FALSE(ShardCurve::Create({{0.5, 1}}).ok());
  EXPECT_FALSE(ShardCurve::Create({{0.5, 2}, {0.5, 1}}).ok());
  EXPECT_FALSE(ShardCurve::Create({{1.5, 1}, {-0.5, 2}}).ok());
  EXPECT_FALSE(ShardCurve::Create({{1.0, -1}}).ok());
}

TEST(ShardCurveTest, CanonicalSizesSumToOne) {
  auto c = ShardCurve::Create({{0.1, 1}, {0.2, 2}, {0.3, 2}, {0.4, 5}});
  ASSERT_TRUE(c.ok());
  double sum = 0;
  for (const Shard& s : c->shards()) sum += s.size;
  EXPECT_NEAR(sum, 1.0, 1e-9);
  EXPECT_EQ(c->num_shards(), 3);
}

TEST(ShardCurveTest, PriceAtIntegratesSlopes) {
  auto c = ShardCurve::Create({{0.3, 10}, {0.5, 20}, {0.2, 25}});
  ASSERT_TRUE(c.ok());
  EXPECT_DOUBLE_EQ(c->PriceAt(0), 0);
  EXPECT_DOUBLE_EQ(c->PriceAt(0.3), 3);
  EXPECT_DOUBLE_EQ(c->PriceAt(0.8), 13);
  EXPECT_DOUBLE_EQ(c->PriceAt(1), 18);
}

TEST(PartitionTest, InducesOwnerValues) {
  Instance inst{{1, 1}, {{0.2, 0.2, 0}, {0.6, 0.6, 0.5}}};
  Partition part{{0, 0, 1}};
  EXPECT_EQ(PricesFromPartition(inst, part).prices,
            (std::vector<double>{0.2, 0.2, 0.5}));
  Partition none{{Partition::kUnpriced, Partition::kUnpriced,
                  Partition::kUnpriced}};
  EXPECT_EQ(PricesFromPartition(inst, none).prices,
            (std::vector<double>{0, 0, 0}));
}

class IoTest : public ::testing::Test {
 protected:
  std::string TempPath(const std::string& name) {
    return ::testing::TempDir() + "/" + name;
  }
};

TEST_F(IoTest, LoadsExampleInstance) {
  auto inst = ParseInstance(
      R"({"budgets": [1, 1], "values": [[1, 1], [0.001, 2]]})");
  ASSERT_TRUE(inst.ok()) << inst.status();
  EXPECT_EQ(inst->num_buyers(), 2);
  EXPECT_EQ(inst->num_datasets(), 2);
  EXPECT_EQ(inst->value(1, 0), 0.001);
}

TEST_F(IoTest, InfBudgetString) {
  auto inst = ParseInstance(R"({"budgets": ["inf"], "values": [[0]]})");
  ASSERT_TRUE(inst.ok()) << inst.status();
  EXPECT_TRUE(IsInfinite(inst->budgets[0]));
}

TEST_F(IoTest, RejectsDimensionMismatch) {
  auto inst =
      ParseInstance(R"({"budgets": [1, 1], "values": [[1, 1], [2]]})");
  EXPECT_EQ(inst.status().code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_THAT(inst.status().message(), HasSubstr("dimension"));
}

TEST_F(IoTest, RejectsMalformedJson) {
  EXPECT_EQ(ParseInstance("{not json").status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(ParseInstance(R"({"budgets": [1]})").status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST_F(IoTest, MissingFileIsNotFound) {
  EXPECT_EQ(LoadInstance(TempPath("does-not-exist.json")).status().code(),
            absl::StatusCode::kNotFound);
}

TEST_F(IoTest, InstanceRoundTripIsExact) {
  Instance inst{{0.1, kInfinity, 1.0 / 3},
                {{0.1, 0.7}, {1e-17, 123456.789}, {2.0 / 3, 0}}};
  const std::string path = TempPath("roundtrip.json");
  ASSERT_TRUE(SaveInstance(inst, path).ok());
  auto back = LoadInstance(path);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, inst);
  std::remove(path.c_str());
}

TEST_F(IoTest, ShardSetAndPricesRoundTrip) {
  ShardSet set{{*ShardCurve::Create({{0.3, 0.1}, {0.7, 0.4}}),
                ShardCurve::Linear(2)}};
  auto back = ParseShardSet(SerializeShardSet(set));
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, set);

  PriceVector p{{0.2, 0.2, 0.5}};
  auto pb = ParsePriceVector(SerializePriceVector(p));
  ASSERT_TRUE(pb.ok());
  EXPECT_EQ(*pb, p);
}

TEST_F(IoTest, ShardSetRejectsNonConvexCurve) {
  EXPECT_FALSE(ParseShardSet(
                   R"({"curves": [[{"size": 0.5, "slope": 2},
                                   {"size": 0.5, "slope": 1}]]})")
                   .ok());
}

TEST_F(IoTest, PricesRejectNegative) {
  EXPECT_FALSE(ParsePriceVector(R"({"prices": [1, -0.5]})").ok());
}

}  // namespace
}  // namespace dmp
