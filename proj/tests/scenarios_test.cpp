//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "kpath/random_graph.hpp"
#include "kpath/scenarios.hpp"

namespace kpath {
namespace {

DatasetRecord labeled(std::string id, std::int64_t cls, const char* split) {
  Graph g(std::move(id), 3, {{0, 1}, {1, 2}}, std::nullopt,
          TargetMap{{"class", cls}});
  return DatasetRecord{std::move(g), SplitTag{std::string(split)}};
}

DatasetRecord regression_rec(std::string id, double y, const char* split) {
  Graph g(std::move(id), 3, {{0, 1}, {1, 2}}, std::nullopt, TargetMap{{"count", y}});
  return DatasetRecord{std::move(g), SplitTag{std::string(split)}};
}

std::map<std::int64_t, std::size_t> train_class_counts(
    const std::vector<DatasetRecord>& records) {
  std::map<std::int64_t, std::size_t> counts;
  for (const auto& rec : records) {
    if (!is_split(rec, "train")) continue;
    counts[std::get<std::int64_t>(rec.graph.targets().at("class"))] += 1;
  }
  return counts;
}

TEST(NoiseTest, RemovesExactCount) {
  // 10 edges: C8 ring plus two chords.
  const Graph g = build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                  {5, 6}, {6, 7}, {7, 0}, {0, 4}, {2, 6}});
  ASSERT_EQ(g.num_edges(), 10u);
  std::vector<DatasetRecord> records = {DatasetRecord{g, std::nullopt}};
  const auto noisy = inject_edge_noise(records, 0.5, 5);
  EXPECT_EQ(noisy[0].graph.num_edges(), 5u);
}

TEST(NoiseTest, RoundsHalfUp) {
  const Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  std::vector<DatasetRecord> records = {DatasetRecord{g, std::nullopt}};
  const auto noisy = inject_edge_noise(records, 0.5, 5);
  EXPECT_EQ(noisy[0].graph.num_edges(), 2u);  // 5 - round(2.5) = 5 - 3
}

TEST(NoiseTest, AlphaZeroIsIdentity) {
  std::vector<DatasetRecord> records;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    records.push_back(DatasetRecord{gen_random_graph({8, 12}, 12.0, seed), std::nullopt});
  }
  EXPECT_EQ(inject_edge_noise(records, 0.0, 9), records);
}

TEST(NoiseTest, DeterministicAndThreadIndependent) {
  std::vector<DatasetRecord> records;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    records.push_back(DatasetRecord{gen_random_graph({8, 12}, 12.0, seed), std::nullopt});
  }
  const auto a = inject_edge_noise(records, 0.3, 4, 1);
  const auto b = inject_edge_noise(records, 0.3, 4, 8);
  EXPECT_EQ(a, b);
}

TEST(NoiseTest, KeepsTargetsAndRemovesSubset) {
  Graph g("x", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}, std::nullopt,
          TargetMap{{"cycle6", std::int64_t{1}}});
  std::vector<DatasetRecord> records = {DatasetRecord{g, SplitTag{std::string("test")}}};
  const auto noisy = inject_edge_noise(records, 0.4, 11);
  EXPECT_EQ(noisy[0].graph.targets(), g.targets());
  EXPECT_EQ(noisy[0].split, records[0].split);
  EXPECT_EQ(noisy[0].graph.num_edges(), 4u);  // 6 - round(2.4)
  const EdgeList all = g.edges();
  for (const auto& e : noisy[0].graph.edges()) {
    EXPECT_NE(std::find(all.begin(), all.end(), e), all.end());
  }
}

TEST(ImbalanceTest, ClassSizesFollowPowerLaw) {
  std::vector<DatasetRecord> records;
  int id = 0;
  for (int i = 0; i < 30; ++i) records.push_back(labeled("a" + std::to_string(id++), 0, "train"));
  for (int i = 0; i < 20; ++i) records.push_back(labeled("b" + std::to_string(id++), 1, "train"));
  for (int i = 0; i < 12; ++i) records.push_back(labeled("c" + std::to_string(id++), 2, "train"));
  for (int i = 0; i < 4; ++i) records.push_back(labeled("v" + std::to_string(id++), 0, "valid"));
  const auto result = imbalance_subsample(records, 1.0, 3, TaskKind::Classification, "class");
  const auto counts = train_class_counts(result.records);
  EXPECT_EQ(counts.at(0), 30u);
  EXPECT_EQ(counts.at(1), 15u);  // floor(30 / 2)
  EXPECT_EQ(counts.at(2), 10u);  // floor(30 / 3)
  EXPECT_TRUE(result.flags.empty());
  // valid untouched
  std::size_t valid = 0;
  for (const auto& rec : result.records) valid += is_split(rec, "valid");
  EXPECT_EQ(valid, 4u);
}

TEST(ImbalanceTest, BetaZeroCapsAtFirstClassCount) {
  std::vector<DatasetRecord> records;
  int id = 0;
  for (int i = 0; i < 10; ++i) records.push_back(labeled("a" + std::to_string(id++), 0, "train"));
  for (int i = 0; i < 10; ++i) records.push_back(labeled("b" + std::to_string(id++), 1, "train"));
  const auto result = imbalance_subsample(records, 0.0, 3, TaskKind::Classification, "class");
  const auto counts = train_class_counts(result.records);
  EXPECT_EQ(counts.at(0), 10u);
  EXPECT_EQ(counts.at(1), 10u);
}

TEST(ImbalanceTest, ShortClassKeepsAllAndFlags) {
  std::vector<DatasetRecord> records;
  int id = 0;
  for (int i = 0; i < 30; ++i) records.push_back(labeled("a" + std::to_string(id++), 0, "train"));
  for (int i = 0; i < 7; ++i) records.push_back(labeled("b" + std::to_string(id++), 1, "train"));
  const auto result = imbalance_subsample(records, 1.0, 3, TaskKind::Classification, "class");
  const auto counts = train_class_counts(result.records);
  EXPECT_EQ(counts.at(1), 7u);  // wanted 15, only 7
  ASSERT_EQ(result.flags.size(), 1u);
  EXPECT_NE(result.flags[0].find("wanted 15"), std::string::npos);
}

TEST(ImbalanceTest, RegressionBuckets) {
  std::vector<DatasetRecord> records;
  int id = 0;
  // Three equal-width buckets over [0, 9): 6 records each.
  for (int b = 0; b < 3; ++b) {
    for (int i = 0; i < 6; ++i) {
      records.push_back(
          regression_rec("r" + std::to_string(id++), 3.0 * b + 0.5 * i, "train"));
    }
  }
  const auto result =
      imbalance_subsample(records, 1.0, 7, TaskKind::Regression, "count", 3);
  std::map<int, std::size_t> bucket_counts;
  for (const auto& rec : result.records) {
    const double y = std::get<double>(rec.graph.targets().at("count"));
    bucket_counts[static_cast<int>(y / 3.0)] += 1;
  }
  EXPECT_EQ(bucket_counts.at(0), 6u);
  EXPECT_EQ(bucket_counts.at(1), 3u);  // floor(6 / 2)
  EXPECT_EQ(bucket_counts.at(2), 2u);  // floor(6 / 3)
}

TEST(ImbalanceTest, RequiresTrainingRecords) {
  std::vector<DatasetRecord> records = {labeled("a", 0, "test")};
  EXPECT_THROW(imbalance_subsample(records, 1.0, 3, TaskKind::Classification, "class"),
               std::invalid_argument);
}

TEST(FewShotTest, KeepsGammaPerClass) {
  std::vector<DatasetRecord> records;
  int id = 0;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < 20; ++i) {
      records.push_back(labeled("t" + std::to_string(id++), c, "train"));
    }
  }
  for (int i = 0; i < 9; ++i) records.push_back(labeled("x" + std::to_string(id++), 0, "test"));
  const auto result = few_shot_subsample(records, 5, 2, TaskKind::Classification, "class");
  std::size_t train = 0, test = 0;
  for (const auto& rec : result.records) {
    train += is_split(rec, "train");
    test += is_split(rec, "test");
  }
  EXPECT_EQ(train, 15u);
  EXPECT_EQ(test, 9u);
  EXPECT_TRUE(result.flags.empty());
}

TEST(FewShotTest, ShortfallKeepsAllAndFlags) {
  std::vector<DatasetRecord> records;
  int id = 0;
  for (int i = 0; i < 3; ++i) records.push_back(labeled("a" + std::to_string(id++), 0, "train"));
  for (int i = 0; i < 8; ++i) records.push_back(labeled("b" + std::to_string(id++), 1, "train"));
  const auto result = few_shot_subsample(records, 5, 2, TaskKind::Classification, "class");
  const auto counts = train_class_counts(result.records);
  EXPECT_EQ(counts.at(0), 3u);
  EXPECT_EQ(counts.at(1), 5u);
  ASSERT_EQ(result.flags.size(), 1u);
}

TEST(FewShotTest, DeterministicSelection) {
  std::vector<DatasetRecord> records;
  int id = 0;
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < 30; ++i) {
      records.push_back(labeled("t" + std::to_string(id++), c, "train"));
    }
  }
  const auto a = few_shot_subsample(records, 7, 13, TaskKind::Classification, "class");
  const auto b = few_shot_subsample(records, 7, 13, TaskKind::Classification, "class");
  EXPECT_EQ(a.records, b.records);
}

TEST(MakeSplitsTest, TenFoldPartition) {
  std::vector<DatasetRecord> records;
  for (int i = 0; i < 100; ++i) records.push_back(labeled("r" + std::to_string(i), 0, "train"));
  const auto tagged = make_splits(records, SplitScheme::kfold(10), 3);
  std::map<std::int64_t, std::size_t> folds;
  for (const auto& rec : tagged) {
    ASSERT_TRUE(rec.split.has_value());
    folds[std::get<std::int64_t>(*rec.split)] += 1;
  }
  ASSERT_EQ(folds.size(), 10u);
  for (const auto& [fold, size] : folds) EXPECT_EQ(size, 10u);
}

TEST(MakeSplitsTest, UnevenFoldsDifferByAtMostOne) {
  std::vector<DatasetRecord> records;
  for (int i = 0; i < 23; ++i) records.push_back(labeled("r" + std::to_string(i), 0, "train"));
  const auto tagged = make_splits(records, SplitScheme::kfold(4), 3);
  std::map<std::int64_t, std::size_t> folds;
  for (const auto& rec : tagged) folds[std::get<std::int64_t>(*rec.split)] += 1;
  std::size_t lo = 23, hi = 0;
  for (const auto& [fold, size] : folds) {
    lo = std::min(lo, size);
    hi = std::max(hi, size);
  }
  EXPECT_LE(hi - lo, 1u);
}

TEST(MakeSplitsTest, RatioFiveThousand) {
  std::vector<DatasetRecord> records;
  for (int i = 0; i < 5000; ++i) {
    records.push_back(DatasetRecord{Graph("r" + std::to_string(i), 3, {{0, 1}}), std::nullopt});
  }
  const auto tagged = make_splits(records, SplitScheme::with_ratio({3, 2, 5}), 8);
  std::size_t train = 0, valid = 0, test = 0;
  for (const auto& rec : tagged) {
    train += is_split(rec, "train");
    valid += is_split(rec, "valid");
    test += is_split(rec, "test");
  }
  EXPECT_EQ(train, 1500u);
  EXPECT_EQ(valid, 1000u);
  EXPECT_EQ(test, 2500u);
}

TEST(MakeSplitsTest, LargeRatioRemainderToTrain) {
  std::vector<DatasetRecord> records;
  for (int i = 0; i < 41127; ++i) {
    records.push_back(DatasetRecord{Graph("", 3, {}), std::nullopt});
  }
  const auto tagged = make_splits(records, SplitScheme::with_ratio({8, 1, 1}), 8);
  std::size_t train = 0, valid = 0, test = 0;
  for (const auto& rec : tagged) {
    train += is_split(rec, "train");
    valid += is_split(rec, "valid");
    test += is_split(rec, "test");
  }
  // Floor shares are 32901 / 4112 / 4112; the remainder of 2 goes to train.
  EXPECT_EQ(train, 32903u);
  EXPECT_EQ(valid, 4112u);
  EXPECT_EQ(test, 4112u);
}

TEST(MakeSplitsTest, RejectsMoreFoldsThanRecords) {
  std::vector<DatasetRecord> records = {labeled("a", 0, "train")};
  EXPECT_THROW(make_splits(records, SplitScheme::kfold(2), 1), std::invalid_argument);
}

}  // namespace
}  // namespace kpath
