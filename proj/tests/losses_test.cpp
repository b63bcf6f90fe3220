//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <gtest/gtest.h>

#include <cmath>

#include "kpath/losses.hpp"
#include "kpath/rng.hpp"

namespace kpath {
namespace {

Embedding emb(std::vector<double> values, std::string id = "",
              std::optional<TargetValue> label = std::nullopt) {
  return Embedding{std::move(values), std::move(id), std::move(label)};
}

// Slow loop-free-of-shortcuts reference for the batch loss: builds the full
// similarity table and sums straight from the definition.
double reference_batch_loss(const std::vector<ViewPair>& batch, double tau) {
  const std::size_t b = batch.size();
  std::vector<const Embedding*> views;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < b; ++i) {
    views.push_back(&batch[i].hat);
    views.push_back(&batch[i].tilde);
    owner.push_back(i);
    owner.push_back(i);
  }
  const std::size_t m = views.size();
  std::vector<std::vector<double>> table(m, std::vector<double>(m, 0.0));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (x != y) table[x][y] = similarity(*views[x], *views[y], tau);
    }
  }
  double num = 0.0;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (x == y || owner[x] == owner[y]) continue;
      if (batch[owner[x]].label == batch[owner[y]].label) num += table[x][y];
    }
  }
  for (std::size_t i = 0; i < b; ++i) num += table[2 * i][2 * i + 1];
  double den = 0.0;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) den += table[x][y];
  }
  return -std::log(num / den);
}

TEST(SimilarityTest, KnownValues) {
  EXPECT_NEAR(similarity(emb({1, 0}), emb({1, 0}), 1.0), std::exp(1.0), 1e-12);
  EXPECT_NEAR(similarity(emb({1, 0}), emb({0, 1}), 1.0), 1.0, 1e-12);
  EXPECT_NEAR(similarity(emb({1, 0}), emb({1, 0}), 0.5), std::exp(2.0), 1e-12);
}

TEST(SimilarityTest, Rejections) {
  EXPECT_THROW(similarity(emb({0, 0}), emb({1, 0}), 1.0), std::invalid_argument);
  EXPECT_THROW(similarity(emb({1, 0}), emb({1, 0}), 0.0), std::invalid_argument);
  EXPECT_THROW(similarity(emb({1}), emb({1, 0}), 1.0), std::invalid_argument);
}

TEST(InfoNceTest, GoldenWithOneOrthogonalNegative) {
  const Embedding u = emb({1, 0});
  const std::vector<Embedding> negatives = {emb({0, 1})};
  // -ln(e / (2e + 2)), evaluated independently.
  EXPECT_NEAR(infonce_loss(u, u, negatives, 1.0), 1.0064088680781682, 1e-12);
}

TEST(InfoNceTest, NoNegativesIsLnTwo) {
  const Embedding u = emb({0.3, -0.4, 1.1});
  const std::vector<Embedding> none;
  EXPECT_NEAR(infonce_loss(u, u, none, 1.0), std::log(2.0), 1e-12);
}

TEST(InfoNceTest, TwoNegativesGolden) {
  const Embedding hat = emb({1.0, 0.5});
  const Embedding tilde = emb({0.75, 1.0});
  const std::vector<Embedding> negatives = {emb({-1.0, 0.25}), emb({0.5, -0.75})};
  EXPECT_NEAR(infonce_loss(hat, tilde, negatives, 0.5), 0.8811415898766427, 1e-12);
}

TEST(InfoNceTest, ScaleInvariant) {
  const Embedding hat = emb({1.0, 0.5});
  const Embedding tilde = emb({0.75, 1.0});
  std::vector<Embedding> negatives = {emb({-1.0, 0.25}), emb({0.5, -0.75})};
  const double base = infonce_loss(hat, tilde, negatives, 0.7);
  auto scale = [](Embedding e) {
    for (double& x : e.values) x *= 5.0;
    return e;
  };
  std::vector<Embedding> scaled_negatives;
  for (const auto& n : negatives) scaled_negatives.push_back(scale(n));
  const double scaled = infonce_loss(scale(hat), scale(tilde), scaled_negatives, 0.7);
  EXPECT_NEAR(scaled, base, 1e-12);
  EXPECT_GT(base, 0.0);
}

TEST(BatchContrastiveTest, IdenticalViewsGolden) {
  const Embedding u = emb({1, 0});
  const std::vector<ViewPair> batch = {{u, u, 0}, {u, u, 0}};
  // -ln(10e / 12e) = ln(6/5), frozen from the independent evaluator.
  EXPECT_NEAR(batch_contrastive_loss(batch, 1.0), 0.1823215567939546, 1e-12);
}

TEST(BatchContrastiveTest, FixedBatchGolden) {
  const std::vector<ViewPair> batch = {
      {emb({1.0, 0.25, -0.5}), emb({0.75, 0.5, -0.25}), 0},
      {emb({-0.5, 1.0, 0.125}), emb({-0.25, 0.75, 0.5}), 1},
      {emb({0.5, -0.125, 1.0}), emb({0.25, 0.125, 0.75}), 0},
  };
  EXPECT_NEAR(batch_contrastive_loss(batch, 0.7), 0.9275479103757882, 1e-12);
  EXPECT_NEAR(reference_batch_loss(batch, 0.7), 0.9275479103757882, 1e-12);
}

TEST(BatchContrastiveTest, MatchesReferenceOnRandomBatches) {
  Rng rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ViewPair> batch;
    const std::size_t b = 2 + rng.next_below(5);
    for (std::size_t i = 0; i < b; ++i) {
      auto vec = [&] {
        std::vector<double> v(3);
        for (double& x : v) x = rng.next_double() * 2.0 - 1.0;
        if (std::abs(v[0]) < 1e-3) v[0] = 0.5;
        return v;
      };
      batch.push_back({emb(vec()), emb(vec()),
                       static_cast<std::int64_t>(rng.next_below(3))});
    }
    const double got = batch_contrastive_loss(batch, 0.6);
    EXPECT_NEAR(got, reference_batch_loss(batch, 0.6), 1e-10);
  }
}

TEST(BatchContrastiveTest, PermutationInvariant) {
  Rng rng(99);
  std::vector<ViewPair> batch;
  for (int i = 0; i < 6; ++i) {
    batch.push_back({emb({rng.next_double() + 0.1, rng.next_double()}),
                     emb({rng.next_double() + 0.1, rng.next_double()}),
                     static_cast<std::int64_t>(i % 2)});
  }
  const double base = batch_contrastive_loss(batch, 1.0);
  auto shuffled = batch;
  deterministic_shuffle(shuffled, rng);
  EXPECT_NEAR(batch_contrastive_loss(shuffled, 1.0), base, 1e-12);
}

TEST(BatchContrastiveTest, ScaleInvariant) {
  std::vector<ViewPair> batch = {
      {emb({1.0, 0.25, -0.5}), emb({0.75, 0.5, -0.25}), 0},
      {emb({-0.5, 1.0, 0.125}), emb({-0.25, 0.75, 0.5}), 1},
  };
  const double base = batch_contrastive_loss(batch, 0.8);
  for (auto& pair : batch) {
    for (double& x : pair.hat.values) x *= 123.0;
    for (double& x : pair.tilde.values) x *= 123.0;
  }
  EXPECT_NEAR(batch_contrastive_loss(batch, 0.8), base, 1e-12);
}

TEST(BatchContrastiveTest, RejectsSingletonBatch) {
  const Embedding u = emb({1, 0});
  const std::vector<ViewPair> batch = {{u, u, 0}};
  EXPECT_THROW(batch_contrastive_loss(batch, 1.0), std::invalid_argument);
}

TEST(PredictionTest, Validation) {
  EXPECT_NO_THROW(Prediction::classification({0.5, 0.5}));
  EXPECT_THROW(Prediction::classification({0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(Prediction::classification({-0.1, 1.1}), std::invalid_argument);
  EXPECT_THROW(Prediction::classification({}), std::invalid_argument);
  EXPECT_THROW(Prediction::regression(1.0).probabilities(), std::invalid_argument);
  EXPECT_THROW(Prediction::classification({1.0, 0.0}).value(), std::invalid_argument);
}

TEST(TaskLossTest, Examples) {
  EXPECT_NEAR(task_loss(Prediction::classification({1.0, 0.0}), TargetValue{std::int64_t{0}}),
              0.0, 1e-12);
  EXPECT_NEAR(task_loss(Prediction::classification({0.5, 0.5}), TargetValue{std::int64_t{1}}),
              std::log(2.0), 1e-12);
  EXPECT_NEAR(task_loss(Prediction::regression(3.0), TargetValue{5.0}), 2.0, 1e-12);
}

TEST(TaskLossTest, ZeroProbabilityClampsAtEpsilon) {
  const double loss =
      task_loss(Prediction::classification({1.0, 0.0}), TargetValue{std::int64_t{1}});
  EXPECT_NEAR(loss, -std::log(1e-12), 1e-9);
}

TEST(TaskLossTest, LabelSetSumsTerms) {
  const auto pred = Prediction::classification({0.25, 0.25, 0.5});
  const TargetValue y = std::vector<std::int64_t>{0, 2};
  EXPECT_NEAR(task_loss(pred, y), -std::log(0.25) - std::log(0.5), 1e-12);
}

TEST(TaskLossTest, Mismatches) {
  EXPECT_THROW(task_loss(Prediction::regression(1.0), TargetValue{std::int64_t{0}}),
               std::invalid_argument);
  EXPECT_THROW(
      task_loss(Prediction::classification({1.0, 0.0}), TargetValue{std::int64_t{7}}),
      std::invalid_argument);
}

TEST(ConsistencyLossTest, RegressionOneSided) {
  const auto hat = Prediction::regression(4.0);
  const auto tilde = Prediction::regression(6.0);
  EXPECT_NEAR(consistency_loss(hat, tilde, TargetValue{5.0}), 1.0, 1e-12);
  EXPECT_NEAR(consistency_loss(Prediction::regression(5.0), Prediction::regression(2.0),
                               TargetValue{5.0}),
              0.0, 1e-12);
}

TEST(ConsistencyLossTest, ZeroIffBothBelowTarget) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const double y = rng.next_double() * 10;
    const double a = rng.next_double() * 12;
    const double b = rng.next_double() * 12;
    const double loss = consistency_loss(Prediction::regression(a),
                                         Prediction::regression(b), TargetValue{y});
    EXPECT_EQ(loss == 0.0, a <= y && b <= y);
  }
}

TEST(ConsistencyLossTest, ClassificationExample) {
  const auto hat = Prediction::classification({0.5, 0.5});
  const auto tilde = Prediction::classification({0.25, 0.75});
  EXPECT_NEAR(consistency_loss(hat, tilde, TargetValue{std::int64_t{0}}),
              2.0794415416798357, 1e-12);  // ln 2 + ln 4
}

TEST(SelectNegativesTest, Policies) {
  const std::vector<Embedding> pool = {
      emb({1, 0}, "a", TargetValue{std::int64_t{0}}),
      emb({0, 1}, "b", TargetValue{std::int64_t{1}}),
      emb({1, 1}, "c", TargetValue{std::int64_t{0}}),
  };
  const Embedding anchor = emb({2, 0}, "a", TargetValue{std::int64_t{0}});
  const auto different = select_negatives(pool, anchor, NegativePolicy::DifferentLabel);
  ASSERT_EQ(different.size(), 1u);
  EXPECT_EQ(different[0].id, "b");
  const auto all = select_negatives(pool, anchor, NegativePolicy::AllGraphs);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].id, "b");
  EXPECT_EQ(all[1].id, "c");
}

}  // namespace
}  // namespace kpath
