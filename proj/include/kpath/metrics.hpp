//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kpath/losses.hpp"

namespace kpath {

using LabelSet = std::vector<std::int64_t>;

struct MetricsReport {
  std::string task;  // "classification" | "regression"
  std::size_t count = 0;
  // classification
  double acc = 0.0;
  double micro_precision = 0.0, micro_recall = 0.0, micro_f1 = 0.0;
  double macro_precision = 0.0, macro_recall = 0.0, macro_f1 = 0.0;
  double macro_f1_classwise = 0.0;
  // regression
  double mae = 0.0;
  double r2 = 0.0;
};

namespace detail {

inline LabelSet normalized(LabelSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline std::size_t intersection_size(const LabelSet& a, const LabelSet& b) {
  std::size_t n = 0;
  auto it = b.begin();
  for (std::int64_t x : a) {
    it = std::lower_bound(it, b.end(), x);
    if (it == b.end()) break;
    if (*it == x) ++n;
  }
  return n;
}

inline double harmonic_f1(double p, double r) {
  return (p + r) > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

}  // namespace detail

// Strict accuracy (exact label-set match), pooled micro precision/recall/F1,
// sample-averaged macro precision/recall/F1 (samples with an empty
// prediction or truth set contribute 0 to the respective average), plus a
// conventional class-wise macro-F1 for reference. For single-label data
// micro-F1 equals accuracy.
inline MetricsReport classification_metrics(std::span<const LabelSet> preds,
                                            std::span<const LabelSet> truths) {
  if (preds.size() != truths.size()) {
    throw std::invalid_argument("classification_metrics: length mismatch");
  }
  if (preds.empty()) {
    throw std::invalid_argument("classification_metrics: empty input");
  }
  const std::size_t n = preds.size();
  MetricsReport report;
  report.task = "classification";
  report.count = n;

  std::size_t exact = 0;
  std::size_t pooled_intersection = 0, pooled_pred = 0, pooled_truth = 0;
  double sample_precision_sum = 0.0, sample_recall_sum = 0.0;
  std::map<std::int64_t, std::array<std::size_t, 3>> per_class;  // tp, fp, fn

  for (std::size_t i = 0; i < n; ++i) {
    const LabelSet pred = detail::normalized(preds[i]);
    const LabelSet truth = detail::normalized(truths[i]);
    const std::size_t common = detail::intersection_size(pred, truth);
    if (pred == truth) ++exact;
    pooled_intersection += common;
    pooled_pred += pred.size();
    pooled_truth += truth.size();
    if (!pred.empty()) {
      sample_precision_sum += static_cast<double>(common) / static_cast<double>(pred.size());
    }
    if (!truth.empty()) {
      sample_recall_sum += static_cast<double>(common) / static_cast<double>(truth.size());
    }
    for (std::int64_t c : pred) {
      const bool hit = std::binary_search(truth.begin(), truth.end(), c);
      auto& counters = per_class[c];
      if (hit) ++counters[0];
      else ++counters[1];
    }
    for (std::int64_t c : truth) {
      if (!std::binary_search(pred.begin(), pred.end(), c)) ++per_class[c][2];
    }
  }

  report.acc = static_cast<double>(exact) / static_cast<double>(n);
  report.micro_precision =
      pooled_pred > 0 ? static_cast<double>(pooled_intersection) / pooled_pred : 0.0;
  report.micro_recall =
      pooled_truth > 0 ? static_cast<double>(pooled_intersection) / pooled_truth : 0.0;
  report.micro_f1 = detail::harmonic_f1(report.micro_precision, report.micro_recall);
  report.macro_precision = sample_precision_sum / static_cast<double>(n);
  report.macro_recall = sample_recall_sum / static_cast<double>(n);
  report.macro_f1 = detail::harmonic_f1(report.macro_precision, report.macro_recall);

  double classwise_sum = 0.0;
  for (const auto& [c, counters] : per_class) {
    const auto [tp, fp, fn] = counters;
    const double p = (tp + fp) > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
    const double r = (tp + fn) > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
    classwise_sum += detail::harmonic_f1(p, r);
  }
  report.macro_f1_classwise =
      per_class.empty() ? 0.0 : classwise_sum / static_cast<double>(per_class.size());
  return report;
}

// MAE and coefficient of determination. R2 is the standard definition and
// may be negative for predictors worse than the truth mean; constant truths
// leave it undefined and are rejected.
inline MetricsReport regression_metrics(std::span<const double> preds,
                                        std::span<const double> truths) {
  if (preds.size() != truths.size()) {
    throw std::invalid_argument("regression_metrics: length mismatch");
  }
  if (preds.size() < 2) {
    throw std::invalid_argument("regression_metrics: need at least 2 samples");
  }
  const std::size_t n = preds.size();
  MetricsReport report;
  report.task = "regression";
  report.count = n;

  std::vector<double> abs_err(n), truth_copy(truths.begin(), truths.end());
  for (std::size_t i = 0; i < n; ++i) abs_err[i] = std::abs(truths[i] - preds[i]);
  report.mae = detail::pairwise_sum(abs_err) / static_cast<double>(n);

  const double mean = detail::pairwise_sum(truth_copy) / static_cast<double>(n);
  std::vector<double> ss_res(n), ss_tot(n);
  for (std::size_t i = 0; i < n; ++i) {
    ss_res[i] = (truths[i] - preds[i]) * (truths[i] - preds[i]);
    ss_tot[i] = (truths[i] - mean) * (truths[i] - mean);
  }
  const double total = detail::pairwise_sum(ss_tot);
  if (total == 0.0) {
    throw std::domain_error("regression_metrics: R2 undefined for constant truths");
  }
  report.r2 = 1.0 - detail::pairwise_sum(ss_res) / total;
  return report;
}

inline nlohmann::ordered_json metrics_to_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["task"] = report.task;
  j["count"] = report.count;
  if (report.task == "classification") {
    j["acc"] = report.acc;
    j["micro_precision"] = report.micro_precision;
    j["micro_recall"] = report.micro_recall;
    j["micro_f1"] = report.micro_f1;
    j["macro_precision"] = report.macro_precision;
    j["macro_recall"] = report.macro_recall;
    j["macro_f1"] = report.macro_f1;
    j["macro_f1_classwise"] = report.macro_f1_classwise;
  } else {
    j["mae"] = report.mae;
    j["r2"] = report.r2;
  }
  return j;
}

}  // namespace kpath
