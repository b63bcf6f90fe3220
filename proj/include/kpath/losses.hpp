//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

// Probabilities below this are clamped before taking logs.
inline constexpr double kLogEpsilon = 1e-12;

namespace detail {

// Pairwise summation: deterministic for a fixed input order and better
// conditioned than a running sum.
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace detail

struct Embedding {
  std::vector<double> values;
  std::string id;
  std::optional<TargetValue> label;
};

inline double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("cosine: width mismatch");
  if (a.empty()) throw std::invalid_argument("cosine: empty vectors");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) {
    throw std::invalid_argument("cosine: zero vector");
  }
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

// s(a, b) = exp(cosine(a, b) / tau).
inline double similarity(const Embedding& a, const Embedding& b, double tau) {
  if (tau <= 0.0) throw std::invalid_argument("similarity: tau must be positive");
  return std::exp(cosine(a.values, b.values) / tau);
}

// -log [ s(hat, tilde) / sum over both anchor views of their similarities to
// the other positive and every negative ]. Self-pairings are excluded, so
// with no negatives the denominator is s(hat,tilde) + s(tilde,hat).
inline double infonce_loss(const Embedding& hat, const Embedding& tilde,
                           std::span<const Embedding> negatives, double tau) {
  const double positive = similarity(hat, tilde, tau);
  std::vector<double> terms;
  terms.reserve(2 * negatives.size() + 2);
  terms.push_back(positive);
  terms.push_back(similarity(tilde, hat, tau));
  for (const Embedding& neg : negatives) {
    terms.push_back(similarity(hat, neg, tau));
    terms.push_back(similarity(tilde, neg, tau));
  }
  return -std::log(positive / detail::pairwise_sum(terms));
}

// One graph's two views plus its label.
struct ViewPair {
  Embedding hat;
  Embedding tilde;
  std::int64_t label = 0;
};

// Batch-level contrastive loss: the numerator sums similarities over every
// ordered pair of distinct same-label graphs (all four view combinations)
// plus each graph's own-view pair; the denominator sums over all ordered
// pairs of distinct view embeddings in the batch. Invariant under batch
// permutation and embedding rescaling.
inline double batch_contrastive_loss(std::span<const ViewPair> batch, double tau) {
  if (batch.size() < 2) {
    throw std::invalid_argument("batch_contrastive_loss: batch must have >= 2 graphs");
  }
  const std::size_t b = batch.size();
  auto view = [&](std::size_t i, int w) -> const Embedding& {
    return w == 0 ? batch[i].hat : batch[i].tilde;
  };
  std::vector<double> numerator_terms;
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      if (i == j || batch[i].label != batch[j].label) continue;
      for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) {
          numerator_terms.push_back(similarity(view(i, a), view(j, c), tau));
        }
      }
    }
  }
  for (std::size_t i = 0; i < b; ++i) {
    numerator_terms.push_back(similarity(batch[i].hat, batch[i].tilde, tau));
  }
  std::vector<double> denominator_terms;
  for (std::size_t i = 0; i < b; ++i) {
    for (int a = 0; a < 2; ++a) {
      for (std::size_t j = 0; j < b; ++j) {
        for (int c = 0; c < 2; ++c) {
          if (i == j && a == c) continue;
          denominator_terms.push_back(similarity(view(i, a), view(j, c), tau));
        }
      }
    }
  }
  return -std::log(detail::pairwise_sum(numerator_terms) /
                   detail::pairwise_sum(denominator_terms));
}

// A prediction: either a probability vector over classes or one real value.
class Prediction {
 public:
  static Prediction classification(std::vector<double> probs) {
    if (probs.empty()) throw std::invalid_argument("empty probability vector");
    double sum = 0.0;
    for (double p : probs) {
      if (p < 0.0) throw std::invalid_argument("probabilities must be non-negative");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::invalid_argument("probabilities must sum to 1");
    }
    Prediction out;
    out.value_ = std::move(probs);
    return out;
  }

  static Prediction regression(double value) {
    Prediction out;
    out.value_ = value;
    return out;
  }

  bool is_classification() const {
    return std::holds_alternative<std::vector<double>>(value_);
  }
  std::span<const double> probabilities() const {
    if (!is_classification()) throw std::invalid_argument("not a classification prediction");
    const auto& p = std::get<std::vector<double>>(value_);
    return {p.data(), p.size()};
  }
  double value() const {
    if (is_classification()) throw std::invalid_argument("not a regression prediction");
    return std::get<double>(value_);
  }

 private:
  std::variant<std::vector<double>, double> value_;
};

namespace detail {

inline double clamped_log(double p) { return std::log(std::max(p, kLogEpsilon)); }

inline std::vector<std::int64_t> label_set(const TargetValue& y) {
  if (std::holds_alternative<std::int64_t>(y)) {
    return {std::get<std::int64_t>(y)};
  }
  return std::get<std::vector<std::int64_t>>(y);
}

inline double log_prob_of(const Prediction& pred, std::int64_t label) {
  const auto probs = pred.probabilities();
  if (label < 0 || static_cast<std::size_t>(label) >= probs.size()) {
    throw std::invalid_argument("label " + std::to_string(label) +
                                " out of range for " + std::to_string(probs.size()) +
                                " classes");
  }
  return clamped_log(probs[static_cast<std::size_t>(label)]);
}

}  // namespace detail

// Cross-entropy over the true label set for classification, l2 distance for
// regression.
inline double task_loss(const Prediction& pred, const TargetValue& y) {
  if (std::holds_alternative<double>(y)) {
    return std::abs(pred.value() - std::get<double>(y));
  }
  if (!pred.is_classification()) {
    throw std::invalid_argument("task_loss: discrete target needs a classification prediction");
  }
  double loss = 0.0;
  for (std::int64_t label : detail::label_set(y)) {
    loss -= detail::log_prob_of(pred, label);
  }
  return loss;
}

// Classification: both views must put probability mass on the true labels.
// Regression: one-sided penalty, positive only where a view predicts above
// the target (view substructure counts cannot exceed the original's).
inline double consistency_loss(const Prediction& hat, const Prediction& tilde,
                               const TargetValue& y) {
  if (std::holds_alternative<double>(y)) {
    const double target = std::get<double>(y);
    return std::max(0.0, hat.value() - target) + std::max(0.0, tilde.value() - target);
  }
  if (!hat.is_classification() || !tilde.is_classification()) {
    throw std::invalid_argument(
        "consistency_loss: discrete target needs classification predictions");
  }
  double loss = 0.0;
  for (std::int64_t label : detail::label_set(y)) {
    loss -= detail::log_prob_of(hat, label) + detail::log_prob_of(tilde, label);
  }
  return loss;
}

// Negative selection policies for contrastive batches. DifferentLabel keeps
// pool members whose label differs from the anchor's; AllGraphs keeps every
// other member.
enum class NegativePolicy { AllGraphs, DifferentLabel };

inline std::vector<Embedding> select_negatives(
    std::span<const Embedding> pool, const Embedding& anchor,
    NegativePolicy policy = NegativePolicy::DifferentLabel) {
  std::vector<Embedding> out;
  for (const Embedding& e : pool) {
    if (e.id == anchor.id) continue;
    if (policy == NegativePolicy::DifferentLabel && e.label == anchor.label) continue;
    out.push_back(e);
  }
  return out;
}

}  // namespace kpath
