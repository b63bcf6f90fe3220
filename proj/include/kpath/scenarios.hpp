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
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kpath/dataset.hpp"
#include "kpath/graph.hpp"
#include "kpath/parallel.hpp"
#include "kpath/rng.hpp"

namespace kpath {

enum class TaskKind { Classification, Regression };

// Removes exactly round-half-up(alpha * |edges|) uniformly chosen undirected
// edges from every graph; targets and splits are untouched. Per-record seeds
// derive from the master seed and the record index.
inline std::vector<DatasetRecord> inject_edge_noise(std::vector<DatasetRecord> records,
                                                    double alpha, std::uint64_t seed,
                                                    unsigned threads = 1) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("inject_edge_noise: alpha must be in [0,1]");
  }
  parallel_for(records.size(), threads, [&](std::size_t i) {
    const Graph& g = records[i].graph;
    EdgeList edges = g.edges();
    const auto remove =
        static_cast<std::size_t>(std::floor(alpha * static_cast<double>(edges.size()) + 0.5));
    if (remove == 0) return;
    Rng rng(mix_seed(seed, i));
    deterministic_shuffle(edges, rng);
    edges.erase(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(remove));
    records[i].graph = g.with_edges(edges);
  });
  return records;
}

struct SubsampleResult {
  std::vector<DatasetRecord> records;
  std::vector<std::string> flags;  // classes/buckets that came up short
};

namespace detail {

inline double numeric_target(const TargetValue& y, const std::string& name) {
  if (std::holds_alternative<std::int64_t>(y)) {
    return static_cast<double>(std::get<std::int64_t>(y));
  }
  if (std::holds_alternative<double>(y)) return std::get<double>(y);
  throw std::invalid_argument("target \"" + name + "\" is not numeric");
}

inline std::int64_t class_target(const TargetValue& y, const std::string& name) {
  if (!std::holds_alternative<std::int64_t>(y)) {
    throw std::invalid_argument("target \"" + name + "\" is not a class index");
  }
  return std::get<std::int64_t>(y);
}

// Groups training records by class value (classification) or by equal-width
// bucket over [y_min, y_max] of the training targets (regression; final
// bucket right-closed). Group keys are returned in ascending order.
inline std::map<std::int64_t, std::vector<std::size_t>> group_training_records(
    std::span<const DatasetRecord> records, TaskKind task, const std::string& target,
    int buckets) {
  std::vector<std::size_t> train;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (is_split(records[i], "train")) train.push_back(i);
  }
  if (train.empty()) {
    throw std::invalid_argument("no records tagged split=train");
  }
  std::map<std::int64_t, std::vector<std::size_t>> groups;
  if (task == TaskKind::Classification) {
    for (std::size_t i : train) {
      const auto& targets = records[i].graph.targets();
      auto it = targets.find(target);
      if (it == targets.end()) {
        throw std::invalid_argument("record " + records[i].graph.id() +
                                    " is missing target \"" + target + "\"");
      }
      groups[class_target(it->second, target)].push_back(i);
    }
    return groups;
  }
  if (buckets < 1) throw std::invalid_argument("bucket count must be >= 1");
  double lo = 0.0, hi = 0.0;
  bool first = true;
  std::vector<double> values(records.size(), 0.0);
  for (std::size_t i : train) {
    const auto& targets = records[i].graph.targets();
    auto it = targets.find(target);
    if (it == targets.end()) {
      throw std::invalid_argument("record " + records[i].graph.id() +
                                  " is missing target \"" + target + "\"");
    }
    values[i] = numeric_target(it->second, target);
    lo = first ? values[i] : std::min(lo, values[i]);
    hi = first ? values[i] : std::max(hi, values[i]);
    first = false;
  }
  const double width = (hi - lo) / static_cast<double>(buckets);
  for (std::size_t i : train) {
    std::int64_t bucket = 0;
    if (width > 0.0) {
      bucket = static_cast<std::int64_t>((values[i] - lo) / width);
      bucket = std::clamp<std::int64_t>(bucket, 0, buckets - 1);
    }
    groups[bucket].push_back(i);
  }
  return groups;
}

// Keeps `quota(rank, first_group_size)` training records per group, chosen
// uniformly per group; everything not tagged train passes through.
template <class Quota>
SubsampleResult subsample_by_group(std::span<const DatasetRecord> records,
                                   std::uint64_t seed, TaskKind task,
                                   const std::string& target, int buckets,
                                   Quota&& quota) {
  auto groups = group_training_records(records, task, target, buckets);
  const std::size_t first_size = groups.begin()->second.size();
  std::vector<bool> keep(records.size(), true);
  SubsampleResult out;
  std::size_t rank = 0;
  for (auto& [key, members] : groups) {
    ++rank;
    const std::size_t want = quota(rank, first_size);
    if (members.size() < want) {
      out.flags.push_back("group " + std::to_string(key) + ": wanted " +
                          std::to_string(want) + ", only " +
                          std::to_string(members.size()) + " available");
      continue;  // keep all
    }
    Rng rng(mix_seed(seed, rank));
    deterministic_shuffle(members, rng);
    for (std::size_t i = want; i < members.size(); ++i) keep[members[i]] = false;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (keep[i]) out.records.push_back(records[i]);
  }
  return out;
}

}  // namespace detail

// Class/bucket imbalance: group c (1-indexed, ascending key order) keeps
// floor(n1 / c^beta) training records, where n1 is the first group's count.
// Groups with fewer members keep everything and are flagged. Validation and
// test records are untouched.
inline SubsampleResult imbalance_subsample(std::span<const DatasetRecord> records,
                                           double beta, std::uint64_t seed,
                                           TaskKind task, const std::string& target,
                                           int buckets = 3) {
  if (beta < 0.0) throw std::invalid_argument("imbalance_subsample: beta must be >= 0");
  return detail::subsample_by_group(
      records, seed, task, target, buckets, [beta](std::size_t rank, std::size_t n1) {
        return static_cast<std::size_t>(
            std::floor(static_cast<double>(n1) /
                       std::pow(static_cast<double>(rank), beta)));
      });
}

// Few-shot: keep exactly gamma training records per class (or per bucket for
// regression, 5 equal-width buckets by default); shortfalls keep everything
// and are flagged.
inline SubsampleResult few_shot_subsample(std::span<const DatasetRecord> records,
                                          std::size_t gamma, std::uint64_t seed,
                                          TaskKind task, const std::string& target,
                                          int buckets = 5) {
  if (gamma < 1) throw std::invalid_argument("few_shot_subsample: gamma must be >= 1");
  return detail::subsample_by_group(records, seed, task, target, buckets,
                                    [gamma](std::size_t, std::size_t) { return gamma; });
}

struct SplitScheme {
  // kfold when folds >= 2, otherwise ratio.
  int folds = 0;
  std::array<std::uint32_t, 3> ratio{};  // train : valid : test

  static SplitScheme kfold(int k) { return SplitScheme{k, {}}; }
  static SplitScheme with_ratio(std::array<std::uint32_t, 3> r) { return SplitScheme{0, r}; }
};

// Assigns split tags over a seeded shuffle. Ratio splits take floor shares
// with the remainder going to train; k-fold assigns integer fold tags with
// sizes differing by at most one.
inline std::vector<DatasetRecord> make_splits(std::vector<DatasetRecord> records,
                                              const SplitScheme& scheme,
                                              std::uint64_t seed) {
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  deterministic_shuffle(order, rng);

  if (scheme.folds >= 2) {
    const auto k = static_cast<std::size_t>(scheme.folds);
    if (k > records.size()) {
      throw std::invalid_argument("make_splits: more folds than records");
    }
    const std::size_t q = records.size() / k, r = records.size() % k;
    std::size_t cursor = 0;
    for (std::size_t fold = 0; fold < k; ++fold) {
      const std::size_t size = q + (fold < r ? 1 : 0);
      for (std::size_t i = 0; i < size; ++i) {
        records[order[cursor++]].split = static_cast<std::int64_t>(fold);
      }
    }
    return records;
  }

  const auto [a, b, c] = scheme.ratio;
  const std::uint64_t total = static_cast<std::uint64_t>(a) + b + c;
  if (a == 0 || b == 0 || c == 0) {
    throw std::invalid_argument("make_splits: ratio components must be positive");
  }
  const std::size_t n = records.size();
  const std::size_t n_valid = static_cast<std::size_t>(n * static_cast<std::uint64_t>(b) / total);
  const std::size_t n_test = static_cast<std::size_t>(n * static_cast<std::uint64_t>(c) / total);
  const std::size_t n_train = n - n_valid - n_test;  // floor share + remainder
  for (std::size_t i = 0; i < n; ++i) {
    const char* tag = i < n_train ? "train" : (i < n_train + n_valid ? "valid" : "test");
    records[order[i]].split = std::string(tag);
  }
  return records;
}

}  // namespace kpath
