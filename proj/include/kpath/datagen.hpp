//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kpath/dataset.hpp"
#include "kpath/oracle.hpp"
#include "kpath/parallel.hpp"
#include "kpath/random_graph.hpp"
#include "kpath/scenarios.hpp"

namespace kpath {

struct GenSpec {
  std::vector<SubstructureKind> kinds;
  std::size_t num_graphs = 0;
  NodeRange node_range;
  double target_avg_edges = 0.0;
  std::uint64_t seed = 0;
  std::array<std::uint32_t, 3> split_ratio = {3, 2, 5};
};

struct TargetStats {
  double mean = 0.0;
  double variance = 0.0;  // population variance
  std::map<std::int64_t, std::size_t> histogram;  // integer targets only
};

struct DatasetStats {
  std::size_t count = 0;
  double mean_nodes = 0.0, stddev_nodes = 0.0;
  double mean_edges = 0.0, stddev_edges = 0.0;
  std::map<std::string, TargetStats> targets;
};

inline DatasetStats dataset_stats(std::span<const DatasetRecord> records) {
  if (records.empty()) throw std::invalid_argument("dataset_stats: empty dataset");
  DatasetStats stats;
  stats.count = records.size();
  double nodes = 0.0, nodes_sq = 0.0, edges = 0.0, edges_sq = 0.0;
  std::map<std::string, std::pair<double, double>> sums;  // sum, sum of squares
  std::map<std::string, std::size_t> counts;
  for (const auto& rec : records) {
    const double n = rec.graph.num_nodes();
    const double e = static_cast<double>(rec.graph.num_edges());
    nodes += n;
    nodes_sq += n * n;
    edges += e;
    edges_sq += e * e;
    for (const auto& [name, value] : rec.graph.targets()) {
      double x = 0.0;
      if (std::holds_alternative<std::int64_t>(value)) {
        const auto v = std::get<std::int64_t>(value);
        x = static_cast<double>(v);
        stats.targets[name].histogram[v] += 1;
      } else if (std::holds_alternative<double>(value)) {
        x = std::get<double>(value);
      } else {
        continue;  // label sets have no numeric summary
      }
      sums[name].first += x;
      sums[name].second += x * x;
      counts[name] += 1;
    }
  }
  const double n = static_cast<double>(records.size());
  stats.mean_nodes = nodes / n;
  stats.stddev_nodes = std::sqrt(std::max(0.0, nodes_sq / n - stats.mean_nodes * stats.mean_nodes));
  stats.mean_edges = edges / n;
  stats.stddev_edges = std::sqrt(std::max(0.0, edges_sq / n - stats.mean_edges * stats.mean_edges));
  for (const auto& [name, sum] : sums) {
    const double c = static_cast<double>(counts[name]);
    auto& t = stats.targets[name];
    t.mean = sum.first / c;
    t.variance = std::max(0.0, sum.second / c - t.mean * t.mean);
  }
  return stats;
}

// Generates num_graphs seeded random graphs, labels each with the exact
// count of every requested kind, and assigns ratio split tags over a seeded
// shuffle. Record i is a pure function of (spec, i): graph seeds derive from
// substream 0 of the master seed, the split shuffle from substream 1, so
// output is identical for any thread count.
inline std::pair<std::vector<DatasetRecord>, DatasetStats> generate_counting_dataset(
    const GenSpec& spec, unsigned threads = 1) {
  if (spec.num_graphs < 1) {
    throw std::invalid_argument("generate_counting_dataset: num_graphs must be >= 1");
  }
  const std::uint64_t graph_stream = mix_seed(spec.seed, 0);
  const std::uint64_t split_stream = mix_seed(spec.seed, 1);
  std::vector<DatasetRecord> records(spec.num_graphs);
  parallel_for(spec.num_graphs, threads, [&](std::size_t i) {
    Graph g = gen_random_graph(spec.node_range, spec.target_avg_edges,
                               mix_seed(graph_stream, i));
    char name[32];
    std::snprintf(name, sizeof(name), "ge-%06zu", i);
    TargetMap targets;
    if (!spec.kinds.empty()) {
      for (const auto& [kind, count] : oracle_count_all(g, spec.kinds)) {
        targets[std::string(kind_name(kind))] = count;
      }
    }
    records[i] = DatasetRecord{
        Graph(name, g.num_nodes(), g.edges(), g.features(), std::move(targets)),
        std::nullopt};
  });
  records = make_splits(std::move(records), SplitScheme::with_ratio(spec.split_ratio),
                        split_stream);
  DatasetStats stats = dataset_stats(records);
  return {std::move(records), std::move(stats)};
}

}  // namespace kpath
