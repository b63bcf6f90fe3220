//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "kpath/graph.hpp"
#include "kpath/rng.hpp"

namespace kpath {

struct NodeRange {
  std::uint32_t min = 0;
  std::uint32_t max = 0;
};

// Erdos-Renyi draw: n uniform in [range.min, range.max], then each of the
// C(n,2) pairs is kept independently with probability
// target_avg_edges / C(n,2), clamped to (0, 1]. Pure function of its
// arguments; the same seed always yields the same graph.
inline Graph gen_random_graph(NodeRange range, double target_avg_edges,
                              std::uint64_t seed) {
  if (range.min > range.max) {
    throw std::invalid_argument("gen_random_graph: empty node range");
  }
  if (range.min < 3) {
    throw std::invalid_argument("gen_random_graph: node range minimum must be >= 3");
  }
  if (target_avg_edges < static_cast<double>(range.min) - 1.0) {
    throw std::invalid_argument(
        "gen_random_graph: target_avg_edges must be >= min - 1");
  }
  Rng rng(seed);
  const std::uint32_t n =
      range.min + static_cast<std::uint32_t>(rng.next_below(range.max - range.min + 1ULL));
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const double p = std::min(1.0, target_avg_edges / pairs);
  EdgeList edges;
  for (NodeId u = 0; u + 1 < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

}  // namespace kpath
