//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/tuples.hpp"

namespace kpath {

enum class Readout { Sum, Mean, Max };

// Permutation-invariant elementwise reduction of equal-width vectors.
inline std::vector<double> readout(std::span<const std::vector<double>> vectors,
                                   Readout mode) {
  if (vectors.empty()) throw std::invalid_argument("readout: empty input");
  const std::size_t width = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != width) throw std::invalid_argument("readout: width mismatch");
  }
  std::vector<double> out = vectors.front();
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    for (std::size_t c = 0; c < width; ++c) {
      if (mode == Readout::Max) {
        out[c] = std::max(out[c], vectors[i][c]);
      } else {
        out[c] += vectors[i][c];
      }
    }
  }
  if (mode == Readout::Mean) {
    for (double& x : out) x /= static_cast<double>(vectors.size());
  }
  return out;
}

namespace detail {

// l rounds of h(v) <- h(v) + sum over neighbors, on the given graph.
inline FeatureMatrix propagate(const Graph& g, FeatureMatrix h, int layers) {
  for (int l = 0; l < layers; ++l) {
    FeatureMatrix next = h;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      for (NodeId u : g.neighbors(v)) {
        for (std::size_t c = 0; c < h[v].size(); ++c) next[v][c] += h[u][c];
      }
    }
    h = std::move(next);
  }
  return h;
}

}  // namespace detail

struct EncodeResult {
  FeatureMatrix node_embeddings;       // one row per host node, width d_x + k
  std::vector<double> graph_embedding;
};

// Parameter-free reference encoder. For every node: enumerate its k-tuples,
// extract each augmented rooted subgraph, run l_layers of sum propagation,
// and reduce the root-position vectors with readout1; the graph embedding
// reduces the node embeddings with readout2. A node with no tuples (e.g. an
// isolated node when k > 1) falls back to its own propagated feature row,
// zero-padded over the k positional channels, so readout2 stays total.
// Deterministic and isomorphism-invariant; no learned weights.
inline EncodeResult encode_graph(const Graph& g, int k, std::uint32_t l_sub,
                                 int l_layers, Readout readout1, Readout readout2) {
  if (k < 1) throw std::invalid_argument("encode_graph: k must be >= 1");
  if (l_layers < 1) throw std::invalid_argument("encode_graph: l_layers must be >= 1");
  if (g.num_nodes() == 0) throw std::invalid_argument("encode_graph: empty graph");
  const std::size_t dx = g.feature_width();
  FeatureMatrix node_embeddings;
  node_embeddings.reserve(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto tuples = enumerate_k_tuples(g, v, k, TupleMode::SimplePath);
    std::vector<std::vector<double>> root_vectors;
    if (tuples.empty()) {
      const KTuple self{{v}};
      auto sub = extract_rooted_subgraph(g, self, l_sub);
      FeatureMatrix aug(sub.node_map.size(), std::vector<double>(dx + k, 0.0));
      if (g.features()) {
        for (std::size_t i = 0; i < sub.node_map.size(); ++i) {
          const auto row = g.feature_row(sub.node_map[i]);
          std::copy(row.begin(), row.end(), aug[i].begin());
        }
      }
      const auto h = detail::propagate(sub.local_graph, std::move(aug), l_layers);
      root_vectors.push_back(h[sub.root_position()]);
    } else {
      for (const KTuple& t : tuples) {
        auto sub = extract_rooted_subgraph(g, t, l_sub);
        const auto h =
            detail::propagate(sub.local_graph, std::move(sub.aug_features), l_layers);
        root_vectors.push_back(h[sub.root_position()]);
      }
    }
    node_embeddings.push_back(readout(root_vectors, readout1));
  }
  auto graph_embedding = readout(node_embeddings, readout2);
  return EncodeResult{std::move(node_embeddings), std::move(graph_embedding)};
}

}  // namespace kpath
