//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

// Ordered simple path of k distinct nodes; nodes[0] is the root and
// consecutive nodes are adjacent in the host graph.
struct KTuple {
  std::vector<NodeId> nodes;

  NodeId root() const { return nodes.front(); }
  int k() const { return static_cast<int>(nodes.size()); }

  bool operator==(const KTuple&) const = default;
};

enum class TupleMode {
  SimplePath,     // all simple paths of k nodes starting at the root
  ExactDistance,  // additionally require dist(root, nodes[j]) == j
};

inline void validate_tuple(const Graph& g, const KTuple& t) {
  if (t.nodes.empty()) throw std::invalid_argument("tuple must be non-empty");
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    g.neighbors(t.nodes[i]);  // range check
    for (std::size_t j = i + 1; j < t.nodes.size(); ++j) {
      if (t.nodes[i] == t.nodes[j]) {
        throw std::invalid_argument("tuple nodes must be pairwise distinct");
      }
    }
    if (i + 1 < t.nodes.size() && !g.has_edge(t.nodes[i], t.nodes[i + 1])) {
      throw std::invalid_argument("consecutive tuple nodes must be adjacent");
    }
  }
}

// All k-tuples rooted at `root`, emitted in lexicographic order (DFS over
// ascending neighbor lists). k = 1 yields the single tuple (root). Full
// enumeration: the tuple count grows as avg_degree^(k-1) per root.
inline std::vector<KTuple> enumerate_k_tuples(const Graph& g, NodeId root, int k,
                                              TupleMode mode = TupleMode::SimplePath) {
  if (k < 1) throw std::invalid_argument("enumerate_k_tuples: k must be >= 1");
  g.neighbors(root);  // validates root

  std::vector<std::uint32_t> dist;
  if (mode == TupleMode::ExactDistance) {
    constexpr std::uint32_t kUnseen = 0xFFFFFFFF;
    dist.assign(g.num_nodes(), kUnseen);
    dist[root] = 0;
    std::vector<NodeId> frontier = {root};
    while (!frontier.empty()) {
      std::vector<NodeId> next;
      for (NodeId cur : frontier) {
        for (NodeId nxt : g.neighbors(cur)) {
          if (dist[nxt] == kUnseen) {
            dist[nxt] = dist[cur] + 1;
            next.push_back(nxt);
          }
        }
      }
      frontier = std::move(next);
    }
  }

  std::vector<KTuple> out;
  std::vector<NodeId> path = {root};
  std::vector<bool> on_path(g.num_nodes(), false);
  on_path[root] = true;
  auto dfs = [&](auto&& self) -> void {
    if (path.size() == static_cast<std::size_t>(k)) {
      out.push_back(KTuple{path});
      return;
    }
    for (NodeId nxt : g.neighbors(path.back())) {
      if (on_path[nxt]) continue;
      if (mode == TupleMode::ExactDistance && dist[nxt] != path.size()) continue;
      path.push_back(nxt);
      on_path[nxt] = true;
      self(self);
      on_path[nxt] = false;
      path.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

// Subgraph induced by the union of the L-hop neighborhoods of every tuple
// node (tuple nodes always included), with positional one-hot identifiers
// appended to the node features: the row of tuple position j ends with
// e_{j,k}, every other row ends with k zeros. Hosts without features get
// width-k rows. Local ids follow ascending original id.
struct RootedSubgraph {
  Graph local_graph;
  std::vector<NodeId> node_map;         // local id -> original id
  std::vector<NodeId> tuple_positions;  // local ids of the tuple nodes, in order
  FeatureMatrix aug_features;           // width = d_x + k

  NodeId root_position() const { return tuple_positions.front(); }
};

inline RootedSubgraph extract_rooted_subgraph(const Graph& g, const KTuple& t,
                                              std::uint32_t l_hops) {
  validate_tuple(g, t);
  std::vector<bool> keep(g.num_nodes(), false);
  for (NodeId v : t.nodes) {
    keep[v] = true;
    for (NodeId u : neighbors_within(g, v, l_hops)) keep[u] = true;
  }
  std::vector<NodeId> node_map;
  std::vector<NodeId> local_of(g.num_nodes(), 0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (keep[v]) {
      local_of[v] = static_cast<NodeId>(node_map.size());
      node_map.push_back(v);
    }
  }
  EdgeList local_edges;
  for (NodeId v : node_map) {
    for (NodeId u : g.neighbors(v)) {
      if (u > v && keep[u]) local_edges.emplace_back(local_of[v], local_of[u]);
    }
  }
  const std::size_t k = t.nodes.size();
  const std::size_t dx = g.feature_width();
  FeatureMatrix aug(node_map.size(), std::vector<double>(dx + k, 0.0));
  if (g.features()) {
    for (std::size_t i = 0; i < node_map.size(); ++i) {
      const auto row = g.feature_row(node_map[i]);
      std::copy(row.begin(), row.end(), aug[i].begin());
    }
  }
  std::vector<NodeId> tuple_positions;
  tuple_positions.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const NodeId local = local_of[t.nodes[j]];
    tuple_positions.push_back(local);
    aug[local][dx + j] = 1.0;
  }
  Graph local(g.id(), static_cast<std::uint32_t>(node_map.size()), local_edges);
  return RootedSubgraph{std::move(local), std::move(node_map),
                        std::move(tuple_positions), std::move(aug)};
}

}  // namespace kpath
