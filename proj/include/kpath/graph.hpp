//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace kpath {

using NodeId = std::uint32_t;
using EdgeList = std::vector<std::pair<NodeId, NodeId>>;
using FeatureMatrix = std::vector<std::vector<double>>;

// A per-graph target: a class index, a real value, or a multi-label set.
using TargetValue = std::variant<std::int64_t, double, std::vector<std::int64_t>>;
using TargetMap = std::map<std::string, TargetValue>;

// Immutable undirected simple graph. Neighbor lists are sorted, duplicate
// free and stored symmetrically; construction canonicalizes and validates:
// no self-loops, all ids < num_nodes, features (if present) one equal-width
// row per node. Safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  Graph(std::string id, std::uint32_t num_nodes, const EdgeList& edges,
        std::optional<FeatureMatrix> features = std::nullopt,
        TargetMap targets = {})
      : id_(std::move(id)),
        num_nodes_(num_nodes),
        adj_(num_nodes),
        features_(std::move(features)),
        targets_(std::move(targets)) {
    for (const auto& [u, v] : edges) {
      if (u >= num_nodes_ || v >= num_nodes_) {
        throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") out of range for " +
                                    std::to_string(num_nodes_) + " nodes");
      }
      if (u == v) {
        throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is not allowed");
      }
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      num_edges_ += nbrs.size();
    }
    num_edges_ /= 2;
    if (features_) {
      if (features_->size() != num_nodes_) {
        throw std::invalid_argument("feature matrix must have exactly one row per node");
      }
      const std::size_t width = features_->empty() ? 0 : features_->front().size();
      for (const auto& row : *features_) {
        if (row.size() != width) {
          throw std::invalid_argument("feature rows must have equal width");
        }
      }
    }
  }

  const std::string& id() const { return id_; }
  std::uint32_t num_nodes() const { return num_nodes_; }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    check_node(v);
    return {adj_[v].data(), adj_[v].size()};
  }

  std::uint32_t degree(NodeId v) const {
    check_node(v);
    return static_cast<std::uint32_t>(adj_[v].size());
  }

  bool has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  // Unordered edge pairs, u < v, lexicographically sorted.
  EdgeList edges() const {
    EdgeList out;
    out.reserve(num_edges_);
    for (NodeId u = 0; u < num_nodes_; ++u) {
      for (NodeId v : adj_[u]) {
        if (v > u) out.emplace_back(u, v);
      }
    }
    return out;
  }

  const std::optional<FeatureMatrix>& features() const { return features_; }

  std::size_t feature_width() const {
    if (!features_ || features_->empty()) return 0;
    return features_->front().size();
  }

  std::span<const double> feature_row(NodeId v) const {
    check_node(v);
    if (!features_) throw std::invalid_argument("graph has no features");
    return {(*features_)[v].data(), (*features_)[v].size()};
  }

  const TargetMap& targets() const { return targets_; }

  Graph with_id(std::string id) const {
    return Graph(std::move(id), num_nodes_, edges(), features_, targets_);
  }
  Graph with_edges(const EdgeList& edges) const {
    return Graph(id_, num_nodes_, edges, features_, targets_);
  }
  Graph with_features(std::optional<FeatureMatrix> features) const {
    return Graph(id_, num_nodes_, edges(), std::move(features), targets_);
  }
  Graph with_targets(TargetMap targets) const {
    return Graph(id_, num_nodes_, edges(), features_, std::move(targets));
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_node(NodeId v) const {
    if (v >= num_nodes_) {
      throw std::invalid_argument("node " + std::to_string(v) +
                                  " out of range for " +
                                  std::to_string(num_nodes_) + " nodes");
    }
  }

  std::string id_;
  std::uint32_t num_nodes_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<std::vector<NodeId>> adj_;
  std::optional<FeatureMatrix> features_;
  TargetMap targets_;
};

inline Graph build_graph(std::uint32_t num_nodes, const EdgeList& edges,
                         std::optional<FeatureMatrix> features = std::nullopt) {
  return Graph("", num_nodes, edges, std::move(features));
}

// Nodes u != v with shortest-path distance dist(v, u) <= l, sorted; l = 0
// yields the empty set.
inline std::vector<NodeId> neighbors_within(const Graph& g, NodeId v, std::uint32_t l) {
  g.neighbors(v);  // validates v
  std::vector<NodeId> found;
  if (l == 0) return found;
  constexpr std::uint32_t kUnseen = 0xFFFFFFFF;
  std::vector<std::uint32_t> dist(g.num_nodes(), kUnseen);
  dist[v] = 0;
  std::queue<NodeId> frontier;
  frontier.push(v);
  while (!frontier.empty()) {
    const NodeId cur = frontier.front();
    frontier.pop();
    if (dist[cur] == l) continue;
    for (NodeId nxt : g.neighbors(cur)) {
      if (dist[nxt] != kUnseen) continue;
      dist[nxt] = dist[cur] + 1;
      found.push_back(nxt);
      frontier.push(nxt);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace kpath
