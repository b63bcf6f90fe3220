//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/rng.hpp"

namespace kpath {

// Per-edge importance and drop probability. Importance of edge (u,v) is
// ln((deg(u)+deg(v))/2 + 1); drop probabilities come from min-max
// normalization scaled by mu, so the most important edge is never dropped
// and the least important edge is dropped with probability mu. Natural log;
// any other base rescales importances affinely and the normalization
// cancels it.
struct EdgeAugPlan {
  EdgeList edges;  // u < v, lexicographic order
  std::vector<double> importance;
  std::vector<double> drop_prob;
  double mu = 0.0;
};

inline EdgeAugPlan edge_importance(const Graph& g) {
  if (g.num_edges() == 0) {
    throw std::invalid_argument("edge_importance: graph has no edges");
  }
  EdgeAugPlan plan;
  plan.edges = g.edges();
  plan.importance.reserve(plan.edges.size());
  for (const auto& [u, v] : plan.edges) {
    const double mean_degree = 0.5 * (g.degree(u) + g.degree(v));
    plan.importance.push_back(std::log(mean_degree + 1.0));
  }
  return plan;
}

inline EdgeAugPlan drop_probabilities(EdgeAugPlan plan, double mu) {
  if (mu < 0.0 || mu > 1.0) {
    throw std::invalid_argument("drop_probabilities: mu must be in [0,1]");
  }
  plan.mu = mu;
  double lo = plan.importance.front(), hi = lo;
  for (double imp : plan.importance) {
    lo = std::min(lo, imp);
    hi = std::max(hi, imp);
  }
  plan.drop_prob.resize(plan.importance.size());
  if (hi == lo) {
    // Min-max map is 0/0 when all importances agree; use the midpoint of the
    // attainable range so augmentation stays active without saturating.
    for (double& p : plan.drop_prob) p = mu / 2.0;
  } else {
    for (std::size_t i = 0; i < plan.importance.size(); ++i) {
      plan.drop_prob[i] = mu * (hi - plan.importance[i]) / (hi - lo);
    }
  }
  return plan;
}

// Drops each undirected edge independently with its plan probability; node
// set, features and targets are unchanged. Deterministic per seed.
inline Graph sample_view(const Graph& g, const EdgeAugPlan& plan, std::uint64_t seed) {
  if (plan.edges != g.edges() || plan.drop_prob.size() != plan.edges.size()) {
    throw std::invalid_argument("sample_view: plan does not match the graph");
  }
  Rng rng(seed);
  EdgeList kept;
  kept.reserve(plan.edges.size());
  for (std::size_t i = 0; i < plan.edges.size(); ++i) {
    if (!rng.bernoulli(plan.drop_prob[i])) kept.push_back(plan.edges[i]);
  }
  return g.with_edges(kept);
}

// Two independent views from substreams seed||0 and seed||1 (mix_seed).
// An edgeless input has nothing to drop and yields two copies.
inline std::pair<Graph, Graph> make_positive_pair(const Graph& g, double mu,
                                                  std::uint64_t seed) {
  if (g.num_edges() == 0) return {g, g};
  const EdgeAugPlan plan = drop_probabilities(edge_importance(g), mu);
  return {sample_view(g, plan, mix_seed(seed, 0)),
          sample_view(g, plan, mix_seed(seed, 1))};
}

}  // namespace kpath
