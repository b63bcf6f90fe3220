//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

// The 13 counted substructures. An m-cycle is a simple cycle with m nodes;
// an m-path is a simple path with m edges. Composite motifs:
//   TailedTriangle    - a triangle plus one pendant edge at a triangle
//                       vertex, counted per (triangle, tail edge) pair.
//   ChordalCycle      - a 4-node vertex set containing a 4-cycle plus a
//                       chord (>= 5 induced edges), counted per vertex set.
//                       Containment (not induced) counting keeps every kind
//                       monotone under edge deletion.
//   TriangleRectangle - an unordered (triangle, 4-cycle) pair sharing
//                       exactly one vertex.
enum class SubstructureKind {
  Cycle3,
  Cycle4,
  Cycle5,
  Cycle6,
  Cycle7,
  Cycle8,
  Path4,
  Path5,
  Path6,
  Clique4,
  TailedTriangle,
  ChordalCycle,
  TriangleRectangle,
};

inline constexpr std::array<SubstructureKind, 13> kAllSubstructureKinds = {
    SubstructureKind::Cycle3,         SubstructureKind::Cycle4,
    SubstructureKind::Cycle5,         SubstructureKind::Cycle6,
    SubstructureKind::Cycle7,         SubstructureKind::Cycle8,
    SubstructureKind::Path4,          SubstructureKind::Path5,
    SubstructureKind::Path6,          SubstructureKind::Clique4,
    SubstructureKind::TailedTriangle, SubstructureKind::ChordalCycle,
    SubstructureKind::TriangleRectangle,
};

inline constexpr std::string_view kind_name(SubstructureKind kind) {
  switch (kind) {
    case SubstructureKind::Cycle3: return "cycle3";
    case SubstructureKind::Cycle4: return "cycle4";
    case SubstructureKind::Cycle5: return "cycle5";
    case SubstructureKind::Cycle6: return "cycle6";
    case SubstructureKind::Cycle7: return "cycle7";
    case SubstructureKind::Cycle8: return "cycle8";
    case SubstructureKind::Path4: return "path4";
    case SubstructureKind::Path5: return "path5";
    case SubstructureKind::Path6: return "path6";
    case SubstructureKind::Clique4: return "clique4";
    case SubstructureKind::TailedTriangle: return "tailed-triangle";
    case SubstructureKind::ChordalCycle: return "chordal-cycle";
    case SubstructureKind::TriangleRectangle: return "triangle-rectangle";
  }
  return "unknown";
}

inline std::optional<SubstructureKind> kind_from_name(std::string_view name) {
  for (SubstructureKind kind : kAllSubstructureKinds) {
    if (kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace detail {

// Counting works on uint64 adjacency masks; graphs above 64 nodes are
// rejected so counts cannot overflow and masks stay a single word.
inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.num_nodes() > 64) {
    throw std::invalid_argument(
        "substructure counting supports at most 64 nodes, got " +
        std::to_string(g.num_nodes()));
  }
  std::vector<std::uint64_t> mask(g.num_nodes(), 0);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(u)) mask[u] |= 1ULL << v;
  }
  return mask;
}

struct CycleScan {
  std::array<std::int64_t, 9> by_len{};     // by_len[m] = number of m-cycles
  std::vector<std::uint64_t> triangles;     // vertex masks, if collected
  std::vector<std::uint64_t> quadrilaterals;
};

// Enumerates every simple cycle of length <= max_len exactly once: the DFS
// roots at the cycle's minimum vertex, walks only higher vertices, and
// accepts one of the two traversal directions (path[1] < last).
struct CycleDfs {
  const Graph& g;
  int max_len;
  bool want_triangles;
  bool want_quadrilaterals;
  CycleScan out;
  std::vector<NodeId> path;
  std::uint64_t on_path = 0;

  void run() {
    path.reserve(static_cast<std::size_t>(max_len));
    for (NodeId root = 0; root < g.num_nodes(); ++root) {
      path.assign(1, root);
      on_path = 1ULL << root;
      extend();
    }
  }

  void extend() {
    const NodeId root = path.front();
    const NodeId cur = path.back();
    for (NodeId nxt : g.neighbors(cur)) {
      if (nxt == root) {
        if (path.size() >= 3 && path[1] < cur) {
          const std::size_t len = path.size();
          out.by_len[len] += 1;
          if (len == 3 && want_triangles) out.triangles.push_back(on_path);
          if (len == 4 && want_quadrilaterals) out.quadrilaterals.push_back(on_path);
        }
        continue;
      }
      if (nxt < root) continue;
      if (on_path & (1ULL << nxt)) continue;
      if (path.size() < static_cast<std::size_t>(max_len)) {
        path.push_back(nxt);
        on_path |= 1ULL << nxt;
        extend();
        on_path &= ~(1ULL << nxt);
        path.pop_back();
      }
    }
  }
};

inline CycleScan scan_cycles(const Graph& g, int max_len, bool want_triangles,
                             bool want_quadrilaterals) {
  adjacency_masks(g);  // size gate
  CycleDfs dfs{g, max_len, want_triangles, want_quadrilaterals, {}, {}, 0};
  dfs.run();
  return dfs.out;
}

// Directed simple-path counts by edge count, starting at one root.
struct PathDfs {
  const Graph& g;
  int max_edges;
  std::array<std::int64_t, 9> by_edges{};  // by_edges[e] = paths with e edges
  std::uint64_t on_path = 0;

  void run(NodeId root) {
    on_path = 1ULL << root;
    extend(root, 0);
  }

  void extend(NodeId cur, int edges) {
    for (NodeId nxt : g.neighbors(cur)) {
      if (on_path & (1ULL << nxt)) continue;
      const int e = edges + 1;
      by_edges[e] += 1;
      if (e < max_edges) {
        on_path |= 1ULL << nxt;
        extend(nxt, e);
        on_path &= ~(1ULL << nxt);
      }
    }
  }
};

}  // namespace detail

// Number of simple paths with exactly m edges whose first node is v, each
// directed path counted once.
inline std::int64_t oracle_paths_from(const Graph& g, NodeId v, int m) {
  if (m < 1) throw std::invalid_argument("oracle_paths_from: m must be >= 1");
  detail::adjacency_masks(g);  // validates size
  g.neighbors(v);              // validates v
  std::int64_t count = 0;
  std::uint64_t on_path = 1ULL << v;
  auto walk = [&](auto&& self, NodeId cur, int edges) -> void {
    for (NodeId nxt : g.neighbors(cur)) {
      if (on_path & (1ULL << nxt)) continue;
      if (edges + 1 == m) {
        ++count;
        continue;
      }
      on_path |= 1ULL << nxt;
      self(self, nxt, edges + 1);
      on_path &= ~(1ULL << nxt);
    }
  };
  walk(walk, v, 0);
  return count;
}

// Number of distinct simple m-cycles containing v, each cycle counted once.
inline std::int64_t oracle_cycles_at(const Graph& g, NodeId v, int m) {
  if (m < 3) throw std::invalid_argument("oracle_cycles_at: m must be >= 3");
  detail::adjacency_masks(g);
  g.neighbors(v);
  // Walk simple paths of m-1 edges from v; each cycle through v closes twice
  // (once per direction).
  std::int64_t closures = 0;
  std::uint64_t on_path = 1ULL << v;
  auto walk = [&](auto&& self, NodeId cur, int edges) -> void {
    for (NodeId nxt : g.neighbors(cur)) {
      if (on_path & (1ULL << nxt)) continue;
      if (edges + 1 == m - 1) {
        if (g.has_edge(nxt, v)) ++closures;
        continue;
      }
      on_path |= 1ULL << nxt;
      self(self, nxt, edges + 1);
      on_path &= ~(1ULL << nxt);
    }
  };
  walk(walk, v, 0);
  if (closures % 2 != 0) {
    throw std::runtime_error("oracle_cycles_at: direction pairing broke");
  }
  return closures / 2;
}

// Exact whole-graph counts for the requested kinds in one pass per family.
inline std::map<SubstructureKind, std::int64_t> oracle_count_all(
    const Graph& g, std::span<const SubstructureKind> kinds) {
  const auto mask = detail::adjacency_masks(g);
  const auto n = g.num_nodes();

  bool want_tri_list = false, want_quad_list = false;
  int max_cycle = 0, max_path_edges = 0;
  bool want_clique = false, want_chordal = false;
  for (SubstructureKind kind : kinds) {
    switch (kind) {
      case SubstructureKind::Cycle3: max_cycle = std::max(max_cycle, 3); break;
      case SubstructureKind::Cycle4: max_cycle = std::max(max_cycle, 4); break;
      case SubstructureKind::Cycle5: max_cycle = std::max(max_cycle, 5); break;
      case SubstructureKind::Cycle6: max_cycle = std::max(max_cycle, 6); break;
      case SubstructureKind::Cycle7: max_cycle = std::max(max_cycle, 7); break;
      case SubstructureKind::Cycle8: max_cycle = std::max(max_cycle, 8); break;
      case SubstructureKind::Path4: max_path_edges = std::max(max_path_edges, 4); break;
      case SubstructureKind::Path5: max_path_edges = std::max(max_path_edges, 5); break;
      case SubstructureKind::Path6: max_path_edges = std::max(max_path_edges, 6); break;
      case SubstructureKind::Clique4: want_clique = true; break;
      case SubstructureKind::TailedTriangle: want_tri_list = true; break;
      case SubstructureKind::ChordalCycle: want_chordal = true; break;
      case SubstructureKind::TriangleRectangle:
        want_tri_list = true;
        want_quad_list = true;
        max_cycle = std::max(max_cycle, 4);
        break;
    }
  }
  if (want_tri_list) max_cycle = std::max(max_cycle, 3);

  detail::CycleScan cycles;
  if (max_cycle > 0) {
    cycles = detail::scan_cycles(g, max_cycle, want_tri_list, want_quad_list);
  }

  std::array<std::int64_t, 9> path_totals{};
  if (max_path_edges > 0) {
    for (NodeId v = 0; v < n; ++v) {
      detail::PathDfs dfs{g, max_path_edges};
      dfs.run(v);
      for (int e = 1; e <= max_path_edges; ++e) path_totals[e] += dfs.by_edges[e];
    }
    // Each undirected path was traversed from both endpoints.
    for (int e = 1; e <= max_path_edges; ++e) path_totals[e] /= 2;
  }

  std::int64_t cliques = 0;
  if (want_clique) {
    for (NodeId u = 0; u < n; ++u) {
      const std::uint64_t above_u = ~((2ULL << u) - 1);
      for (NodeId v : g.neighbors(u)) {
        if (v <= u) continue;
        const std::uint64_t common_uv = mask[u] & mask[v];
        const std::uint64_t above_v = ~((2ULL << v) - 1);
        std::uint64_t cs = common_uv & above_v & above_u;
        while (cs) {
          const int c = std::countr_zero(cs);
          cs &= cs - 1;
          const std::uint64_t above_c = ~((2ULL << c) - 1);
          cliques += std::popcount(common_uv & mask[c] & above_c);
        }
      }
    }
  }

  std::int64_t tailed = 0;
  if (want_tri_list &&
      std::find(kinds.begin(), kinds.end(), SubstructureKind::TailedTriangle) != kinds.end()) {
    for (std::uint64_t tri : cycles.triangles) {
      std::uint64_t t = tri;
      while (t) {
        const int v = std::countr_zero(t);
        t &= t - 1;
        tailed += static_cast<std::int64_t>(g.degree(static_cast<NodeId>(v))) - 2;
      }
    }
  }

  std::int64_t chordal = 0;
  if (want_chordal) {
    // Sorted 4-sets with at least 5 induced edges. A qualifying set misses
    // at most one edge, so any sub-triple has at least 2; prune on that.
    for (NodeId a = 0; a + 3 < n; ++a) {
      for (NodeId b = a + 1; b + 2 < n; ++b) {
        const int ab = static_cast<int>((mask[a] >> b) & 1);
        for (NodeId c = b + 1; c + 1 < n; ++c) {
          const int abc = ab + static_cast<int>((mask[a] >> c) & 1) +
                          static_cast<int>((mask[b] >> c) & 1);
          if (abc < 2) continue;
          for (NodeId d = c + 1; d < n; ++d) {
            const int within =
                abc + static_cast<int>((mask[a] >> d) & 1) +
                static_cast<int>((mask[b] >> d) & 1) +
                static_cast<int>((mask[c] >> d) & 1);
            if (within >= 5) ++chordal;
          }
        }
      }
    }
  }

  std::int64_t tri_rect = 0;
  if (want_quad_list) {
    for (std::uint64_t tri : cycles.triangles) {
      for (std::uint64_t quad : cycles.quadrilaterals) {
        if (std::popcount(tri & quad) == 1) ++tri_rect;
      }
    }
  }

  std::map<SubstructureKind, std::int64_t> out;
  for (SubstructureKind kind : kinds) {
    switch (kind) {
      case SubstructureKind::Cycle3: out[kind] = cycles.by_len[3]; break;
      case SubstructureKind::Cycle4: out[kind] = cycles.by_len[4]; break;
      case SubstructureKind::Cycle5: out[kind] = cycles.by_len[5]; break;
      case SubstructureKind::Cycle6: out[kind] = cycles.by_len[6]; break;
      case SubstructureKind::Cycle7: out[kind] = cycles.by_len[7]; break;
      case SubstructureKind::Cycle8: out[kind] = cycles.by_len[8]; break;
      case SubstructureKind::Path4: out[kind] = path_totals[4]; break;
      case SubstructureKind::Path5: out[kind] = path_totals[5]; break;
      case SubstructureKind::Path6: out[kind] = path_totals[6]; break;
      case SubstructureKind::Clique4: out[kind] = cliques; break;
      case SubstructureKind::TailedTriangle: out[kind] = tailed; break;
      case SubstructureKind::ChordalCycle: out[kind] = chordal; break;
      case SubstructureKind::TriangleRectangle: out[kind] = tri_rect; break;
    }
  }
  return out;
}

inline std::int64_t oracle_count(const Graph& g, SubstructureKind kind) {
  const std::array<SubstructureKind, 1> one = {kind};
  return oracle_count_all(g, one).at(kind);
}

}  // namespace kpath
