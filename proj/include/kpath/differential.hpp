//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/mp_count.hpp"
#include "kpath/oracle.hpp"
#include "kpath/parallel.hpp"

namespace kpath {

// One (graph, root, k) comparison: brute-force path count from the root with
// k+2 edges against both recursion variants.
struct DifferentialRow {
  std::string graph_id;
  NodeId root = 0;
  int k = 0;
  std::int64_t oracle = 0;
  std::int64_t mp_corrected = 0;
  std::int64_t mp_literal = 0;
  bool match_corrected = false;
  bool match_literal = false;
};

struct DifferentialReport {
  std::vector<DifferentialRow> rows;

  std::size_t corrected_mismatches() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += !r.match_corrected;
    return n;
  }
  std::size_t literal_mismatches() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += !r.match_literal;
    return n;
  }
};

// Rows are ordered by (graph, root, k) regardless of worker count.
inline DifferentialReport differential_report(std::span<const Graph> graphs,
                                              std::span<const int> ks,
                                              unsigned threads = 1) {
  DifferentialReport report;
  std::vector<std::vector<DifferentialRow>> per_graph(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t gi) {
    const Graph& g = graphs[gi];
    auto& rows = per_graph[gi];
    for (NodeId root = 0; root < g.num_nodes(); ++root) {
      for (int k : ks) {
        DifferentialRow row;
        row.graph_id = g.id();
        row.root = root;
        row.k = k;
        row.oracle = oracle_paths_from(g, root, k + 2);
        row.mp_corrected = mp_paths_from(g, root, k, MpVariant::Corrected);
        row.mp_literal = mp_paths_from(g, root, k, MpVariant::Literal);
        row.match_corrected = row.mp_corrected == row.oracle;
        row.match_literal = row.mp_literal == row.oracle;
        rows.push_back(std::move(row));
      }
    }
  });
  for (auto& rows : per_graph) {
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

inline void write_differential_csv(const DifferentialReport& report, std::ostream& out) {
  out << "graph_id,root,k,oracle,mp_corrected,mp_literal,match_corrected,match_literal\n";
  for (const auto& r : report.rows) {
    out << r.graph_id << ',' << r.root << ',' << r.k << ',' << r.oracle << ','
        << r.mp_corrected << ',' << r.mp_literal << ',' << (r.match_corrected ? 1 : 0)
        << ',' << (r.match_literal ? 1 : 0) << '\n';
  }
}

}  // namespace kpath
