//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/tuples.hpp"

namespace kpath {

// Two flavours of the three-layer tuple recursion:
//   Literal   - the recursion exactly as written: the third layer subtracts
//               h1(v_j) once per neighbor of v_j, including neighbors inside
//               the tuple. Kept as a first-class variant for comparison; it
//               can over-subtract (and go negative) when v_j has neighbors
//               in the tuple.
//   Corrected - subtracts h1(v_j) only for neighbors outside the tuple,
//               which removes exactly the recursive (last, v_j, v_m, v_j)
//               walks. h3(v_j) then equals the number of simple (k+2)-edge
//               paths from the root through the tuple ending at v_j.
enum class MpVariant { Literal, Corrected };

struct MpState {
  std::vector<std::int64_t> h1;  // indicator of N(last) minus tuple prefix
  std::vector<std::int64_t> h2;  // (k+1)-edge path counts per end node
  std::vector<std::int64_t> h3;  // (k+2)-edge path counts per end node
  MpVariant variant = MpVariant::Corrected;
};

inline MpState mp_path_vector(const Graph& g, const KTuple& t, MpVariant variant) {
  validate_tuple(g, t);
  const std::size_t n = g.num_nodes();
  const std::size_t k = t.nodes.size();
  std::vector<bool> in_tuple(n, false), in_prefix(n, false);
  for (std::size_t j = 0; j < k; ++j) {
    in_tuple[t.nodes[j]] = true;
    if (j + 1 < k) in_prefix[t.nodes[j]] = true;
  }
  const NodeId last = t.nodes.back();

  MpState st;
  st.variant = variant;
  st.h1.assign(n, 0);
  st.h2.assign(n, 0);
  st.h3.assign(n, 0);

  for (NodeId j = 0; j < n; ++j) {
    if (!in_prefix[j] && g.has_edge(j, last)) st.h1[j] = 1;
  }
  for (NodeId j = 0; j < n; ++j) {
    if (in_tuple[j]) continue;
    std::int64_t sum = 0;
    for (NodeId m : g.neighbors(j)) sum += st.h1[m];
    st.h2[j] = sum;
  }
  for (NodeId j = 0; j < n; ++j) {
    if (in_tuple[j]) continue;
    std::int64_t sum = 0;
    std::int64_t outside = 0;
    for (NodeId m : g.neighbors(j)) {
      sum += st.h2[m];
      if (!in_tuple[m]) ++outside;
    }
    if (variant == MpVariant::Literal) {
      sum -= static_cast<std::int64_t>(g.degree(j)) * st.h1[j];
    } else {
      sum -= outside * st.h1[j];
    }
    st.h3[j] = sum;
  }
  return st;
}

// Total over all simple-path k-tuples rooted at v of the summed third layer;
// in the corrected variant this equals the number of simple (k+2)-edge paths
// starting at v.
inline std::int64_t mp_paths_from(const Graph& g, NodeId v, int k, MpVariant variant) {
  if (k < 1) throw std::invalid_argument("mp_paths_from: k must be >= 1");
  std::int64_t total = 0;
  for (const KTuple& t : enumerate_k_tuples(g, v, k, TupleMode::SimplePath)) {
    const MpState st = mp_path_vector(g, t, variant);
    for (std::int64_t x : st.h3) total += x;
  }
  return total;
}

// Double sum of the third layer over neighbors of v, halved: every
// (k+3)-cycle through v closes once per traversal direction. An odd raw sum
// means the pairing broke and is reported as an error.
inline std::int64_t mp_cycles_at(const Graph& g, NodeId v, int k, MpVariant variant) {
  if (k < 1) throw std::invalid_argument("mp_cycles_at: k must be >= 1");
  std::int64_t raw = 0;
  for (const KTuple& t : enumerate_k_tuples(g, v, k, TupleMode::SimplePath)) {
    const MpState st = mp_path_vector(g, t, variant);
    for (NodeId j : g.neighbors(v)) raw += st.h3[j];
  }
  if (raw % 2 != 0) {
    throw std::runtime_error("mp_cycles_at: odd raw sum, direction pairing broke");
  }
  return raw / 2;
}

}  // namespace kpath
