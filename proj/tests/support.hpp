#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "limbforge/graph.hpp"

namespace limbforge::testing {

// Cut-rank by elimination over a dense bool matrix, independent of the
// bit-row kernels.
inline std::size_t naive_cut_rank(const Graph& g, const std::vector<VertexId>& x) {
  std::vector<VertexId> rows = x, cols;
  for (VertexId v : g.ids())
    if (std::find(x.begin(), x.end(), v) == x.end()) cols.push_back(v);
  std::vector<std::vector<bool>> m(rows.size(), std::vector<bool>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = g.adjacent(rows[i], cols[j]);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !m[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < cols.size(); ++k) m[r][k] = m[r][k] != m[rank][k];
    ++rank;
  }
  return rank;
}

// Subsets of the vertex set as id lists, by mask.
inline std::vector<VertexId> subset(const Graph& g, std::uint64_t mask) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (mask >> i & 1U) out.push_back(g.id(i));
  return out;
}

}  // namespace limbforge::testing
