#pragma once

#include <cstddef>
#include <vector>

#include "limbforge/graph.hpp"

namespace limbforge {

struct PathDecomposition {
  std::vector<std::vector<VertexId>> bags;
  std::size_t width = 0;  // max bag size - 1
};

// Exact path-width of a forest via rooted critical-vertex labels. Throws
// InvalidArgument on a cyclic input.
std::size_t tree_pathwidth(const Graph& t);

// Path P (vertex sequence) such that every component of t - V(P) hanging
// off P has path-width <= k-1; endpoints are leaves, the lexicographically
// least valid pair. Throws InvalidArgument when pw(t) > k or t is not a tree.
std::vector<VertexId> tree_main_path(const Graph& t, std::size_t k);

PathDecomposition tree_path_decomposition(const Graph& t);

// The three covering conditions plus the stored width.
bool is_path_decomposition(const Graph& g, const PathDecomposition& pd);

}  // namespace limbforge
