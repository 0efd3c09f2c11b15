#pragma once

#include <cstddef>

#include "limbforge/graph.hpp"

namespace limbforge {

// Exact linear rank-width by DP over prefix sets. Among optimal layouts the
// lexicographically least (by vertex id) is returned. Throws ResourceLimit
// above caps().oracle_n vertices.
LinearLayout lrw_oracle(const Graph& g);

// Distance-hereditary by definition: every connected induced subgraph keeps
// all pairwise distances. Exponential; for cross-checks only.
bool is_dh_by_distances(const Graph& g);

// Path-width through vertex separation number, DP over vertex subsets.
// Throws ResourceLimit above caps().pw_brute_n vertices.
std::size_t pathwidth_brute(const Graph& g);

// Does some bipartition with both sides >= 2 have cut-rank exactly 1?
bool has_split_brute(const Graph& g);

}  // namespace limbforge
