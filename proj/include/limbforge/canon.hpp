#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "limbforge/graph.hpp"

namespace limbforge {

// Isomorphism-invariant byte string: equal iff isomorphic. Graphs whose
// components are all distance-hereditary use the split-tree code; the rest
// go through individualization-refinement. Exact at every size.
std::string canonical_form(const Graph& g);

// Exact canonical form of a vertex-coloured graph; colors are indexed by
// position and must be preserved by the isomorphism.
std::string canonical_form_colored(const Graph& g, const std::vector<std::uint32_t>& colors);

// Canonical ordering of positions (position order[i] gets label i) for the
// coloured labeler; the form above is derived from it.
std::vector<std::size_t> canonical_labeling(const Graph& g, const std::vector<std::uint32_t>& colors);

// Canonical form with the vertex `root` distinguished.
std::string rooted_canonical_form(const Graph& g, VertexId root);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace limbforge
