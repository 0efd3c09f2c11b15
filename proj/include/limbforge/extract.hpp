#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "limbforge/graph.hpp"
#include "limbforge/vertexminor.hpp"

namespace limbforge {

// Sum of the degrees of vertices of degree >= 4. Throws InvalidArgument on a
// non-tree.
std::size_t phi_weight(const Graph& t);

struct SubcubicExpansion {
  Graph tree;                // max degree <= 3, |V| <= 5|V(t)|
  VertexMinorScript script;  // replay on tree gives t (same vertex ids)
};

// Splits edges at a vertex of degree >= 4 until none is left. Each split adds
// p1, p2 with (t' ∧ p1p2) \ {p1, p2} = t.
SubcubicExpansion to_subcubic(const Graph& t);

// Every edge replaced by a path of length 4; new vertices take ids above the
// largest id of t, in edge order.
Graph eta(const Graph& t);

struct TopologicalEmbedding {
  std::map<VertexId, VertexId> branch;     // pattern vertex -> host vertex
  std::vector<Edge> pattern_edges;         // sorted
  std::vector<std::vector<VertexId>> paths;  // host path per pattern edge, from branch[u] to branch[v]
  std::vector<VertexId> host_vertices() const;  // all vertices used, sorted
};

// Subdivision of `pattern` inside the tree `host`, by a dynamic program over
// the host rooted at its smallest vertex. Pattern max degree must be <= 3.
std::optional<TopologicalEmbedding> find_tree_topological_minor(const Graph& host, const Graph& pattern);

// Local complementations at vertices other than a and bv after which a-c-bv is
// an induced path. b must be prime with at least 5 vertices. Throws
// ResourceLimit if the final small-case search exceeds caps().bag_orbit_states.
VertexMinorScript prime_induced_path(const Graph& b, VertexId a, VertexId bv, VertexId c);

// The trigger of the sufficient condition, lrw >= 40(p+2)|V(t)|, reported but
// never used as a gate.
std::size_t largelrw_threshold(std::size_t p, std::size_t tree_size);

struct TreeExtraction {
  VertexMinorScript script;  // replay on g gives a graph isomorphic to t
  std::string method;        // "decomposition" or "induced"
  std::size_t embedded_bags = 0;  // bags of the decomposition tree used
};

// Pipeline: to_subcubic, eta, canonical decomposition, topological minor of
// eta(t') in the decomposition tree, top-down normalisation of its bags into
// stars centred at unmarked vertices, then contraction to t' and the
// to_subcubic script. Absent when no component's decomposition tree holds the
// embedding. Throws ResourceLimit when a prime bag or a short bag chain stops
// the normalisation.
std::optional<TreeExtraction> extract_tree_via_decomposition(const Graph& g, const Graph& t);

// Bounded search for t as an induced subgraph; deletions only.
std::optional<VertexMinorScript> find_induced_tree(const Graph& g, const Graph& t);

// The pipeline, then the induced-subgraph search when no embedding exists.
std::optional<TreeExtraction> extract_tree(const Graph& g, const Graph& t);
std::optional<VertexMinorScript> extract_tree_vertex_minor(const Graph& g, const Graph& t);

}  // namespace limbforge
