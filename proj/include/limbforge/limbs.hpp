#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "limbforge/dh.hpp"
#include "limbforge/graph.hpp"
#include "limbforge/split.hpp"

namespace limbforge {

// Limbs are addressed by a bag index b and an unmarked anchor y that some
// marked vertex w of b represents; T is the component of d - V(b) holding y
// and v = partner(w) is its boundary vertex.

// Raw limb: T*v-v (b complete), T-v (w a leaf), (T pivot vy)-v (w a center).
MarkedGraph limb(const MarkedGraph& d, std::size_t b, VertexId y);
// Raw limb with size-2 bags eliminated; validate_canonical holds.
MarkedGraph canonical_limb(const MarkedGraph& d, std::size_t b, VertexId y);
// Origin of the raw limb.
Graph limb_graph(const MarkedGraph& d, std::size_t b, VertexId y);
// Same graph computed from origin(d) directly: G[U] with N(v) toggled,
// G[U], or (G[U] + v) pivot vy - v. w is the marker of b leading into T;
// y defaults to the least representative of w.
Graph limb_graph_fast(const MarkedGraph& d, const Graph& origin_graph, VertexId w,
                      std::optional<VertexId> y = std::nullopt);

// f_D(B, T) for the component behind marker w of bag b.
std::size_t f_value(const MarkedGraph& d, std::size_t b, VertexId w);
// f for every marked vertex of d, keyed by marker.
std::map<VertexId, std::size_t> f_table(const MarkedGraph& d);

// Least k >= 1 meeting "at most two components with f = k, the rest <= k-1"
// at every bag; 0 for a one-vertex decomposition.
std::size_t lrw_from_f_table(const MarkedGraph& d, const std::map<VertexId, std::size_t>& f);
// Condition (2) at a given k.
bool satisfies_bag_condition(const MarkedGraph& d, const std::map<VertexId, std::size_t>& f, std::size_t k);
// Condition (3): bag-index path along which every off-path component has
// f <= k-1; lexicographically least endpoint pair (first <= last).
std::optional<std::vector<std::size_t>> condition_path(const MarkedGraph& d,
                                                       const std::map<VertexId, std::size_t>& f,
                                                       std::size_t k);

// Exact linear rank-width of a distance-hereditary graph. Throws
// UnsupportedInput otherwise.
std::size_t lrw_dh(const Graph& g);
// Same value straight from the definition: f by recursing into limb graphs.
// Exponential on deep trees; a reference for cross-checks.
std::size_t lrw_dh_by_limbs(const Graph& g);

struct ComponentLrw {
  std::vector<VertexId> vertices;
  MarkedGraph decomposition;
  std::map<VertexId, std::size_t> f;  // marker -> f value
  std::size_t lrw = 0;
};

struct LrwDhReport {
  std::size_t lrw = 0;
  std::vector<ComponentLrw> components;
};

LrwDhReport lrw_dh_report(const Graph& g);

// Layout along a condition-(3) path: side components are replaced by
// recursive layouts of their limb graphs, path markers are skipped.
LinearLayout lrw_layout_dh(const Graph& g);

struct ComposedLayout {
  LinearLayout layout;
  std::size_t p = 0;
  std::size_t tree_pathwidth = 0;
  std::size_t bound = 0;  // 2(p+2)(pw(T_D)+1)
};

// Layout of origin(d) built from per-bag layouts along main paths of T_D.
// Throws InvalidArgument if a bag layout is not a permutation of its bag or
// has width above p.
ComposedLayout compose_layout(const MarkedGraph& d, const std::map<std::size_t, LinearLayout>& bag_layouts,
                              std::size_t p);

// Optimal layouts per bag: centers first for stars, oracle layouts for prime
// bags. Also returns the largest bag width (at least 1).
std::pair<std::map<std::size_t, LinearLayout>, std::size_t> default_bag_layouts(const MarkedGraph& d);

}  // namespace limbforge
