#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "limbforge/graph.hpp"

namespace limbforge {

// Split decomposition: underlying graph on unmarked vertices and markers, a
// matching of marked cut-edges, and bags = components after removing them.
class MarkedGraph {
 public:
  // Marker ids are allocated upward from here, per decomposition.
  static constexpr VertexId kMarkerBase = VertexId{1} << 40;

  MarkedGraph() = default;
  // partner must be symmetric; each pair is a marked edge present in g.
  MarkedGraph(Graph g, std::map<VertexId, VertexId> partner, VertexId next_marker = 0);
  static MarkedGraph single_bag(const Graph& g);

  const Graph& graph() const { return g_; }
  const std::map<VertexId, VertexId>& partners() const { return partner_; }
  bool empty() const { return g_.empty(); }
  std::size_t size() const { return g_.size(); }
  bool contains(VertexId v) const { return g_.contains(v); }
  bool is_marked(VertexId v) const { return partner_.count(v) != 0; }
  VertexId partner(VertexId v) const;
  std::vector<Edge> marked_edges() const;  // (u, v) with u < v
  std::vector<VertexId> unmarked_vertices() const;
  std::vector<VertexId> marked_vertices() const;

  const std::vector<std::vector<VertexId>>& bags() const { return bags_; }
  std::size_t bag_count() const { return bags_.size(); }
  std::size_t bag_of(VertexId v) const;
  Graph bag_graph(std::size_t b) const { return g_.induced(bags_[b]); }
  VertexId next_marker() const { return next_marker_; }

  // Throws InvalidArgument unless marked edges form a matching of cut-edges
  // of a connected underlying graph.
  void check() const;

  bool operator==(const MarkedGraph& o) const { return g_ == o.g_ && partner_ == o.partner_; }

 private:
  Graph g_;
  std::map<VertexId, VertexId> partner_;
  VertexId next_marker_ = kMarkerBase;
  std::vector<std::vector<VertexId>> bags_;
  std::map<VertexId, std::size_t> bag_of_;
};

struct Split {
  std::vector<VertexId> x, y;  // sorted
};

// First split in the order: crossing edge uv (u, then v ascending), then the
// second X-seed ascending; X is the closure of {u, seed}. Absent iff prime.
std::optional<Split> find_split(const Graph& g);
bool is_prime(const Graph& g);

MarkedGraph simple_decomposition(const Graph& g, const Split& s);
// Splits bag-level: X and Y partition one bag of d and form a split of it.
MarkedGraph split_bag(const MarkedGraph& d, const Split& s);

// Canonical split decomposition. DH inputs use the split-tree construction,
// others the general algorithm; both yield the canonical decomposition.
MarkedGraph canonical_decomposition(const Graph& g);
// Split refinement to a fixpoint, then recomposition of KK and S_pS_c edges.
MarkedGraph canonical_decomposition_general(const Graph& g);
MarkedGraph canonical_decomposition_dh(const Graph& g);

// Graph on the unmarked vertices; uv is an edge iff u and v are linked.
Graph origin(const MarkedGraph& d);
// (D ∧ xy) \ {x, y} for the marked edge with endpoint x.
MarkedGraph recompose_edge(const MarkedGraph& d, VertexId x);
// Origin by recomposing every marked edge in the given endpoint order.
Graph origin_by_recomposition(const MarkedGraph& d, const std::vector<VertexId>& order);

enum class BagKind { Prime, Complete, Star };

struct BagType {
  BagKind kind = BagKind::Complete;
  VertexId center = 0;  // stars only
};

// Size <= 2: complete; size 3: complete with 3 edges, star with 2; larger:
// complete, star, or prime. Throws InvalidArgument for any other shape.
BagType bag_type(const MarkedGraph& d, std::size_t b);
// "K", "S_p", "S_c" or "P" for the role of v in its bag.
std::string vertex_role(const MarkedGraph& d, VertexId v);
// Role of u then role of its partner, e.g. "KS_p".
std::string marked_edge_type(const MarkedGraph& d, VertexId u);

// No marked edge of type KK or S_pS_c.
bool validate_canonical(const MarkedGraph& d);

struct DecompositionTree {
  std::size_t nodes = 0;  // node i is bag i
  struct Link {
    std::size_t a, b;     // bag indices
    VertexId u, v;        // marked edge, u in bag a
  };
  std::vector<Link> links;
  std::vector<std::vector<std::size_t>> adjacency;

  Graph as_graph() const;  // vertex i is node i
};

DecompositionTree decomposition_tree(const MarkedGraph& d);

// Unmarked vertices represented by v; {v} for unmarked v.
std::vector<VertexId> representatives(const MarkedGraph& d, VertexId v);
// Vertices (one per bag at most) that represent the unmarked vertex x.
std::vector<VertexId> representing(const MarkedGraph& d, VertexId x);

MarkedGraph dec_local_complement(const MarkedGraph& d, VertexId x);
// Bag-wise pivot along the alternating path from x to y.
MarkedGraph dec_pivot(const MarkedGraph& d, VertexId x, VertexId y);
// The same operation as d*x*y*x.
MarkedGraph dec_pivot_by_local_complements(const MarkedGraph& d, VertexId x, VertexId y);

// Vertex sets of the components of d \ V(bag b), keyed by the marker of b
// that leads into each.
std::map<VertexId, std::vector<VertexId>> components_off_bag(const MarkedGraph& d, std::size_t b);
// (marker in b, marker in t) for the component t containing vertex t_vertex.
std::pair<VertexId, VertexId> boundary(const MarkedGraph& d, std::size_t b, VertexId t_vertex);

// Sub-marked-graph induced on a union of whole bags.
MarkedGraph induced_bags(const MarkedGraph& d, const std::vector<VertexId>& vertices);

// Isomorphism code of a marked graph (marked edges preserved).
std::string marked_canonical_form(const MarkedGraph& d);
bool marked_isomorphic(const MarkedGraph& a, const MarkedGraph& b);

// Renames markers to base, base+1, ... in increasing id order.
MarkedGraph renumber_markers(const MarkedGraph& d, VertexId base);

std::string marked_to_json(const MarkedGraph& d);
MarkedGraph marked_from_json(const std::string& text);
std::string marked_to_dot(const MarkedGraph& d);

}  // namespace limbforge
