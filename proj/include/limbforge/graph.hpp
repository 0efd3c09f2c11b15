#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace limbforge {

using VertexId = std::uint64_t;
using Edge = std::pair<VertexId, VertexId>;

// Dense bit set over vertex positions.
using Bits = std::vector<std::uint64_t>;

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
inline bool test_bit(const std::uint64_t* b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1U; }
inline void set_bit(std::uint64_t* b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void clear_bit(std::uint64_t* b, std::size_t i) {
  b[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}
inline void flip_bit(std::uint64_t* b, std::size_t i) { b[i >> 6] ^= std::uint64_t{1} << (i & 63); }

// Simple undirected graph. Vertex ids are opaque and kept sorted; position i
// in the id list owns bit-row i of the GF(2) adjacency matrix. The diagonal is
// always zero and the matrix is symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<VertexId> ids);

  static Graph with_vertices(std::size_t n);
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);
  static Graph from_edges(std::vector<VertexId> ids, const std::vector<Edge>& edges);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::size_t words() const { return words_; }
  const std::vector<VertexId>& ids() const { return ids_; }
  VertexId id(std::size_t i) const { return ids_[i]; }

  bool contains(VertexId v) const;
  std::optional<std::size_t> find(VertexId v) const;
  // Position of v; throws InvalidArgument when absent.
  std::size_t index(VertexId v) const;

  const std::uint64_t* row(std::size_t i) const { return rows_.data() + i * words_; }
  std::uint64_t* mutable_row(std::size_t i) { return rows_.data() + i * words_; }
  bool adj(std::size_t i, std::size_t j) const { return test_bit(row(i), j); }
  bool adjacent(VertexId u, VertexId v) const { return adj(index(u), index(v)); }

  std::size_t degree_at(std::size_t i) const;
  std::size_t degree(VertexId v) const { return degree_at(index(v)); }
  std::vector<std::size_t> neighbor_indices(std::size_t i) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;  // (u, v) with u < v, sorted

  void set_adj(std::size_t i, std::size_t j, bool on);
  void toggle_adj(std::size_t i, std::size_t j);
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);

  Graph induced(const std::vector<VertexId>& keep) const;
  Graph induced_indices(const std::vector<std::size_t>& keep) const;
  Graph without(VertexId v) const;
  Graph without(const std::vector<VertexId>& drop) const;
  // Adds a new vertex v adjacent to nbrs.
  Graph with_vertex(VertexId v, const std::vector<VertexId>& nbrs) const;
  // Applies an injective relabeling.
  Graph relabeled(const std::function<VertexId(VertexId)>& f) const;
  // Relabels to 0..n-1 preserving order.
  Graph compacted() const;
  // Relabels so that position perm[i] of this graph becomes position i.
  Graph permuted(const std::vector<std::size_t>& perm) const;

  Bits mask_of(const std::vector<VertexId>& vs) const;
  Bits full_mask() const;
  std::vector<VertexId> ids_of(const Bits& mask) const;

  bool operator==(const Graph& o) const { return ids_ == o.ids_ && rows_ == o.rows_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  std::vector<VertexId> ids_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct LinearLayout {
  std::vector<VertexId> order;
  std::size_t width = 0;
};

// GF(2) rank of `count` rows of `words` words each, stored contiguously.
// The buffer is consumed.
std::size_t gf2_rank(std::vector<std::uint64_t>& rows, std::size_t count, std::size_t words);

std::size_t cut_rank_bipartite(const Graph& g, const std::vector<VertexId>& x,
                               const std::vector<VertexId>& y);
std::size_t cut_rank(const Graph& g, const std::vector<VertexId>& x);
// Mask form; no validation.
std::size_t cut_rank_mask(const Graph& g, const Bits& x);

// Width of a layout; 0 when |V(g)| < 2. Throws when order is not a permutation.
std::size_t layout_width(const Graph& g, const std::vector<VertexId>& order);
LinearLayout make_layout(const Graph& g, std::vector<VertexId> order);

Graph local_complement(const Graph& g, VertexId v);
// Pivot by the W1/W2/W3 rule followed by the x/y label swap.
Graph pivot(const Graph& g, VertexId x, VertexId y);
// Pivot computed as g*x*y*x.
Graph pivot_by_local_complements(const Graph& g, VertexId x, VertexId y);

std::vector<std::vector<VertexId>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

// G/xy: y is removed and its neighbours are joined to x.
Graph contraction(const Graph& g, VertexId x, VertexId y);

std::string describe(const Graph& g);

}  // namespace limbforge
