#include "limbforge/graph.hpp"

#include <algorithm>
#include <sstream>

#include "limbforge/errors.hpp"
#include "limbforge/simd.hpp"

namespace limbforge {

Graph::Graph(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw InvalidArgument("duplicate vertex id");
  words_ = words_for(ids_.size());
  rows_.assign(ids_.size() * words_, 0);
}

Graph Graph::with_vertices(std::size_t n) {
  std::vector<VertexId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return Graph(std::move(ids));
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g = with_vertices(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(std::vector<VertexId> ids, const std::vector<Edge>& edges) {
  Graph g(std::move(ids));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::optional<std::size_t> Graph::find(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

bool Graph::contains(VertexId v) const { return find(v).has_value(); }

std::size_t Graph::index(VertexId v) const {
  auto i = find(v);
  if (!i) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
  return *i;
}

std::size_t Graph::degree_at(std::size_t i) const { return simd::active().popcount(row(i), words_); }

std::vector<std::size_t> Graph::neighbor_indices(std::size_t i) const {
  std::vector<std::size_t> out;
  const std::uint64_t* r = row(i);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t x = r[w];
    while (x) {
      out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
      x &= x - 1;
    }
  }
  return out;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (std::size_t j : neighbor_indices(index(v))) out.push_back(ids_[j]);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < size(); ++i) s += degree_at(i);
  return s / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j : neighbor_indices(i))
      if (i < j) out.emplace_back(ids_[i], ids_[j]);
  return out;
}

void Graph::set_adj(std::size_t i, std::size_t j, bool on) {
  if (i == j) throw InvalidArgument("self-loop");
  if (on) {
    set_bit(mutable_row(i), j);
    set_bit(mutable_row(j), i);
  } else {
    clear_bit(mutable_row(i), j);
    clear_bit(mutable_row(j), i);
  }
}

void Graph::toggle_adj(std::size_t i, std::size_t j) {
  if (i == j) throw InvalidArgument("self-loop");
  flip_bit(mutable_row(i), j);
  flip_bit(mutable_row(j), i);
}

void Graph::add_edge(VertexId u, VertexId v) { set_adj(index(u), index(v), true); }
void Graph::remove_edge(VertexId u, VertexId v) { set_adj(index(u), index(v), false); }

Graph Graph::induced_indices(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> k = keep;
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  std::vector<VertexId> nid;
  nid.reserve(k.size());
  for (std::size_t i : k) nid.push_back(ids_[i]);
  Graph h(std::move(nid));
  for (std::size_t a = 0; a < k.size(); ++a) {
    const std::uint64_t* r = row(k[a]);
    std::uint64_t* out = h.mutable_row(a);
    for (std::size_t b = 0; b < k.size(); ++b)
      if (test_bit(r, k[b])) set_bit(out, b);
  }
  return h;
}

Graph Graph::induced(const std::vector<VertexId>& keep) const {
  std::vector<std::size_t> idx;
  idx.reserve(keep.size());
  for (VertexId v : keep) idx.push_back(index(v));
  return induced_indices(idx);
}

Graph Graph::without(VertexId v) const { return without(std::vector<VertexId>{v}); }

Graph Graph::without(const std::vector<VertexId>& drop) const {
  Bits gone(words_, 0);
  for (VertexId v : drop) set_bit(gone.data(), index(v));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (!test_bit(gone.data(), i)) keep.push_back(i);
  return induced_indices(keep);
}

Graph Graph::with_vertex(VertexId v, const std::vector<VertexId>& nbrs) const {
  if (contains(v)) throw InvalidArgument("vertex already present");
  std::vector<VertexId> nid = ids_;
  nid.push_back(v);
  Graph h(std::move(nid));
  for (std::size_t i = 0; i < size(); ++i) {
    std::size_t hi = h.index(ids_[i]);
    for (std::size_t j : neighbor_indices(i)) set_bit(h.mutable_row(hi), h.index(ids_[j]));
  }
  for (VertexId u : nbrs) h.add_edge(u, v);
  return h;
}

Graph Graph::relabeled(const std::function<VertexId(VertexId)>& f) const {
  std::vector<VertexId> nid;
  nid.reserve(size());
  for (VertexId v : ids_) nid.push_back(f(v));
  Graph h(nid);
  std::vector<std::size_t> pos(size());
  for (std::size_t i = 0; i < size(); ++i) pos[i] = h.index(nid[i]);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j : neighbor_indices(i)) set_bit(h.mutable_row(pos[i]), pos[j]);
  return h;
}

Graph Graph::compacted() const {
  Graph h = with_vertices(size());
  h.rows_ = rows_;
  return h;
}

Graph Graph::permuted(const std::vector<std::size_t>& perm) const {
  // New position i holds old position perm[i]; ids become 0..n-1.
  Graph h = with_vertices(size());
  std::vector<std::size_t> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[perm[i]] = i;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j : neighbor_indices(perm[i])) set_bit(h.mutable_row(i), inv[j]);
  return h;
}

Bits Graph::mask_of(const std::vector<VertexId>& vs) const {
  Bits m(words_, 0);
  for (VertexId v : vs) set_bit(m.data(), index(v));
  return m;
}

Bits Graph::full_mask() const {
  Bits m(words_, 0);
  for (std::size_t i = 0; i < size(); ++i) set_bit(m.data(), i);
  return m;
}

std::vector<VertexId> Graph::ids_of(const Bits& mask) const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (test_bit(mask.data(), i)) out.push_back(ids_[i]);
  return out;
}

std::size_t gf2_rank(std::vector<std::uint64_t>& rows, std::size_t count, std::size_t words) {
  const auto& k = simd::active();
  // basis[c] is the row whose lowest set bit is column c.
  std::vector<std::int64_t> basis(words * 64, -1);
  std::size_t rank = 0;
  for (std::size_t r = 0; r < count; ++r) {
    std::uint64_t* cur = rows.data() + r * words;
    for (;;) {
      std::size_t w = 0;
      while (w < words && cur[w] == 0) ++w;
      if (w == words) break;
      std::size_t col = w * 64 + static_cast<std::size_t>(__builtin_ctzll(cur[w]));
      if (basis[col] < 0) {
        basis[col] = static_cast<std::int64_t>(r);
        ++rank;
        break;
      }
      k.xor_into(cur + w, rows.data() + static_cast<std::size_t>(basis[col]) * words + w,
                 words - w);
    }
  }
  return rank;
}

namespace {

std::size_t rank_rows_cols(const Graph& g, const Bits& rowmask, const Bits& colmask) {
  const std::size_t W = g.words();
  if (W == 1) {
    // Single-word fast path; pivots on the lowest set bit.
    std::uint64_t basis[64];
    std::uint64_t have = 0;
    std::size_t rank = 0;
    std::uint64_t rm = rowmask[0];
    while (rm) {
      std::size_t i = static_cast<std::size_t>(__builtin_ctzll(rm));
      rm &= rm - 1;
      std::uint64_t r = g.row(i)[0] & colmask[0];
      while (r) {
        unsigned c = static_cast<unsigned>(__builtin_ctzll(r));
        if (!((have >> c) & 1U)) {
          basis[c] = r;
          have |= std::uint64_t{1} << c;
          ++rank;
          break;
        }
        r ^= basis[c];
      }
    }
    return rank;
  }
  std::vector<std::size_t> rows_idx;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (test_bit(rowmask.data(), i)) rows_idx.push_back(i);
  std::vector<std::uint64_t> buf(rows_idx.size() * W);
  const auto& k = simd::active();
  for (std::size_t a = 0; a < rows_idx.size(); ++a)
    k.and_into(buf.data() + a * W, g.row(rows_idx[a]), colmask.data(), W);
  return gf2_rank(buf, rows_idx.size(), W);
}

}  // namespace

std::size_t cut_rank_bipartite(const Graph& g, const std::vector<VertexId>& x,
                               const std::vector<VertexId>& y) {
  Bits xm = g.mask_of(x);
  Bits ym = g.mask_of(y);
  for (std::size_t w = 0; w < g.words(); ++w)
    if (xm[w] & ym[w]) throw InvalidArgument("cut_rank_bipartite: overlapping vertex sets");
  return rank_rows_cols(g, xm, ym);
}

std::size_t cut_rank_mask(const Graph& g, const Bits& x) {
  Bits y = g.full_mask();
  for (std::size_t w = 0; w < g.words(); ++w) y[w] &= ~x[w];
  return rank_rows_cols(g, x, y);
}

std::size_t cut_rank(const Graph& g, const std::vector<VertexId>& x) {
  return cut_rank_mask(g, g.mask_of(x));
}

std::size_t layout_width(const Graph& g, const std::vector<VertexId>& order) {
  if (order.size() != g.size()) throw InvalidArgument("layout is not a permutation");
  Bits seen(g.words(), 0);
  for (VertexId v : order) {
    std::size_t i = g.index(v);
    if (test_bit(seen.data(), i)) throw InvalidArgument("layout repeats a vertex");
    set_bit(seen.data(), i);
  }
  if (g.size() < 2) return 0;
  Bits prefix(g.words(), 0);
  std::size_t width = 0;
  for (std::size_t p = 0; p + 1 < order.size(); ++p) {
    set_bit(prefix.data(), g.index(order[p]));
    width = std::max(width, cut_rank_mask(g, prefix));
  }
  return width;
}

LinearLayout make_layout(const Graph& g, std::vector<VertexId> order) {
  std::size_t w = layout_width(g, order);
  return LinearLayout{std::move(order), w};
}

Graph local_complement(const Graph& g, VertexId v) {
  Graph h = g;
  std::size_t i = g.index(v);
  const std::uint64_t* nv = g.row(i);
  const auto& k = simd::active();
  for (std::size_t a : g.neighbor_indices(i)) {
    std::uint64_t* r = h.mutable_row(a);
    k.xor_into(r, nv, g.words());
    clear_bit(r, a);  // no self-loop: a ∈ N(v)
  }
  return h;
}

Graph pivot(const Graph& g, VertexId x, VertexId y) {
  std::size_t xi = g.index(x), yi = g.index(y);
  if (!g.adj(xi, yi)) throw InvalidArgument("pivot on a non-edge");
  const std::size_t n = g.size();
  std::vector<int> cls(n, 0);  // 1: N(x)∩N(y), 2: N(x) only, 3: N(y) only
  for (std::size_t a = 0; a < n; ++a) {
    if (a == xi || a == yi) continue;
    bool ax = g.adj(a, xi), ay = g.adj(a, yi);
    cls[a] = ax && ay ? 1 : ax ? 2 : ay ? 3 : 0;
  }
  Graph h = g;
  for (std::size_t a = 0; a < n; ++a) {
    if (cls[a] == 0) continue;
    for (std::size_t b = a + 1; b < n; ++b)
      if (cls[b] != 0 && cls[b] != cls[a]) h.toggle_adj(a, b);
  }
  // Swap the labels x and y: exchange rows and columns xi, yi.
  Graph s = h;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == xi || a == yi) continue;
    s.set_adj(a, xi, h.adj(a, yi));
    s.set_adj(a, yi, h.adj(a, xi));
  }
  return s;
}

Graph pivot_by_local_complements(const Graph& g, VertexId x, VertexId y) {
  if (!g.adjacent(x, y)) throw InvalidArgument("pivot on a non-edge");
  return local_complement(local_complement(local_complement(g, x), y), x);
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    std::vector<VertexId> comp;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      comp.push_back(g.id(u));
      for (std::size_t w : g.neighbor_indices(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.size() <= 1 || components(g).size() == 1; }

bool is_forest(const Graph& g) { return g.edge_count() + components(g).size() == g.size(); }

bool is_tree(const Graph& g) { return g.size() >= 1 && g.edge_count() + 1 == g.size() && is_connected(g); }

Graph contraction(const Graph& g, VertexId x, VertexId y) {
  if (!g.adjacent(x, y)) throw InvalidArgument("contraction of a non-edge");
  Graph h = g;
  std::size_t xi = g.index(x);
  for (std::size_t z : g.neighbor_indices(g.index(y)))
    if (z != xi) h.set_adj(xi, z, true);
  return h.without(y);
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.size() << " edges=[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    os << (first ? "" : ",") << u << "-" << v;
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace limbforge
