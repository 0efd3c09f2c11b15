#include "limbforge/split.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "limbforge/canon.hpp"
#include "limbforge/dh.hpp"
#include "limbforge/errors.hpp"

namespace limbforge {

namespace {

VertexId marker_floor(const Graph& g, VertexId hint) {
  VertexId next = std::max(hint, MarkedGraph::kMarkerBase);
  if (!g.empty()) next = std::max(next, g.ids().back() + 1);
  return next;
}

}  // namespace

MarkedGraph::MarkedGraph(Graph g, std::map<VertexId, VertexId> partner, VertexId next_marker)
    : g_(std::move(g)), partner_(std::move(partner)) {
  next_marker_ = marker_floor(g_, next_marker);
  for (const auto& [a, b] : partner_) {
    auto it = partner_.find(b);
    if (it == partner_.end() || it->second != a) throw InvalidArgument("marked edges are not a matching");
    if (!g_.adjacent(a, b)) throw InvalidArgument("marked edge missing from the underlying graph");
  }
  const std::size_t n = g_.size();
  std::vector<std::int64_t> comp(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<std::int64_t>(bags_.size());
    std::vector<VertexId> bag;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      bag.push_back(g_.id(u));
      auto pit = partner_.find(g_.id(u));
      for (std::size_t w : g_.neighbor_indices(u)) {
        if (pit != partner_.end() && g_.id(w) == pit->second) continue;
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(bag.begin(), bag.end());
    for (VertexId v : bag) bag_of_[v] = bags_.size();
    bags_.push_back(std::move(bag));
  }
}

MarkedGraph MarkedGraph::single_bag(const Graph& g) { return MarkedGraph(g, {}, 0); }

VertexId MarkedGraph::partner(VertexId v) const {
  auto it = partner_.find(v);
  if (it == partner_.end()) throw InvalidArgument("vertex " + std::to_string(v) + " is not marked");
  return it->second;
}

std::vector<Edge> MarkedGraph::marked_edges() const {
  std::vector<Edge> out;
  for (const auto& [a, b] : partner_)
    if (a < b) out.emplace_back(a, b);
  return out;
}

std::vector<VertexId> MarkedGraph::unmarked_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : g_.ids())
    if (!is_marked(v)) out.push_back(v);
  return out;
}

std::vector<VertexId> MarkedGraph::marked_vertices() const {
  std::vector<VertexId> out;
  for (const auto& [a, b] : partner_) out.push_back(a);
  return out;
}

std::size_t MarkedGraph::bag_of(VertexId v) const {
  auto it = bag_of_.find(v);
  if (it == bag_of_.end()) throw InvalidArgument("vertex " + std::to_string(v) + " not in decomposition");
  return it->second;
}

void MarkedGraph::check() const {
  if (!is_connected(g_)) throw InvalidArgument("marked graph is disconnected");
  for (const auto& [a, b] : partner_)
    if (bag_of(a) == bag_of(b)) throw InvalidArgument("marked edge is not a cut-edge");
  if (bags_.size() != partner_.size() / 2 + (g_.empty() ? 0 : 1))
    throw InvalidArgument("marked edges do not form a tree of bags");
}

std::optional<Split> find_split(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("find_split: graph is disconnected");
  const std::size_t n = g.size();
  if (n < 4) return std::nullopt;
  const std::size_t W = g.words();
  Bits x(W);
  std::vector<std::size_t> queue;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : g.neighbor_indices(u))
      for (std::size_t s = 0; s < n; ++s) {
        if (s == u || s == v) continue;
        std::fill(x.begin(), x.end(), 0);
        set_bit(x.data(), u);
        set_bit(x.data(), s);
        queue = {u, s};
        std::size_t size = 2;
        // w outside X must satisfy zw <=> (zv and uw) for every z in X.
        for (std::size_t qi = 0; qi < queue.size() && n - size >= 2; ++qi) {
          std::size_t z = queue[qi];
          const bool zv = g.adj(z, v);
          for (std::size_t w = 0; w < W; ++w) {
            std::uint64_t viol = g.row(z)[w] ^ (zv ? g.row(u)[w] : 0);
            viol &= ~x[w];
            while (viol) {
              std::size_t t = w * 64 + static_cast<std::size_t>(__builtin_ctzll(viol));
              viol &= viol - 1;
              set_bit(x.data(), t);
              queue.push_back(t);
              ++size;
            }
          }
        }
        if (n - size < 2) continue;
        Split out;
        for (std::size_t i = 0; i < n; ++i) (test_bit(x.data(), i) ? out.x : out.y).push_back(g.id(i));
        return out;
      }
  return std::nullopt;
}

bool is_prime(const Graph& g) { return g.size() >= 4 && !find_split(g).has_value(); }

MarkedGraph split_bag(const MarkedGraph& d, const Split& s) {
  if (s.x.size() < 2 || s.y.size() < 2) throw InvalidArgument("split sides need at least 2 vertices");
  std::vector<VertexId> all = s.x;
  all.insert(all.end(), s.y.begin(), s.y.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InvalidArgument("split sides overlap");
  std::size_t b = d.bag_of(all.front());
  if (d.bags()[b] != all) throw InvalidArgument("split sides do not partition one bag");
  const Graph& g = d.graph();
  if (cut_rank_bipartite(g, s.x, s.y) != 1) throw InvalidArgument("not a split: crossing rank is not 1");
  const VertexId a = d.next_marker(), bm = a + 1;
  std::vector<VertexId> xa, yb;
  for (VertexId u : s.x)
    for (VertexId w : s.y)
      if (g.adjacent(u, w)) {
        xa.push_back(u);
        yb.push_back(w);
      }
  std::sort(xa.begin(), xa.end());
  xa.erase(std::unique(xa.begin(), xa.end()), xa.end());
  std::sort(yb.begin(), yb.end());
  yb.erase(std::unique(yb.begin(), yb.end()), yb.end());
  Graph h = g.with_vertex(a, xa).with_vertex(bm, yb);
  for (VertexId u : xa)
    for (VertexId w : yb) h.remove_edge(u, w);
  h.add_edge(a, bm);
  auto partner = d.partners();
  partner[a] = bm;
  partner[bm] = a;
  return MarkedGraph(std::move(h), std::move(partner), bm + 1);
}

MarkedGraph simple_decomposition(const Graph& g, const Split& s) {
  if (!is_connected(g)) throw InvalidArgument("simple_decomposition: graph is disconnected");
  return split_bag(MarkedGraph::single_bag(g), s);
}

MarkedGraph recompose_edge(const MarkedGraph& d, VertexId x) {
  VertexId y = d.partner(x);
  Graph h = pivot(d.graph(), x, y).without(std::vector<VertexId>{x, y});
  auto partner = d.partners();
  partner.erase(x);
  partner.erase(y);
  return MarkedGraph(std::move(h), std::move(partner), d.next_marker());
}

MarkedGraph canonical_decomposition_general(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("canonical_decomposition: graph is disconnected");
  MarkedGraph d = MarkedGraph::single_bag(g);
  std::set<std::vector<VertexId>> prime;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t b = 0; b < d.bag_count(); ++b) {
      const auto& bag = d.bags()[b];
      if (bag.size() < 4 || prime.count(bag)) continue;
      auto s = find_split(d.bag_graph(b));
      if (!s) {
        prime.insert(bag);
        continue;
      }
      d = split_bag(d, *s);
      changed = true;
      break;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [u, v] : d.marked_edges()) {
      std::string t = marked_edge_type(d, u);
      if (t == "KK" || t == "S_pS_c" || t == "S_cS_p") {
        d = recompose_edge(d, u);
        changed = true;
        break;
      }
    }
  }
  return d;
}

MarkedGraph canonical_decomposition_dh(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("canonical_decomposition: graph is disconnected");
  if (g.size() <= 1) return MarkedGraph::single_bag(g);
  SplitTree t = dh_split_tree(to_adjlist(g));
  const VertexId base = marker_floor(g, 0);
  auto id_of = [&](int e) {
    return e < t.nreal ? g.id(static_cast<std::size_t>(e)) : base + static_cast<VertexId>(e - t.nreal);
  };
  std::vector<VertexId> ids;
  for (int e = 0; e < t.element_count(); ++e) ids.push_back(id_of(e));
  Graph h(ids);
  for (const auto& nd : t.nodes) {
    if (nd.complete) {
      for (std::size_t i = 0; i < nd.elems.size(); ++i)
        for (std::size_t j = i + 1; j < nd.elems.size(); ++j) h.add_edge(id_of(nd.elems[i]), id_of(nd.elems[j]));
    } else {
      for (int e : nd.elems)
        if (e != nd.center) h.add_edge(id_of(nd.center), id_of(e));
    }
  }
  std::map<VertexId, VertexId> partner;
  for (int e = t.nreal; e < t.element_count(); ++e) {
    partner[id_of(e)] = id_of(t.partner[e]);
    h.add_edge(id_of(e), id_of(t.partner[e]));
  }
  return MarkedGraph(std::move(h), std::move(partner), base + static_cast<VertexId>(t.element_count() - t.nreal));
}

MarkedGraph canonical_decomposition(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("canonical_decomposition: graph is disconnected");
  if (is_distance_hereditary(g)) return canonical_decomposition_dh(g);
  return canonical_decomposition_general(g);
}

namespace {

// Bag neighbours of v (marked edge excluded).
std::vector<VertexId> bag_neighbors(const MarkedGraph& d, VertexId v) {
  std::vector<VertexId> out;
  const std::size_t b = d.bag_of(v);
  for (VertexId w : d.graph().neighbors(v))
    if (d.bag_of(w) == b) out.push_back(w);
  return out;
}

class RepCache {
 public:
  explicit RepCache(const MarkedGraph& d) : d_(d) {}
  const std::vector<VertexId>& of(VertexId v) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    std::vector<VertexId> out;
    if (!d_.is_marked(v)) {
      out.push_back(v);
    } else {
      for (VertexId u : bag_neighbors(d_, d_.partner(v))) {
        if (!d_.is_marked(u)) {
          out.push_back(u);
        } else {
          const auto& sub = of(u);
          out.insert(out.end(), sub.begin(), sub.end());
        }
      }
      std::sort(out.begin(), out.end());
    }
    return memo_[v] = std::move(out);
  }

 private:
  const MarkedGraph& d_;
  std::map<VertexId, std::vector<VertexId>> memo_;
};

}  // namespace

std::vector<VertexId> representatives(const MarkedGraph& d, VertexId v) {
  if (!d.contains(v)) throw InvalidArgument("representatives: vertex not in decomposition");
  return RepCache(d).of(v);
}

Graph origin(const MarkedGraph& d) {
  Graph out(d.unmarked_vertices());
  RepCache reps(d);
  for (const auto& [a, b] : d.graph().edges()) {
    if (d.is_marked(a) && d.partner(a) == b) continue;
    const auto ra = reps.of(a);
    const auto& rb = reps.of(b);
    for (VertexId p : ra)
      for (VertexId q : rb) out.add_edge(p, q);
  }
  return out;
}

Graph origin_by_recomposition(const MarkedGraph& d, const std::vector<VertexId>& order) {
  MarkedGraph cur = d;
  for (VertexId x : order)
    if (cur.contains(x) && cur.is_marked(x)) cur = recompose_edge(cur, x);
  if (!cur.partners().empty()) throw InvalidArgument("recomposition order misses marked edges");
  return cur.graph();
}

BagType bag_type(const MarkedGraph& d, std::size_t b) {
  Graph h = d.bag_graph(b);
  const std::size_t n = h.size(), e = h.edge_count();
  BagType t;
  if (n <= 2) return t;
  if (e == n * (n - 1) / 2) return t;
  for (std::size_t i = 0; i < n; ++i)
    if (h.degree_at(i) == n - 1 && e == n - 1) {
      t.kind = BagKind::Star;
      t.center = h.id(i);
      return t;
    }
  if (n >= 4 && !find_split(h)) {
    t.kind = BagKind::Prime;
    return t;
  }
  throw InvalidArgument("bag " + std::to_string(b) + " is neither prime, complete nor a star");
}

std::string vertex_role(const MarkedGraph& d, VertexId v) {
  BagType t = bag_type(d, d.bag_of(v));
  switch (t.kind) {
    case BagKind::Complete:
      return "K";
    case BagKind::Prime:
      return "P";
    case BagKind::Star:
      return t.center == v ? "S_c" : "S_p";
  }
  return "?";
}

std::string marked_edge_type(const MarkedGraph& d, VertexId u) {
  return vertex_role(d, u) + vertex_role(d, d.partner(u));
}

bool validate_canonical(const MarkedGraph& d) {
  std::vector<BagType> types;
  for (std::size_t b = 0; b < d.bag_count(); ++b) types.push_back(bag_type(d, b));
  auto role = [&](VertexId v) {
    const BagType& t = types[d.bag_of(v)];
    if (t.kind == BagKind::Complete) return 'K';
    if (t.kind == BagKind::Prime) return 'P';
    return t.center == v ? 'c' : 'p';
  };
  for (const auto& [u, v] : d.marked_edges()) {
    char a = role(u), b = role(v);
    if (a == 'K' && b == 'K') return false;
    if ((a == 'p' && b == 'c') || (a == 'c' && b == 'p')) return false;
  }
  return true;
}

Graph DecompositionTree::as_graph() const {
  Graph g = Graph::with_vertices(nodes);
  for (const auto& l : links) g.set_adj(l.a, l.b, true);
  return g;
}

DecompositionTree decomposition_tree(const MarkedGraph& d) {
  DecompositionTree t;
  t.nodes = d.bag_count();
  t.adjacency.resize(t.nodes);
  for (const auto& [u, v] : d.marked_edges()) {
    std::size_t a = d.bag_of(u), b = d.bag_of(v);
    t.links.push_back({a, b, u, v});
    t.adjacency[a].push_back(b);
    t.adjacency[b].push_back(a);
  }
  for (auto& adj : t.adjacency) std::sort(adj.begin(), adj.end());
  return t;
}

std::vector<VertexId> representing(const MarkedGraph& d, VertexId x) {
  if (d.is_marked(x)) throw InvalidArgument("representing: vertex is marked");
  std::vector<VertexId> out{x};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (VertexId w : bag_neighbors(d, out[i]))
      if (d.is_marked(w)) out.push_back(d.partner(w));
  return out;
}

MarkedGraph dec_local_complement(const MarkedGraph& d, VertexId x) {
  if (!d.contains(x)) throw InvalidArgument("dec_local_complement: vertex not in decomposition");
  if (d.is_marked(x)) throw InvalidArgument("dec_local_complement: vertex is marked");
  Graph h = d.graph();
  for (VertexId w : representing(d, x)) {
    std::vector<std::size_t> nb;
    for (VertexId u : bag_neighbors(d, w)) nb.push_back(h.index(u));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) h.toggle_adj(nb[i], nb[j]);
  }
  return MarkedGraph(std::move(h), d.partners(), d.next_marker());
}

MarkedGraph dec_pivot(const MarkedGraph& d, VertexId x, VertexId y) {
  if (d.is_marked(x) || d.is_marked(y) || x == y) throw InvalidArgument("dec_pivot: needs two unmarked vertices");
  // Bag path from x's bag to y's bag; via[b] is the marker of the parent bag
  // whose partner lies in b.
  const std::size_t bx = d.bag_of(x), by = d.bag_of(y);
  std::map<std::size_t, VertexId> via;
  std::queue<std::size_t> q;
  q.push(bx);
  via[bx] = 0;
  while (!q.empty()) {
    std::size_t b = q.front();
    q.pop();
    for (VertexId m : d.bags()[b]) {
      if (!d.is_marked(m)) continue;
      std::size_t c = d.bag_of(d.partner(m));
      if (via.count(c)) continue;
      via[c] = m;
      q.push(c);
    }
  }
  if (!via.count(by)) throw InvalidArgument("dec_pivot: vertices in different components");
  std::vector<std::pair<VertexId, VertexId>> pairs;  // (entry, exit) per bag, y's bag first
  VertexId exit = y;
  for (std::size_t b = by;;) {
    if (b == bx) {
      pairs.push_back({x, exit});
      break;
    }
    VertexId m = via[b];
    pairs.push_back({d.partner(m), exit});
    exit = m;
    b = d.bag_of(m);
  }
  Graph h = d.graph();
  for (const auto& [e, f] : pairs) {
    if (!h.adjacent(e, f)) throw InvalidArgument("dec_pivot: vertices are not adjacent in the origin");
    const auto& bag = d.bags()[d.bag_of(e)];
    Graph p = pivot(d.graph().induced(bag), e, f);
    for (std::size_t i = 0; i < bag.size(); ++i)
      for (std::size_t j = i + 1; j < bag.size(); ++j) h.set_adj(h.index(bag[i]), h.index(bag[j]), p.adj(i, j));
  }
  return MarkedGraph(std::move(h), d.partners(), d.next_marker());
}

MarkedGraph dec_pivot_by_local_complements(const MarkedGraph& d, VertexId x, VertexId y) {
  if (!origin(d).adjacent(x, y)) throw InvalidArgument("dec_pivot: vertices are not adjacent in the origin");
  return dec_local_complement(dec_local_complement(dec_local_complement(d, x), y), x);
}

std::map<VertexId, std::vector<VertexId>> components_off_bag(const MarkedGraph& d, std::size_t b) {
  std::map<VertexId, std::vector<VertexId>> out;
  const Graph& g = d.graph();
  for (VertexId m : d.bags()[b]) {
    if (!d.is_marked(m)) continue;
    std::vector<VertexId> comp{d.partner(m)};
    std::set<VertexId> seen{d.partner(m)};
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (VertexId w : g.neighbors(comp[i]))
        if (d.bag_of(w) != b && seen.insert(w).second) comp.push_back(w);
    std::sort(comp.begin(), comp.end());
    out[m] = std::move(comp);
  }
  return out;
}

std::pair<VertexId, VertexId> boundary(const MarkedGraph& d, std::size_t b, VertexId t_vertex) {
  for (const auto& [m, comp] : components_off_bag(d, b))
    if (std::binary_search(comp.begin(), comp.end(), t_vertex)) return {m, d.partner(m)};
  throw InvalidArgument("boundary: vertex is not in a component off the bag");
}

MarkedGraph induced_bags(const MarkedGraph& d, const std::vector<VertexId>& vertices) {
  Graph h = d.graph().induced(vertices);
  std::map<VertexId, VertexId> partner;
  for (const auto& [a, b] : d.partners())
    if (h.contains(a) && h.contains(b)) partner[a] = b;
  return MarkedGraph(std::move(h), std::move(partner), d.next_marker());
}

std::string marked_canonical_form(const MarkedGraph& d) {
  const Graph& g = d.graph();
  const auto marked = d.marked_edges();
  const std::size_t n = g.size();
  Graph h = Graph::with_vertices(n + marked.size());
  std::vector<std::uint32_t> colors(n + marked.size(), 0);
  for (std::size_t i = 0; i < n; ++i) colors[i] = d.is_marked(g.id(i)) ? 1 : 0;
  for (const auto& [u, v] : g.edges()) {
    if (d.is_marked(u) && d.partner(u) == v) continue;
    h.set_adj(g.index(u), g.index(v), true);
  }
  for (std::size_t k = 0; k < marked.size(); ++k) {
    colors[n + k] = 2;
    h.set_adj(n + k, g.index(marked[k].first), true);
    h.set_adj(n + k, g.index(marked[k].second), true);
  }
  return canonical_form_colored(h, colors);
}

bool marked_isomorphic(const MarkedGraph& a, const MarkedGraph& b) {
  return a.size() == b.size() && a.partners().size() == b.partners().size() &&
         marked_canonical_form(a) == marked_canonical_form(b);
}

MarkedGraph renumber_markers(const MarkedGraph& d, VertexId base) {
  std::map<VertexId, VertexId> m;
  VertexId next = base;
  for (VertexId v : d.graph().ids())
    if (v >= MarkedGraph::kMarkerBase) m[v] = next++;
  auto f = [&](VertexId v) {
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
  };
  Graph h = d.graph().relabeled(f);
  std::map<VertexId, VertexId> partner;
  for (const auto& [a, b] : d.partners()) partner[f(a)] = f(b);
  return MarkedGraph(std::move(h), std::move(partner), next);
}

std::string marked_to_json(const MarkedGraph& d) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (VertexId v : d.graph().ids()) j["vertices"].push_back({{"id", v}, {"marked", d.is_marked(v)}});
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : d.graph().edges())
    j["edges"].push_back({{"u", u}, {"v", v}, {"marked", d.is_marked(u) && d.partner(u) == v}});
  j["bags"] = d.bags();
  return j.dump();
}

MarkedGraph marked_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  auto at = [&](const char* key) {
    auto p = text.find(std::string("\"") + key + "\"");
    return p == std::string::npos ? 0 : p;
  };
  try {
    std::vector<VertexId> ids;
    for (const auto& v : j.at("vertices")) ids.push_back(v.at("id").get<VertexId>());
    Graph g(ids);
    std::map<VertexId, VertexId> partner;
    for (const auto& e : j.at("edges")) {
      VertexId u = e.at("u").get<VertexId>(), v = e.at("v").get<VertexId>();
      g.add_edge(u, v);
      if (e.value("marked", false)) {
        if (partner.count(u) || partner.count(v)) throw ParseError("json: marked edges are not a matching", at("edges"));
        partner[u] = v;
        partner[v] = u;
      }
    }
    for (const auto& v : j.at("vertices"))
      if (v.value("marked", false) != (partner.count(v.at("id").get<VertexId>()) != 0))
        throw ParseError("json: vertex marked flag disagrees with marked edges", at("vertices"));
    MarkedGraph d(std::move(g), std::move(partner), 0);
    if (j.contains("bags")) {
      std::set<std::vector<VertexId>> given, actual(d.bags().begin(), d.bags().end());
      for (auto bag : j.at("bags").get<std::vector<std::vector<VertexId>>>()) {
        std::sort(bag.begin(), bag.end());
        given.insert(bag);
      }
      if (given != actual) throw ParseError("json: bags disagree with the marked edges", at("bags"));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what(), 0);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("json: ") + e.what(), 0);
  }
}

std::string marked_to_dot(const MarkedGraph& d) {
  std::ostringstream os;
  os << "graph D {\n  node [shape=circle];\n";
  for (std::size_t b = 0; b < d.bag_count(); ++b) {
    std::string kind = "?";
    try {
      BagType t = bag_type(d, b);
      kind = t.kind == BagKind::Complete ? "K" : t.kind == BagKind::Star ? "S" : "P";
    } catch (const InvalidArgument&) {
    }
    os << "  subgraph cluster_" << b << " {\n    label=\"bag " << b << " (" << kind << ")\";\n";
    for (VertexId v : d.bags()[b])
      os << "    \"" << v << "\"" << (d.is_marked(v) ? " [shape=point]" : "") << ";\n";
    os << "  }\n";
  }
  for (const auto& [u, v] : d.graph().edges()) {
    bool m = d.is_marked(u) && d.partner(u) == v;
    os << "  \"" << u << "\" -- \"" << v << "\"" << (m ? " [style=dashed]" : "") << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace limbforge
