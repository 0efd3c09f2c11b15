#include "limbforge/limbs.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>

#include "critical_label.hpp"
#include "limbforge/canon.hpp"
#include "limbforge/errors.hpp"
#include "limbforge/oracles.hpp"
#include "limbforge/tree_pw.hpp"

namespace limbforge {

namespace {

enum class LimbCase { Complete, Leaf, Center };

LimbCase limb_case(const MarkedGraph& d, VertexId w) {
  BagType t = bag_type(d, d.bag_of(w));
  if (t.kind == BagKind::Complete) return LimbCase::Complete;
  if (t.kind == BagKind::Prime) throw UnsupportedInput("limb: bag is prime");
  return t.center == w ? LimbCase::Center : LimbCase::Leaf;
}

// Vertices of the component of d - V(bag_of(w)) behind w, sorted.
std::vector<VertexId> side_of(const MarkedGraph& d, VertexId w) {
  const std::size_t b = d.bag_of(w);
  const Graph& g = d.graph();
  std::vector<VertexId> comp{d.partner(w)};
  std::set<VertexId> seen{comp[0]};
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (VertexId x : g.neighbors(comp[i]))
      if (d.bag_of(x) != b && seen.insert(x).second) comp.push_back(x);
  std::sort(comp.begin(), comp.end());
  return comp;
}

// The marker of bag b representing the unmarked vertex y.
VertexId anchor_marker(const MarkedGraph& d, std::size_t b, VertexId y) {
  if (!d.contains(y) || d.is_marked(y)) throw InvalidArgument("limb: anchor must be an unmarked vertex");
  for (VertexId w : d.bags()[b]) {
    if (!d.is_marked(w)) continue;
    auto reps = representatives(d, w);
    if (std::binary_search(reps.begin(), reps.end(), y)) return w;
  }
  throw InvalidArgument("limb: anchor is not represented by a marked vertex of the bag");
}

MarkedGraph drop_vertex(const MarkedGraph& d, VertexId v) {
  std::map<VertexId, VertexId> partner = d.partners();
  partner.erase(v);
  return MarkedGraph(d.graph().without(v), std::move(partner), d.next_marker());
}

// Removes size-2 bags left by deleting the boundary vertex.
MarkedGraph eliminate_small_bags(MarkedGraph d) {
  for (;;) {
    if (d.bag_count() <= 1) return d;
    std::optional<std::size_t> small;
    for (std::size_t b = 0; b < d.bag_count(); ++b)
      if (d.bags()[b].size() == 2) {
        small = b;
        break;
      }
    if (!small) return d;
    const auto bag = d.bags()[*small];
    std::vector<VertexId> marked, unmarked;
    for (VertexId x : bag) (d.is_marked(x) ? marked : unmarked).push_back(x);
    std::map<VertexId, VertexId> partner = d.partners();
    if (marked.size() == 1) {
      // Substitute r for the neighbour's marker v1.
      const VertexId m = marked[0], r = unmarked[0], v1 = d.partner(m);
      partner.erase(m);
      partner.erase(v1);
      Graph h = d.graph().without(std::vector<VertexId>{m, r});
      h = h.relabeled([&](VertexId x) { return x == v1 ? r : x; });
      d = MarkedGraph(std::move(h), std::move(partner), d.next_marker());
    } else {
      const VertexId m1 = marked[0], m2 = marked[1];
      const VertexId v1 = d.partner(m1), v2 = d.partner(m2);
      for (VertexId x : {m1, m2, v1, v2}) partner.erase(x);
      partner[v1] = v2;
      partner[v2] = v1;
      Graph h = d.graph().without(std::vector<VertexId>{m1, m2});
      h.add_edge(v1, v2);
      d = MarkedGraph(std::move(h), std::move(partner), d.next_marker());
      const std::string type = marked_edge_type(d, v1);
      if (type == "KK" || type == "S_pS_c" || type == "S_cS_p") d = recompose_edge(d, v1);
    }
  }
}

// Labels over the decomposition tree. branch(w) is the critical label of the
// limb behind marker w, rooted at the partner's bag with every other element
// of that bag as a child (unmarked ones are leaves). A limb contracts every
// bag left with two elements; combine(.., smooth) models that by making a
// root with one remaining child transparent, at every depth of the label
// recursion. The top value of branch(w) is f(w).
class BranchLabels {
 public:
  explicit BranchLabels(const MarkedGraph& d) : d_(d) {}

  const detail::Label& branch(VertexId w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    const VertexId v = d_.partner(w);
    std::vector<detail::Label> kids;
    children(d_.bag_of(v), v, kids);
    return memo_[w] = detail::combine(std::move(kids), true);
  }

  std::size_t whole() {
    std::vector<detail::Label> kids;
    children(0, kNone, kids);
    return detail::combine(std::move(kids), true)[0].value;
  }

  std::size_t f(VertexId w) { return branch(w)[0].value; }

 private:
  static constexpr VertexId kNone = ~VertexId{0};

  void children(std::size_t bag, VertexId skip, std::vector<detail::Label>& kids) {
    for (VertexId x : d_.bags()[bag])
      if (x != skip) kids.push_back(d_.is_marked(x) ? branch(x) : detail::leaf_label());
  }

  const MarkedGraph& d_;
  std::map<VertexId, detail::Label> memo_;
};

std::size_t bag_requirement(const MarkedGraph& d, std::size_t b, const std::map<VertexId, std::size_t>& f) {
  std::vector<std::size_t> vals;
  for (VertexId w : d.bags()[b])
    if (d.is_marked(w)) vals.push_back(f.at(w));
  std::sort(vals.rbegin(), vals.rend());
  std::size_t k = vals.empty() ? 0 : vals[0];
  if (vals.size() >= 3) k = std::max(k, vals[2] + 1);
  return k;
}

std::map<VertexId, std::size_t> f_values(const MarkedGraph& d) {
  BranchLabels labels(d);
  std::map<VertexId, std::size_t> f;
  for (VertexId w : d.marked_vertices()) f[w] = labels.f(w);
  return f;
}

std::size_t lrw_connected(const Graph& c) {
  if (c.size() <= 1) return 0;
  MarkedGraph d = canonical_decomposition_dh(c);
  return BranchLabels(d).whole();
}

std::size_t lrw_connected_by_limbs(const Graph& c) {
  if (c.size() <= 1) return 0;
  MarkedGraph d = canonical_decomposition_dh(c);
  std::map<VertexId, std::size_t> f;
  for (VertexId w : d.marked_vertices()) f[w] = lrw_dh_by_limbs(limb_graph_fast(d, c, w));
  return lrw_from_f_table(d, f);
}

std::vector<VertexId> layout_connected(const Graph& c);

// Marker of bag `from` whose partner lies in bag `to`.
VertexId link_marker(const MarkedGraph& d, std::size_t from, std::size_t to) {
  for (VertexId w : d.bags()[from])
    if (d.is_marked(w) && d.bag_of(d.partner(w)) == to) return w;
  throw InvalidArgument("link_marker: bags are not adjacent");
}

std::vector<VertexId> layout_connected(const Graph& c) {
  if (c.size() <= 1) return c.ids();
  MarkedGraph d = canonical_decomposition_dh(c);
  auto f = f_values(d);
  const std::size_t k = lrw_from_f_table(d, f);
  auto path = condition_path(d, f, k);
  if (!path) throw InvalidArgument("lrw_layout_dh: no condition path at the computed width");
  std::vector<VertexId> order;
  for (std::size_t i = 0; i < path->size(); ++i) {
    const std::size_t b = (*path)[i];
    std::set<VertexId> skip;
    if (i > 0) skip.insert(link_marker(d, b, (*path)[i - 1]));
    if (i + 1 < path->size()) skip.insert(link_marker(d, b, (*path)[i + 1]));
    for (VertexId x : d.bags()[b]) {
      if (skip.count(x)) continue;
      if (!d.is_marked(x)) {
        order.push_back(x);
        continue;
      }
      for (VertexId y : lrw_layout_dh(limb_graph_fast(d, c, x)).order) order.push_back(y);
    }
  }
  return order;
}

}  // namespace

Graph limb_graph_fast(const MarkedGraph& d, const Graph& g, VertexId w, std::optional<VertexId> y) {
  const LimbCase kind = limb_case(d, w);
  const VertexId v = d.partner(w);
  std::vector<VertexId> unmarked;
  for (VertexId x : side_of(d, w))
    if (!d.is_marked(x)) unmarked.push_back(x);
  Graph h = g.induced(unmarked);
  const auto reps = representatives(d, w);
  switch (kind) {
    case LimbCase::Complete: {
      std::vector<std::size_t> idx;
      for (VertexId r : reps) idx.push_back(h.index(r));
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) h.toggle_adj(idx[i], idx[j]);
      return h;
    }
    case LimbCase::Leaf:
      return h;
    case LimbCase::Center: {
      const VertexId anchor = y ? *y : reps.front();
      if (!std::binary_search(reps.begin(), reps.end(), anchor))
        throw InvalidArgument("limb: anchor is not represented by the marker");
      return pivot(h.with_vertex(v, reps), v, anchor).without(v);
    }
  }
  return h;
}

MarkedGraph limb(const MarkedGraph& d, std::size_t b, VertexId y) {
  if (b >= d.bag_count()) throw InvalidArgument("limb: bag index out of range");
  const VertexId w = anchor_marker(d, b, y);
  const VertexId v = d.partner(w);
  MarkedGraph t = induced_bags(d, side_of(d, w));
  switch (limb_case(d, w)) {
    case LimbCase::Complete:
      return drop_vertex(dec_local_complement(t, v), v);
    case LimbCase::Leaf:
      return drop_vertex(t, v);
    case LimbCase::Center:
      return drop_vertex(dec_pivot(t, v, y), v);
  }
  return t;
}

MarkedGraph canonical_limb(const MarkedGraph& d, std::size_t b, VertexId y) {
  return eliminate_small_bags(limb(d, b, y));
}

Graph limb_graph(const MarkedGraph& d, std::size_t b, VertexId y) { return origin(limb(d, b, y)); }

std::size_t f_value(const MarkedGraph& d, std::size_t b, VertexId w) {
  if (b >= d.bag_count() || d.bag_of(w) != b || !d.is_marked(w))
    throw InvalidArgument("f_value: w must be a marked vertex of the bag");
  const Graph limb = limb_graph_fast(d, origin(d), w);
  const std::string key = canonical_form(limb);
  static std::mutex mutex;
  static auto* memo = new std::unordered_map<std::string, std::size_t>();
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
  }
  const std::size_t value = lrw_dh(limb);
  std::lock_guard<std::mutex> lock(mutex);
  memo->emplace(key, value);
  return value;
}

std::map<VertexId, std::size_t> f_table(const MarkedGraph& d) { return f_values(d); }

std::size_t lrw_from_f_table(const MarkedGraph& d, const std::map<VertexId, std::size_t>& f) {
  if (d.unmarked_vertices().size() <= 1) return 0;
  std::size_t k = 1;
  for (std::size_t b = 0; b < d.bag_count(); ++b) k = std::max(k, bag_requirement(d, b, f));
  return k;
}

bool satisfies_bag_condition(const MarkedGraph& d, const std::map<VertexId, std::size_t>& f, std::size_t k) {
  if (k == 0) return false;
  for (std::size_t b = 0; b < d.bag_count(); ++b) {
    std::size_t top = 0;
    for (VertexId w : d.bags()[b]) {
      if (!d.is_marked(w)) continue;
      const std::size_t x = f.at(w);
      if (x > k) return false;
      if (x == k) ++top;
    }
    if (top > 2) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> condition_path(const MarkedGraph& d,
                                                       const std::map<VertexId, std::size_t>& f,
                                                       std::size_t k) {
  if (k == 0) return std::nullopt;
  const std::size_t n = d.bag_count();
  const DecompositionTree tree = decomposition_tree(d);
  // A valid path extends to one whose ends are leaves of T_D (off-path f <= k-1
  // persists), so only leaf pairs and the one-node tree need checking.
  if (n == 1) return std::vector<std::size_t>{0};
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < n; ++i)
    if (tree.adjacency[i].size() == 1) leaves.push_back(i);
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      std::vector<std::size_t> par(n, SIZE_MAX);
      std::vector<std::size_t> stack{leaves[i]};
      par[leaves[i]] = leaves[i];
      while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t x : tree.adjacency[u])
          if (par[x] == SIZE_MAX) {
            par[x] = u;
            stack.push_back(x);
          }
      }
      std::vector<std::size_t> path{leaves[j]};
      while (path.back() != leaves[i]) path.push_back(par[path.back()]);
      std::reverse(path.begin(), path.end());
      std::vector<char> on(n, 0);
      for (std::size_t b : path) on[b] = 1;
      bool ok = true;
      for (std::size_t b : path) {
        for (VertexId w : d.bags()[b])
          if (d.is_marked(w) && !on[d.bag_of(d.partner(w))] && f.at(w) + 1 > k) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok) return path;
    }
  return std::nullopt;
}

std::size_t lrw_dh(const Graph& g) {
  std::size_t best = 0;
  for (const auto& comp : components(g)) {
    Graph c = g.induced(comp);
    if (!is_distance_hereditary(c)) throw UnsupportedInput("lrw_dh: graph is not distance-hereditary");
    best = std::max(best, lrw_connected(c));
  }
  return best;
}

std::size_t lrw_dh_by_limbs(const Graph& g) {
  std::size_t best = 0;
  for (const auto& comp : components(g)) {
    Graph c = g.induced(comp);
    if (!is_distance_hereditary(c)) throw UnsupportedInput("lrw_dh: graph is not distance-hereditary");
    best = std::max(best, lrw_connected_by_limbs(c));
  }
  return best;
}

LrwDhReport lrw_dh_report(const Graph& g) {
  LrwDhReport report;
  for (const auto& comp : components(g)) {
    Graph c = g.induced(comp);
    if (!is_distance_hereditary(c)) throw UnsupportedInput("lrw_dh: graph is not distance-hereditary");
    ComponentLrw cl;
    cl.vertices = comp;
    cl.decomposition = canonical_decomposition_dh(c);
    cl.f = f_values(cl.decomposition);
    cl.lrw = lrw_from_f_table(cl.decomposition, cl.f);
    report.lrw = std::max(report.lrw, cl.lrw);
    report.components.push_back(std::move(cl));
  }
  return report;
}

LinearLayout lrw_layout_dh(const Graph& g) {
  std::vector<VertexId> order;
  for (const auto& comp : components(g)) {
    Graph c = g.induced(comp);
    if (!is_distance_hereditary(c)) throw UnsupportedInput("lrw_layout_dh: graph is not distance-hereditary");
    for (VertexId v : layout_connected(c)) order.push_back(v);
  }
  return make_layout(g, std::move(order));
}

namespace {

// Order of every vertex of the sub-decomposition s (markers of s that are
// unmarked in s included); bag layouts are looked up through d's bag index.
std::vector<VertexId> compose_order(const MarkedGraph& d, const MarkedGraph& s,
                                    const std::map<std::size_t, LinearLayout>& bag_layouts) {
  const DecompositionTree tree = decomposition_tree(s);
  Graph tg = tree.as_graph();
  std::vector<std::size_t> path;
  for (VertexId x : tree_main_path(tg, tree_pathwidth(tg))) path.push_back(static_cast<std::size_t>(x));
  std::vector<VertexId> order;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const std::size_t b = path[i];
    std::optional<VertexId> first, last;
    if (i > 0) first = link_marker(s, b, path[i - 1]);
    if (i + 1 < path.size()) last = link_marker(s, b, path[i + 1]);
    const auto& layout = bag_layouts.at(d.bag_of(s.bags()[b][0])).order;
    // Entry marker first and exit marker last: width grows by at most two.
    if (first) order.push_back(*first);
    for (VertexId x : layout) {
      if (x == first || x == last) continue;
      if (!s.is_marked(x)) {
        order.push_back(x);
        continue;
      }
      const VertexId v = s.partner(x);
      for (VertexId y : compose_order(d, induced_bags(s, side_of(s, x)), bag_layouts))
        if (y != v) order.push_back(y);
    }
    if (last) order.push_back(*last);
  }
  return order;
}

}  // namespace

ComposedLayout compose_layout(const MarkedGraph& d, const std::map<std::size_t, LinearLayout>& bag_layouts,
                              std::size_t p) {
  if (d.empty()) throw InvalidArgument("compose_layout: empty decomposition");
  if (!is_connected(d.graph())) throw InvalidArgument("compose_layout: decomposition is disconnected");
  for (std::size_t b = 0; b < d.bag_count(); ++b) {
    auto it = bag_layouts.find(b);
    if (it == bag_layouts.end()) throw InvalidArgument("compose_layout: missing layout for bag " + std::to_string(b));
    auto sorted = it->second.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != d.bags()[b]) throw InvalidArgument("compose_layout: bag layout is not a permutation of the bag");
    if (layout_width(d.bag_graph(b), it->second.order) > p)
      throw InvalidArgument("compose_layout: bag layout exceeds width " + std::to_string(p));
  }
  ComposedLayout out;
  out.p = p;
  Graph tg = decomposition_tree(d).as_graph();
  out.tree_pathwidth = tree_pathwidth(tg);
  out.bound = 2 * (p + 2) * (out.tree_pathwidth + 1);
  std::vector<VertexId> order;
  for (VertexId x : compose_order(d, d, bag_layouts))
    if (!d.is_marked(x)) order.push_back(x);
  out.layout = make_layout(origin(d), std::move(order));
  return out;
}

std::pair<std::map<std::size_t, LinearLayout>, std::size_t> default_bag_layouts(const MarkedGraph& d) {
  std::map<std::size_t, LinearLayout> layouts;
  std::size_t p = 1;
  for (std::size_t b = 0; b < d.bag_count(); ++b) {
    const Graph bg = d.bag_graph(b);
    const BagType t = bag_type(d, b);
    std::vector<VertexId> order;
    if (t.kind == BagKind::Prime) {
      order = lrw_oracle(bg).order;
    } else {
      order = d.bags()[b];
      if (t.kind == BagKind::Star) {
        std::erase(order, t.center);
        order.insert(order.begin(), t.center);
      }
    }
    LinearLayout l = make_layout(bg, std::move(order));
    p = std::max(p, l.width);
    layouts[b] = std::move(l);
  }
  return {std::move(layouts), p};
}

}  // namespace limbforge
