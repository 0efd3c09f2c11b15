#include "limbforge/extract.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "limbforge/canon.hpp"
#include "limbforge/caps.hpp"
#include "limbforge/errors.hpp"
#include "limbforge/split.hpp"

namespace limbforge {

namespace {

void require_tree(const Graph& t, const char* what) {
  if (!is_tree(t)) throw InvalidArgument(std::string(what) + ": input is not a tree");
}

std::size_t max_degree(const Graph& g) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < g.size(); ++i) m = std::max(m, g.degree_at(i));
  return m;
}

}  // namespace

std::size_t phi_weight(const Graph& t) {
  require_tree(t, "phi_weight");
  std::size_t sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.degree_at(i) >= 4) sum += t.degree_at(i);
  return sum;
}

SubcubicExpansion to_subcubic(const Graph& t) {
  require_tree(t, "to_subcubic");
  Graph cur = t;
  std::vector<VertexMinorScript> splits;
  for (;;) {
    std::optional<VertexId> v;
    for (std::size_t i = 0; i < cur.size() && !v; ++i)
      if (cur.degree_at(i) >= 4) v = cur.id(i);
    if (!v) break;
    const auto nb = cur.neighbors(*v);  // sorted
    const VertexId v1 = nb[0], v2 = nb[1];
    const VertexId p1 = cur.ids().back() + 1, p2 = p1 + 1;
    // v p2 p1 v1 replaces v v1; v2 moves from v to p1.
    cur = cur.with_vertex(p1, {v1, v2}).with_vertex(p2, {*v, p1});
    cur.remove_edge(*v, v1);
    cur.remove_edge(*v, v2);
    splits.push_back({pivot_op(p1, p2), delete_op(p1), delete_op(p2)});
  }
  SubcubicExpansion out{cur, {}};
  for (auto it = splits.rbegin(); it != splits.rend(); ++it)
    out.script.insert(out.script.end(), it->begin(), it->end());
  return out;
}

Graph eta(const Graph& t) {
  require_tree(t, "eta");
  const auto edges = t.edges();
  std::vector<VertexId> ids = t.ids();
  VertexId next = t.empty() ? 0 : t.ids().back() + 1;
  std::vector<Edge> out;
  for (const auto& [u, v] : edges) {
    const VertexId a = next, b = next + 1, c = next + 2;
    next += 3;
    ids.insert(ids.end(), {a, b, c});
    out.insert(out.end(), {{u, a}, {a, b}, {b, c}, {c, v}});
  }
  return Graph::from_edges(ids, out);
}

std::vector<VertexId> TopologicalEmbedding::host_vertices() const {
  std::set<VertexId> s;
  for (const auto& [p, h] : branch) s.insert(h);
  for (const auto& path : paths) s.insert(path.begin(), path.end());
  return {s.begin(), s.end()};
}

namespace {

// A rooted orientation of the pattern: a vertex root, or a virtual root
// placed inside an edge (index np, children the edge's endpoints).
struct RootedPattern {
  std::size_t top;
  std::vector<std::vector<std::size_t>> kids;  // by pattern index, plus the virtual node
  std::vector<std::size_t> post;               // children before parents
};

RootedPattern orient(const Graph& p, std::size_t root, std::optional<std::size_t> other) {
  const std::size_t np = p.size();
  RootedPattern r;
  r.kids.assign(np + 1, {});
  std::vector<std::size_t> parent(np + 1, np + 1), order;
  std::vector<std::size_t> stack;
  if (other) {
    r.top = np;
    r.kids[np] = {root, *other};
    parent[root] = np;
    parent[*other] = np;
    stack = {root, *other};
    order.push_back(np);
  } else {
    r.top = root;
    parent[root] = np + 2;
    stack = {root};
  }
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (std::size_t y : p.neighbor_indices(x)) {
      if (y == parent[x] || parent[y] != np + 1) continue;
      if (other && ((x == root && y == *other) || (x == *other && y == root))) continue;
      parent[y] = x;
      r.kids[x].push_back(y);
      stack.push_back(y);
    }
  }
  r.post.assign(order.rbegin(), order.rend());
  return r;
}

// Distinct representatives: assign each list an entry, all different.
bool assign(const std::vector<std::vector<std::size_t>>& lists, std::vector<std::size_t>& pick,
            std::size_t i = 0) {
  if (i == lists.size()) return true;
  for (std::size_t c : lists[i]) {
    if (std::find(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(i), c) !=
        pick.begin() + static_cast<std::ptrdiff_t>(i))
      continue;
    pick[i] = c;
    if (assign(lists, pick, i + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<TopologicalEmbedding> find_tree_topological_minor(const Graph& host, const Graph& pattern) {
  require_tree(host, "find_tree_topological_minor");
  require_tree(pattern, "find_tree_topological_minor");
  if (max_degree(pattern) > 3) throw InvalidArgument("find_tree_topological_minor: pattern degree above 3");
  if (pattern.size() > host.size()) return std::nullopt;
  if (pattern.size() == 1) {
    TopologicalEmbedding e;
    e.branch[pattern.id(0)] = host.id(0);
    return e;
  }

  const std::size_t nh = host.size();
  std::vector<std::size_t> hparent(nh, nh), hpost;
  std::vector<std::vector<std::size_t>> hkids(nh);
  {
    std::vector<std::size_t> order{0}, stack{0};
    std::vector<char> seen(nh, 0);
    seen[0] = 1;
    order.clear();
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (std::size_t y : host.neighbor_indices(x))
        if (!seen[y]) {
          seen[y] = 1;
          hparent[y] = x;
          hkids[x].push_back(y);
          stack.push_back(y);
        }
    }
    hpost.assign(order.rbegin(), order.rend());
  }

  const std::size_t np = pattern.size();
  std::vector<std::pair<std::size_t, std::optional<std::size_t>>> roots;
  for (std::size_t r = 0; r < np; ++r) roots.push_back({r, std::nullopt});
  for (const auto& [u, v] : pattern.edges()) roots.push_back({pattern.index(u), pattern.index(v)});

  for (const auto& [root, other] : roots) {
    const RootedPattern rp = orient(pattern, root, other);
    const std::size_t rows = np + 1;
    std::vector<char> can(rows * nh, 0), reach(rows * nh, 0);
    auto candidates = [&](std::size_t p, std::size_t h) {
      std::vector<std::vector<std::size_t>> lists;
      for (std::size_t q : rp.kids[p]) {
        std::vector<std::size_t> l;
        for (std::size_t c : hkids[h])
          if (reach[q * nh + c] && l.size() < rp.kids[p].size()) l.push_back(c);
        lists.push_back(std::move(l));
      }
      return lists;
    };
    for (std::size_t h : hpost)
      for (std::size_t p : rp.post) {
        bool ok = rp.kids[p].empty();
        if (!ok && hkids[h].size() >= rp.kids[p].size()) {
          auto lists = candidates(p, h);
          std::vector<std::size_t> pick(lists.size());
          ok = assign(lists, pick);
        }
        can[p * nh + h] = ok;
        bool r = ok;
        for (std::size_t c : hkids[h]) r = r || reach[p * nh + c];
        reach[p * nh + h] = r;
      }
    std::optional<std::size_t> top_host;
    for (std::size_t h = 0; h < nh && !top_host; ++h)
      if (can[rp.top * nh + h]) top_host = h;
    if (!top_host) continue;

    // Rebuild: image of each pattern node and the downward host path to it.
    std::vector<std::size_t> image(rows, nh);
    std::vector<std::vector<std::size_t>> down(rows);  // from parent's image to own image
    std::function<void(std::size_t, std::size_t)> place = [&](std::size_t p, std::size_t h) {
      image[p] = h;
      auto lists = candidates(p, h);
      std::vector<std::size_t> pick(lists.size());
      assign(lists, pick);
      for (std::size_t i = 0; i < rp.kids[p].size(); ++i) {
        const std::size_t q = rp.kids[p][i];
        std::vector<std::size_t> path{h};
        std::size_t at = pick[i];
        for (;;) {
          path.push_back(at);
          if (can[q * nh + at]) break;
          for (std::size_t c : hkids[at])
            if (reach[q * nh + c]) {
              at = c;
              break;
            }
        }
        down[q] = path;
        place(q, at);
      }
    };
    place(rp.top, *top_host);

    TopologicalEmbedding e;
    for (std::size_t p = 0; p < np; ++p) e.branch[pattern.id(p)] = host.id(image[p]);
    e.pattern_edges = pattern.edges();
    for (const auto& [u, v] : e.pattern_edges) {
      const std::size_t ui = pattern.index(u), vi = pattern.index(v);
      std::vector<std::size_t> path;
      if (other && ((ui == root && vi == *other) || (vi == root && ui == *other))) {
        path.assign(down[ui].rbegin(), down[ui].rend());
        path.insert(path.end(), down[vi].begin() + 1, down[vi].end());
      } else if (std::find(rp.kids[ui].begin(), rp.kids[ui].end(), vi) != rp.kids[ui].end()) {
        path = down[vi];
      } else {
        path.assign(down[ui].rbegin(), down[ui].rend());
      }
      std::vector<VertexId> ids;
      for (std::size_t x : path) ids.push_back(host.id(x));
      e.paths.push_back(std::move(ids));
    }
    return e;
  }
  return std::nullopt;
}

namespace {

bool induced_path(const Graph& h, VertexId a, VertexId c, VertexId b) {
  return h.adjacent(a, c) && h.adjacent(c, b) && !h.adjacent(a, b);
}

// Breadth-first search over local complementations at `moves`, looking only at
// h[s]; (h*x)[s] = h[s]*x for x in s, so the sequence replays on h.
std::optional<VertexMinorScript> search_lc(const Graph& h, const std::vector<VertexId>& s,
                                           const std::vector<VertexId>& moves, VertexId a, VertexId c,
                                           VertexId b) {
  const Graph start = h.induced(s);
  std::map<std::vector<Edge>, std::pair<std::vector<Edge>, VertexId>> parent;
  std::deque<Graph> queue{start};
  parent[start.edges()] = {{}, a};
  while (!queue.empty()) {
    Graph cur = queue.front();
    queue.pop_front();
    if (induced_path(cur, a, c, b)) {
      VertexMinorScript out;
      for (auto key = cur.edges(); key != start.edges();) {
        const auto& [prev, x] = parent.at(key);
        out.push_back(lc_op(x));
        key = prev;
      }
      std::reverse(out.begin(), out.end());
      return out;
    }
    for (VertexId x : moves) {
      Graph next = local_complement(cur, x);
      auto key = next.edges();
      if (parent.count(key)) continue;
      if (parent.size() >= caps().bag_orbit_states)
        throw ResourceLimit("prime_induced_path: search exceeds bag_orbit_states");
      parent[key] = {cur.edges(), x};
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

// Shortest path from `from` to any vertex of `to` inside `alive`, skipping the
// edge `skip` if given.
std::vector<VertexId> shortest_path(const Graph& h, VertexId from, const std::set<VertexId>& to,
                                    const std::set<VertexId>& alive, std::optional<Edge> skip = {}) {
  std::map<VertexId, VertexId> prev{{from, from}};
  std::deque<VertexId> queue{from};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : h.neighbors(x)) {
      if (!alive.count(y) || prev.count(y)) continue;
      if (skip && ((x == skip->first && y == skip->second) || (x == skip->second && y == skip->first)))
        continue;
      prev[y] = x;
      if (to.count(y)) {
        std::vector<VertexId> path{y};
        while (path.back() != from) path.push_back(prev[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(y);
    }
  }
  return {};
}

}  // namespace

VertexMinorScript prime_induced_path(const Graph& b, VertexId a, VertexId bv, VertexId c) {
  if (!b.contains(a) || !b.contains(bv) || !b.contains(c))
    throw InvalidArgument("prime_induced_path: vertex not in graph");
  if (a == bv || a == c || bv == c) throw InvalidArgument("prime_induced_path: a, b, c must be distinct");
  if (b.size() < 5 || !is_prime(b)) throw InvalidArgument("prime_induced_path: needs a prime graph on 5+ vertices");
  if (induced_path(b, a, c, bv)) return {};

  Graph h = b;
  VertexMinorScript script;
  std::set<VertexId> alive(b.ids().begin(), b.ids().end());
  auto complement_and_drop = [&](VertexId x) {
    h = local_complement(h, x);
    script.push_back(lc_op(x));
    alive.erase(x);
  };

  // Prime graphs on 5+ vertices are 2-connected: an a-b path of length >= 2.
  const auto p = shortest_path(h, a, {bv}, alive, Edge{a, bv});
  if (p.size() < 3) throw std::logic_error("prime_induced_path: no a-b path of length 2");
  std::vector<VertexId> small;  // vertex set of the final case analysis
  const auto at_c = std::find(p.begin(), p.end(), c);
  if (at_c != p.end()) {
    for (auto it = p.begin() + 1; it != at_c; ++it) complement_and_drop(*it);
    for (auto it = at_c + 1; it + 1 != p.end(); ++it) complement_and_drop(*it);
    if (h.adjacent(a, bv)) {
      h = local_complement(h, c);
      script.push_back(lc_op(c));
    }
    small = {a, c, bv};
  } else {
    for (std::size_t i = 1; i + 2 < p.size(); ++i) complement_and_drop(p[i]);
    const VertexId z = p[p.size() - 2];
    const auto q = shortest_path(h, c, {a, z, bv}, alive);
    if (q.empty()) throw std::logic_error("prime_induced_path: c cut off from a-z-b");
    for (std::size_t j = 1; j + 2 < q.size(); ++j) complement_and_drop(q[j]);
    small = {a, z, bv, c};
    if (q.size() >= 3) small.push_back(q[q.size() - 2]);
  }

  if (!induced_path(h, a, c, bv)) {
    std::sort(small.begin(), small.end());
    std::vector<VertexId> moves;
    for (VertexId x : small)
      if (x != a && x != bv) moves.push_back(x);
    auto tail = search_lc(h, small, moves, a, c, bv);
    if (!tail) {
      // The three-step case with q3 in {a, b} has no pivot that spares a and
      // b; grow the vertex set by up to three more vertices, then use all.
      std::vector<VertexId> rest;
      for (VertexId x : h.ids())
        if (!std::binary_search(small.begin(), small.end(), x)) rest.push_back(x);
      for (std::size_t extra = 1; extra <= 3 && !tail && extra <= rest.size(); ++extra) {
        std::vector<std::size_t> pick(extra);
        for (std::size_t i = 0; i < extra; ++i) pick[i] = i;
        while (!tail) {
          std::vector<VertexId> s = small;
          for (std::size_t i : pick) s.push_back(rest[i]);
          std::sort(s.begin(), s.end());
          std::vector<VertexId> moves;
          for (VertexId x : s)
            if (x != a && x != bv) moves.push_back(x);
          tail = search_lc(h, s, moves, a, c, bv);
          // Next combination in lexicographic order.
          std::size_t i = extra;
          while (i > 0 && pick[i - 1] == rest.size() - extra + i - 1) --i;
          if (i == 0) break;
          ++pick[i - 1];
          for (std::size_t j = i; j < extra; ++j) pick[j] = pick[j - 1] + 1;
        }
      }
    }
    if (!tail) {
      std::vector<VertexId> all_moves;
      for (VertexId x : h.ids())
        if (x != a && x != bv) all_moves.push_back(x);
      tail = search_lc(h, h.ids(), all_moves, a, c, bv);
    }
    if (!tail) throw std::logic_error("prime_induced_path: no induced path found");
    for (const auto& op : *tail) h = local_complement(h, op.a);
    script.insert(script.end(), tail->begin(), tail->end());
  }
  if (!induced_path(apply_script(b, script), a, c, bv))
    throw std::logic_error("prime_induced_path: replay check failed");
  return script;
}

std::size_t largelrw_threshold(std::size_t p, std::size_t tree_size) { return 40 * (p + 2) * tree_size; }

namespace {

// Rewrites a rooted sub-decomposition bag by bag, top-down, into stars whose
// centers are unmarked. Every operation is mirrored in `script`, so the
// origin of d always equals the replay of script on the starting graph.
class Normalizer {
 public:
  MarkedGraph d;
  VertexMinorScript script;

  explicit Normalizer(MarkedGraph start) : d(std::move(start)) {}

  void run(VertexId root_marker) {
    normalize_root(root_marker);
    std::deque<VertexId> queue{d.partner(root_marker)};
    while (!queue.empty()) {
      const VertexId up = queue.front();
      queue.pop_front();
      std::vector<VertexId> kids;
      for (VertexId x : bag(up))
        if (d.is_marked(x) && x != up) kids.push_back(x);
      if (kids.size() > 2) throw std::logic_error("normalize: bag with more than three neighbours");
      normalize(up, kids);
      for (VertexId x : kids) queue.push_back(d.partner(x));
    }
    for (std::size_t b = 0; b < d.bag_count(); ++b) {
      BagType t = bag_type(d, b);
      if (t.kind != BagKind::Star || d.is_marked(t.center))
        throw std::logic_error("normalize: a bag is not a star with an unmarked center");
    }
  }

 private:
  std::vector<VertexId> bag(VertexId anchor) const { return d.bags()[d.bag_of(anchor)]; }

  std::vector<VertexId> unmarked(VertexId anchor) const {
    std::vector<VertexId> out;
    for (VertexId x : bag(anchor))
      if (!d.is_marked(x)) out.push_back(x);
    return out;
  }

  VertexId rep(VertexId marker) const {
    const auto r = representatives(d, marker);
    return *std::min_element(r.begin(), r.end());
  }

  void lc(VertexId u) {
    d = dec_local_complement(d, u);
    script.push_back(lc_op(u));
  }
  void piv(VertexId u, VertexId w) {
    d = dec_pivot(d, u, w);
    script.push_back(pivot_op(u, w));
  }
  void del(VertexId u) {
    d = MarkedGraph(d.graph().without(u), d.partners(), d.next_marker());
    script.push_back(delete_op(u));
  }
  // Local complementation at a bag vertex; markers act through a vertex they
  // represent.
  void lc_at(VertexId y) { lc(d.is_marked(y) ? rep(y) : y); }

  BagType type_of(VertexId anchor) const { return bag_type(d, d.bag_of(anchor)); }

  // Makes a-c-bv an induced path of the prime bag of a, then deletes the
  // remaining unmarked vertices.
  void prime_to_path(VertexId a, VertexId c, VertexId bv) {
    for (const auto& op : prime_induced_path(d.bag_graph(d.bag_of(a)), a, bv, c)) lc_at(op.a);
    for (VertexId u : unmarked(a))
      if (u != c && u != bv) del(u);
  }

  void normalize_root(VertexId m) {
    for (int guard = 0; guard < 8; ++guard) {
      const BagType t = type_of(m);
      const auto u = unmarked(m);
      if (t.kind == BagKind::Star) {
        if (!d.is_marked(t.center)) return;
        piv(u[0], rep(m));
      } else if (t.kind == BagKind::Complete) {
        lc(u[0]);
      } else {
        prime_to_path(m, u[0], u[1]);
      }
    }
    throw std::logic_error("normalize: root bag did not settle");
  }

  void normalize(VertexId up, const std::vector<VertexId>& kids) {
    for (int guard = 0; guard < 8; ++guard) {
      const BagType t = type_of(up);
      const auto u = unmarked(up);
      if (t.kind == BagKind::Star) {
        if (!d.is_marked(t.center)) return;
        if (t.center == up) {
          // Leaf of a normalised parent against this center: absorb the bag.
          d = recompose_edge(d, up);
          return;
        }
        if (!u.empty()) {
          piv(u[0], rep(t.center));
        } else {
          const VertexId other = kids[0] == t.center ? kids[1] : kids[0];
          three_marked_star(up, t.center, other);
          return;
        }
      } else if (t.kind == BagKind::Complete) {
        if (!u.empty()) {
          lc(u[0]);
        } else {
          lc_at(kids[0]);
        }
      } else if (kids.size() < 2) {
        prime_to_path(up, u[0], kids.empty() ? u[1] : kids[0]);
      } else {
        prime_to_path(up, kids[0], kids[1]);
      }
    }
    throw std::logic_error("normalize: bag did not settle");
  }

  // Bag {v, c1, c2} with center c1 and no unmarked vertex, below two
  // normalised two-neighbour bags P1, P2. Pivoting their centers and dropping
  // P1 merges P2 into the bag, whose center then moves to P2's vertex.
  void three_marked_star(VertexId v, VertexId c1, VertexId c2) {
    const VertexId m1d = d.partner(v);
    std::vector<VertexId> p1_markers;
    for (VertexId x : bag(m1d))
      if (d.is_marked(x)) p1_markers.push_back(x);
    if (p1_markers.size() != 2) throw ResourceLimit("normalize: no two-neighbour bag above a branch bag");
    const VertexId m1u = p1_markers[0] == m1d ? p1_markers[1] : p1_markers[0];
    const VertexId m2d = d.partner(m1u);
    std::vector<VertexId> p2_markers;
    for (VertexId x : bag(m2d))
      if (d.is_marked(x)) p2_markers.push_back(x);
    if (p2_markers.size() > 2) throw ResourceLimit("normalize: bag chain above a branch bag too short");

    const VertexId x1 = type_of(m1d).center, x2 = type_of(m2d).center;
    for (VertexId u : unmarked(m1d))
      if (u != x1) del(u);
    const bool p2_is_root = p2_markers.size() == 1;
    bool kept_leaf = false;
    for (VertexId u : unmarked(m2d)) {
      if (u == x2) continue;
      if (p2_is_root && !kept_leaf) {
        kept_leaf = true;  // stands in for the missing uplink
        continue;
      }
      del(u);
    }

    piv(x1, x2);
    const auto left = unmarked(m1d);
    if (left.size() != 1) throw std::logic_error("normalize: unexpected bag after pivot");
    del(left[0]);
    // P1 is down to the marked edge m1u-m1d: join v to m2d directly.
    Graph g = d.graph().without(std::vector<VertexId>{m1u, m1d});
    g.add_edge(v, m2d);
    auto partner = d.partners();
    partner.erase(m1u);
    partner.erase(m1d);
    partner[v] = m2d;
    partner[m2d] = v;
    d = MarkedGraph(std::move(g), std::move(partner), d.next_marker());
    if (marked_edge_type(d, v) != "S_pS_c") throw std::logic_error("normalize: expected an S_pS_c edge");
    d = recompose_edge(d, v);

    // The bag is now a star at c1 with leaves c2, x2 and P2's old uplink.
    if (!d.graph().adjacent(x2, c1) || !d.graph().adjacent(c1, c2))
      throw std::logic_error("normalize: merged bag has an unexpected shape");
    piv(x2, rep(c1));
  }
};

// Deletions that keep exactly `keep` (sorted) of g, ascending.
VertexMinorScript delete_all_but(const Graph& g, const std::vector<VertexId>& keep) {
  VertexMinorScript s;
  for (VertexId x : g.ids())
    if (!std::binary_search(keep.begin(), keep.end(), x)) s.push_back(delete_op(x));
  return s;
}

// Topological minor of t' in the tree h: delete the rest, then suppress the
// subdivision vertices (local complementation then deletion).
VertexMinorScript contract_to(const Graph& h, const Graph& tp, std::map<VertexId, VertexId>& branch) {
  auto emb = find_tree_topological_minor(h, tp);
  if (!emb) throw std::logic_error("extract: normalised tree lost the subcubic tree");
  auto script = delete_all_but(h, emb->host_vertices());
  for (const auto& path : emb->paths)
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      script.push_back(lc_op(path[i]));
      script.push_back(delete_op(path[i]));
    }
  branch = emb->branch;
  return script;
}

VertexMinorScript relabel_script(const VertexMinorScript& s, const std::map<VertexId, VertexId>& f) {
  VertexMinorScript out;
  for (auto op : s) {
    op.a = f.at(op.a);
    if (op.op == OpKind::Pivot) op.b = f.at(op.b);
    out.push_back(op);
  }
  return out;
}

}  // namespace

std::optional<TreeExtraction> extract_tree_via_decomposition(const Graph& g, const Graph& t) {
  require_tree(t, "extract_tree");
  if (g.empty()) return std::nullopt;
  if (t.size() == 1) return TreeExtraction{delete_all_but(g, {g.id(0)}), "decomposition", 0};

  const SubcubicExpansion sub = to_subcubic(t);
  const Graph pattern = eta(sub.tree);
  for (const auto& comp : components(g)) {
    if (comp.size() < 2) continue;
    const MarkedGraph d = canonical_decomposition(g.induced(comp));
    const auto emb = find_tree_topological_minor(decomposition_tree(d).as_graph(), pattern);
    if (!emb) continue;

    // Sub-decomposition on the embedded bags. A marker leading out of them is
    // replaced by one vertex it represents.
    const auto nodes = emb->host_vertices();
    std::set<std::size_t> in_t1(nodes.begin(), nodes.end());
    std::vector<VertexId> verts;
    std::map<VertexId, VertexId> rename;
    std::map<VertexId, VertexId> partner;
    for (std::size_t b : in_t1)
      for (VertexId x : d.bags()[b]) {
        verts.push_back(x);
        if (!d.is_marked(x)) continue;
        if (in_t1.count(d.bag_of(d.partner(x)))) {
          partner[x] = d.partner(x);
        } else {
          const auto r = representatives(d, x);
          rename[x] = *std::min_element(r.begin(), r.end());
        }
      }
    Graph under = d.graph().induced(verts).relabeled([&](VertexId x) {
      auto it = rename.find(x);
      return it == rename.end() ? x : it->second;
    });
    MarkedGraph sub_d(std::move(under), partner, d.next_marker());
    const auto kept = sub_d.unmarked_vertices();
    const Graph start = g.induced(kept);
    if (origin(sub_d) != start) throw std::logic_error("extract: sub-decomposition origin mismatch");

    // Root at the bag holding the image of the smallest leaf of t'.
    VertexId leaf = 0;
    for (VertexId x : sub.tree.ids())
      if (sub.tree.degree(x) == 1) {
        leaf = x;
        break;
      }
    const std::size_t root_bag = emb->branch.at(leaf);
    VertexId root_marker = 0;
    for (VertexId x : d.bags()[root_bag])
      if (partner.count(x)) root_marker = x;

    Normalizer norm(std::move(sub_d));
    norm.run(root_marker);
    const Graph h = origin(norm.d);
    if (apply_script(start, norm.script) != h) throw std::logic_error("extract: script and decomposition diverged");
    if (!is_tree(h)) throw std::logic_error("extract: normalised origin is not a tree");

    std::map<VertexId, VertexId> branch;
    VertexMinorScript script = delete_all_but(g, kept);
    script.insert(script.end(), norm.script.begin(), norm.script.end());
    const auto tail = contract_to(h, sub.tree, branch);
    script.insert(script.end(), tail.begin(), tail.end());
    const auto back = relabel_script(sub.script, branch);
    script.insert(script.end(), back.begin(), back.end());
    if (!isomorphic(apply_script(g, script), t)) throw std::logic_error("extract: replay is not the target tree");
    return TreeExtraction{std::move(script), "decomposition", nodes.size()};
  }
  return std::nullopt;
}

std::optional<VertexMinorScript> find_induced_tree(const Graph& g, const Graph& t) {
  require_tree(t, "find_induced_tree");
  if (t.size() > g.size()) return std::nullopt;
  // t in BFS order from its smallest vertex; each later vertex hangs off an
  // earlier one.
  std::vector<std::size_t> order{0}, parent(t.size(), 0);
  std::vector<char> seen(t.size(), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t y : t.neighbor_indices(order[i]))
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        order.push_back(y);
      }
  std::vector<std::size_t> image(t.size(), g.size());
  std::vector<char> used(g.size(), 0);
  std::size_t states = 0;
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == order.size()) return true;
    const std::size_t q = order[k];
    std::vector<std::size_t> cand;
    if (k == 0) {
      for (std::size_t h = 0; h < g.size(); ++h) cand.push_back(h);
    } else {
      cand = g.neighbor_indices(image[parent[q]]);
    }
    for (std::size_t h : cand) {
      if (used[h]) continue;
      if (++states > caps().vm_states) throw ResourceLimit("find_induced_tree: search exceeds vm_states");
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const std::size_t p = order[j];
        if (k > 0 && p == parent[q]) continue;
        ok = !g.adj(h, image[p]);
      }
      if (!ok) continue;
      image[q] = h;
      used[h] = 1;
      if (place(k + 1)) return true;
      used[h] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  std::vector<VertexId> keep;
  for (std::size_t q = 0; q < t.size(); ++q) keep.push_back(g.id(image[q]));
  std::sort(keep.begin(), keep.end());
  return delete_all_but(g, keep);
}

std::optional<TreeExtraction> extract_tree(const Graph& g, const Graph& t) {
  if (auto r = extract_tree_via_decomposition(g, t)) return r;
  if (auto s = find_induced_tree(g, t)) return TreeExtraction{std::move(*s), "induced", 0};
  return std::nullopt;
}

std::optional<VertexMinorScript> extract_tree_vertex_minor(const Graph& g, const Graph& t) {
  auto r = extract_tree(g, t);
  if (!r) return std::nullopt;
  return std::move(r->script);
}

}  // namespace limbforge
