#include "limbforge/dh.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <unordered_map>

#include "limbforge/errors.hpp"

namespace limbforge {

AdjList to_adjlist(const Graph& g) {
  AdjList adj(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j : g.neighbor_indices(i)) adj[i].push_back(static_cast<std::uint32_t>(j));
  return adj;
}

namespace {

class Pruner {
 public:
  explicit Pruner(const AdjList& adj)
      : adj_(adj), n_(adj.size()), r_(n_), h_(n_, 0), deg_(n_), alive_(n_, 1), mark_(n_, 0) {
    std::mt19937_64 rng(0x6a09e667f3bcc908ULL);
    for (auto& x : r_) x = rng();
    for (std::size_t v = 0; v < n_; ++v) {
      deg_[v] = static_cast<std::uint32_t>(adj_[v].size());
      for (std::uint32_t u : adj_[v]) {
        if (u == v || u >= n_) throw InvalidArgument("adjacency list has a loop or bad index");
        h_[v] ^= r_[u];
      }
    }
  }

  PruneResult run() {
    for (std::size_t v = 0; v < n_; ++v) {
      index(static_cast<std::uint32_t>(v));
      queue_.push_back(static_cast<std::uint32_t>(v));
    }
    std::vector<char> queued(n_, 1);
    PruneResult out;
    while (!queue_.empty()) {
      std::uint32_t v = queue_.front();
      queue_.pop_front();
      queued[v] = 0;
      if (!alive_[v] || deg_[v] == 0) continue;
      std::int64_t y = -1;
      PruneKind kind = PruneKind::Pendant;
      if (deg_[v] == 1) {
        for (std::uint32_t u : adj_[v])
          if (alive_[u]) y = u;
      } else if ((y = partner(open_, h_[v], v, false)) >= 0) {
        kind = PruneKind::FalseTwin;
      } else if ((y = partner(closed_, h_[v] ^ r_[v], v, true)) >= 0) {
        kind = PruneKind::TrueTwin;
      }
      if (y < 0) continue;
      out.steps.push_back({v, static_cast<std::uint32_t>(y), kind});
      alive_[v] = 0;
      for (std::uint32_t u : adj_[v]) {
        if (!alive_[u]) continue;
        --deg_[u];
        h_[u] ^= r_[v];
        index(u);
        if (!queued[u]) {
          queued[u] = 1;
          queue_.push_back(u);
        }
      }
    }
    out.distance_hereditary = true;
    for (std::size_t v = 0; v < n_; ++v) {
      if (!alive_[v]) continue;
      out.survivors.push_back(static_cast<std::uint32_t>(v));
      if (deg_[v] != 0) out.distance_hereditary = false;
    }
    return out;
  }

 private:
  using Buckets = std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>;

  void index(std::uint32_t v) {
    if (deg_[v] == 0) return;
    open_[h_[v]].push_back(v);
    closed_[h_[v] ^ r_[v]].push_back(v);
  }

  // Live vertex w != v whose current key matches and whose neighbourhood
  // (open or closed) equals v's; stale bucket entries are dropped.
  std::int64_t partner(Buckets& b, std::uint64_t key, std::uint32_t v, bool closed) {
    auto it = b.find(key);
    if (it == b.end()) return -1;
    auto& list = it->second;
    for (std::size_t i = 0; i < list.size();) {
      std::uint32_t w = list[i];
      std::uint64_t wkey = closed ? (h_[w] ^ r_[w]) : h_[w];
      if (!alive_[w] || deg_[w] == 0 || wkey != key) {
        list[i] = list.back();
        list.pop_back();
        continue;
      }
      if (w != v && deg_[w] == deg_[v] && same(v, w, closed)) return w;
      ++i;
    }
    return -1;
  }

  bool same(std::uint32_t v, std::uint32_t w, bool closed) {
    ++stamp_;
    for (std::uint32_t u : adj_[v])
      if (alive_[u]) mark_[u] = stamp_;
    if (closed) {
      if (mark_[w] != stamp_) return false;  // true twins are adjacent
      mark_[v] = stamp_;
    } else if (mark_[w] == stamp_) {
      return false;
    }
    for (std::uint32_t u : adj_[w])
      if (alive_[u] && mark_[u] != stamp_) return false;
    return true;  // equal degrees make the inclusion an equality
  }

  const AdjList& adj_;
  std::size_t n_;
  std::vector<std::uint64_t> r_, h_;
  std::vector<std::uint32_t> deg_;
  std::vector<char> alive_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  Buckets open_, closed_;
  std::deque<std::uint32_t> queue_;
};

class TreeBuilder {
 public:
  explicit TreeBuilder(std::size_t n) {
    t_.nreal = static_cast<int>(n);
    t_.node_of.assign(n, -1);
    t_.partner.assign(n, -1);
  }

  void insert(const PruneStep& s) {
    int x = static_cast<int>(s.x), y = static_cast<int>(s.y);
    if (t_.node_of[y] < 0) {
      if (s.kind == PruneKind::FalseTwin) throw InvalidArgument("false twin of an isolated vertex");
      add_node(true, -1, {y, x});
      return;
    }
    int ni = t_.node_of[y];
    auto& nd = t_.nodes[ni];
    if (nd.elems.size() == 2) {
      // Whole component is a K2 {y, z}.
      int z = nd.elems[0] == y ? nd.elems[1] : nd.elems[0];
      if (s.kind == PruneKind::FalseTwin) {
        nd.complete = false;
        nd.center = z;
      } else if (s.kind == PruneKind::Pendant) {
        nd.complete = false;
        nd.center = y;
      }
      add_elem(ni, x);
      return;
    }
    switch (s.kind) {
      case PruneKind::TrueTwin:
        if (nd.complete) add_elem(ni, x);
        else split(ni, y, x, true, -1);
        break;
      case PruneKind::FalseTwin:
        if (!nd.complete && nd.center != y) add_elem(ni, x);
        else split(ni, y, x, false, 0);
        break;
      case PruneKind::Pendant:
        if (!nd.complete && nd.center == y) add_elem(ni, x);
        else split(ni, y, x, false, 1);
        break;
    }
  }

  SplitTree take() { return std::move(t_); }

 private:
  int add_node(bool complete, int center, std::vector<int> elems) {
    int id = static_cast<int>(t_.nodes.size());
    for (int e : elems) t_.node_of[e] = id;
    t_.nodes.push_back({complete, center, std::move(elems)});
    return id;
  }

  void add_elem(int ni, int x) {
    t_.nodes[ni].elems.push_back(x);
    t_.node_of[x] = ni;
  }

  int new_element() {
    t_.node_of.push_back(-1);
    t_.partner.push_back(-1);
    return t_.element_count() - 1;
  }

  // y leaves node ni for a new 3-element node {m', y, x}; a marker m takes
  // its place. center_sel: -1 none (K), 0 the new marker m', 1 y.
  void split(int ni, int y, int x, bool complete, int center_sel) {
    int m = new_element(), mp = new_element();
    t_.partner[m] = mp;
    t_.partner[mp] = m;
    auto& nd = t_.nodes[ni];
    std::replace(nd.elems.begin(), nd.elems.end(), y, m);
    if (nd.center == y) nd.center = m;
    t_.node_of[m] = ni;
    int center = center_sel < 0 ? -1 : center_sel == 0 ? mp : y;
    add_node(complete, center, {mp, y, x});
  }

  SplitTree t_;
};

// AHU-style code of a node seen from entry element e (-1 at the root).
std::string encode(const SplitTree& t, int ni, int e) {
  const auto& nd = t.nodes[ni];
  auto child = [&](int m) { return encode(t, t.node_of[t.partner[m]], t.partner[m]); };
  std::vector<std::string> kids;
  int unmarked = 0;
  std::string out;
  if (nd.complete) {
    for (int m : nd.elems) {
      if (m == e) continue;
      if (t.is_marker(m)) kids.push_back(child(m));
      else ++unmarked;
    }
    out = "K" + std::to_string(unmarked);
  } else {
    const int c = nd.center;
    out = "S";
    out += e < 0 ? 'r' : e == c ? 'c' : 'l';
    if (c != e) out += t.is_marker(c) ? "m" + child(c) : std::string("u");
    for (int m : nd.elems) {
      if (m == e || m == c) continue;
      if (t.is_marker(m)) kids.push_back(child(m));
      else ++unmarked;
    }
    out += ";" + std::to_string(unmarked);
  }
  std::sort(kids.begin(), kids.end());
  out += "(";
  for (std::size_t i = 0; i < kids.size(); ++i) out += (i ? "," : "") + kids[i];
  out += ")";
  return out;
}

}  // namespace

PruneResult prune_sequence(const AdjList& adj) { return Pruner(adj).run(); }

SplitTree dh_split_tree(const AdjList& adj) {
  PruneResult pr = prune_sequence(adj);
  if (!pr.distance_hereditary) throw UnsupportedInput("graph is not distance-hereditary");
  TreeBuilder b(adj.size());
  for (auto it = pr.steps.rbegin(); it != pr.steps.rend(); ++it) b.insert(*it);
  return b.take();
}

bool is_distance_hereditary(const AdjList& adj) { return prune_sequence(adj).distance_hereditary; }

bool is_distance_hereditary(const Graph& g) { return is_distance_hereditary(to_adjlist(g)); }

bool is_lrw_le_1(const AdjList& adj) {
  PruneResult pr = prune_sequence(adj);
  if (!pr.distance_hereditary) return false;
  TreeBuilder b(adj.size());
  for (auto it = pr.steps.rbegin(); it != pr.steps.rend(); ++it) b.insert(*it);
  SplitTree t = b.take();
  for (const auto& nd : t.nodes) {
    int markers = 0;
    for (int e : nd.elems) markers += t.is_marker(e);
    if (markers > 2) return false;
  }
  return true;
}

bool is_lrw_le_1(const Graph& g) { return is_lrw_le_1(to_adjlist(g)); }

std::string dh_code(const Graph& g) {
  SplitTree t = dh_split_tree(to_adjlist(g));
  const int nn = static_cast<int>(t.nodes.size());
  // Node-level tree: neighbour node via each marker.
  std::vector<std::vector<std::pair<int, int>>> nbr(nn);  // (other node, own marker)
  for (int ni = 0; ni < nn; ++ni)
    for (int m : t.nodes[ni].elems)
      if (t.is_marker(m)) nbr[ni].push_back({t.node_of[t.partner[m]], m});
  std::vector<std::string> comps;
  std::vector<int> comp_of(nn, -1);
  for (int s = 0; s < nn; ++s) {
    if (comp_of[s] >= 0) continue;
    std::vector<int> members{s};
    comp_of[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto [o, m] : nbr[members[i]])
        if (comp_of[o] < 0) {
          comp_of[o] = s;
          members.push_back(o);
        }
    // Centre by repeated leaf stripping.
    std::vector<int> deg(nn, 0), layer;
    for (int v : members) {
      deg[v] = static_cast<int>(nbr[v].size());
      if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = members.size();
    while (remaining > 2) {
      std::vector<int> next;
      for (int v : layer) {
        --remaining;
        for (auto [o, m] : nbr[v])
          if (--deg[o] == 1) next.push_back(o);
      }
      layer = std::move(next);
    }
    if (remaining == 1) {
      comps.push_back("R" + encode(t, layer[0], -1));
    } else {
      int a = layer[0], b = layer[1];
      int ma = -1;
      for (auto [o, m] : nbr[a])
        if (o == b) ma = m;
      std::string ca = encode(t, a, ma), cb = encode(t, b, t.partner[ma]);
      if (cb < ca) std::swap(ca, cb);
      comps.push_back("E" + ca + "|" + cb);
    }
  }
  for (int v = 0; v < t.nreal; ++v)
    if (t.node_of[v] < 0) comps.push_back("v");
  std::sort(comps.begin(), comps.end());
  std::string out = "D" + std::to_string(g.size()) + ":";
  for (std::size_t i = 0; i < comps.size(); ++i) out += (i ? "/" : "") + comps[i];
  return out;
}

}  // namespace limbforge
