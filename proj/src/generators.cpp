#include "limbforge/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "limbforge/canon.hpp"
#include "limbforge/errors.hpp"

namespace limbforge {

Graph path_graph(std::size_t n) {
  Graph g = Graph::with_vertices(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.set_adj(i, i + 1, true);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.set_adj(0, n - 1, true);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g = Graph::with_vertices(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.set_adj(i, j, true);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g = Graph::with_vertices(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.set_adj(0, i, true);
  return g;
}

Graph complete_binary_tree(std::size_t height) {
  const std::size_t n = (std::size_t{1} << (height + 1)) - 1;
  Graph g = Graph::with_vertices(n);
  for (std::size_t v = 1; v < n; ++v) g.set_adj(v, (v - 1) / 2, true);
  return g;
}

namespace {

std::vector<Graph> dedup(std::map<std::string, Graph>& m) {
  std::vector<Graph> out;
  out.reserve(m.size());
  for (auto& [k, g] : m) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Graph> level{Graph::with_vertices(0)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level) {
      const std::size_t m = g.size();
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        std::vector<VertexId> nb;
        for (std::size_t i = 0; i < m; ++i)
          if ((s >> i) & 1U) nb.push_back(i);
        Graph h = g.with_vertex(m, nb);
        next.emplace(canonical_form(h), std::move(h));
      }
    }
    level = dedup(next);
  }
  return level;
}

std::vector<Graph> all_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> all_connected_dh_graphs(std::size_t n) {
  if (n == 0) return {};
  std::vector<Graph> level{Graph::with_vertices(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level) {
      const VertexId x = g.size();
      for (VertexId y = 0; y < g.size(); ++y) {
        std::vector<VertexId> open = g.neighbors(y);
        std::vector<VertexId> closed = open;
        closed.push_back(y);
        for (const auto& nb : {std::vector<VertexId>{y}, open, closed}) {
          if (nb.empty()) continue;
          Graph h = g.with_vertex(x, nb);
          next.emplace(canonical_form(h), std::move(h));
        }
      }
    }
    level = dedup(next);
  }
  return level;
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g = Graph::with_vertices(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.set_adj(i, j, true);
  return g;
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

Graph random_dh_graph(std::size_t n, Rng& rng) {
  if (n == 0) return Graph();
  Graph g = Graph::with_vertices(1);
  for (VertexId x = 1; x < n; ++x) {
    VertexId y = std::uniform_int_distribution<VertexId>(0, x - 1)(rng);
    std::vector<VertexId> nb = g.neighbors(y);
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0:
        nb = {y};
        break;
      case 1:
        nb.push_back(y);
        break;
      default:
        if (nb.empty()) nb = {y};
    }
    g = g.with_vertex(x, nb);
  }
  return g;
}

Graph random_tree(std::size_t n, Rng& rng) {
  Graph g = Graph::with_vertices(n);
  if (n < 2) return g;
  if (n == 2) {
    g.set_adj(0, 1, true);
    return g;
  }
  std::vector<std::size_t> prufer(n - 2), deg(n, 1);
  for (auto& x : prufer) {
    x = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    ++deg[x];
  }
  for (std::size_t x : prufer) {
    std::size_t leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    g.set_adj(leaf, x, true);
    --deg[leaf];
    --deg[x];
  }
  std::size_t a = n, b = n;
  for (std::size_t v = 0; v < n; ++v)
    if (deg[v] == 1) (a == n ? a : b) = v;
  g.set_adj(a, b, true);
  return g;
}

AdjList caterpillar_with_twins(std::size_t n, Rng& rng) {
  // Grows a width-1 layout at its right end: a pendant or twin of the last
  // vertex appended after it keeps every prefix cut at rank <= 1, and a leg
  // on the last vertex may sit just before it.
  AdjList adj(n);
  auto link = [&](std::size_t u, std::size_t v) {
    adj[u].push_back(static_cast<std::uint32_t>(v));
    adj[v].push_back(static_cast<std::uint32_t>(u));
  };
  if (n < 2) return adj;
  link(0, 1);
  std::size_t end = 1;
  std::discrete_distribution<int> op({3, 3, 1, 1});
  for (std::size_t x = 2; x < n; ++x) {
    switch (op(rng)) {
      case 0:  // spine step
        link(end, x);
        end = x;
        break;
      case 1:  // leg
        link(end, x);
        break;
      case 2: {  // true twin of the end
        std::vector<std::uint32_t> nb = adj[end];
        for (std::uint32_t u : nb) link(u, x);
        link(end, x);
        end = x;
        break;
      }
      default: {  // false twin of the end
        std::vector<std::uint32_t> nb = adj[end];
        for (std::uint32_t u : nb) link(u, x);
        end = x;
      }
    }
  }
  return adj;
}

Graph random_relabel(const Graph& g, Rng& rng) {
  std::vector<VertexId> fresh(g.size());
  std::iota(fresh.begin(), fresh.end(), VertexId{1000});
  std::shuffle(fresh.begin(), fresh.end(), rng);
  std::map<VertexId, VertexId> m;
  for (std::size_t i = 0; i < g.size(); ++i) m[g.id(i)] = fresh[i];
  return g.relabeled([&](VertexId v) { return m.at(v); });
}

}  // namespace limbforge
