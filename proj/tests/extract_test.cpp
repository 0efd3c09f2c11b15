#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "limbforge/canon.hpp"
#include "limbforge/dh.hpp"
#include "limbforge/errors.hpp"
#include "limbforge/extract.hpp"
#include "limbforge/generators.hpp"
#include "limbforge/obstructions.hpp"
#include "limbforge/split.hpp"
#include "limbforge/vertexminor.hpp"

using namespace limbforge;

namespace {

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < g.size(); ++i) d = std::max(d, g.degree_at(i));
  return d;
}

bool induced_path(const Graph& g, VertexId a, VertexId c, VertexId b) {
  return g.adjacent(a, c) && g.adjacent(c, b) && !g.adjacent(a, b);
}

// Checks an embedding against the definition of a subdivision.
void check_embedding(const Graph& host, const Graph& pattern, const TopologicalEmbedding& e) {
  REQUIRE(e.branch.size() == pattern.size());
  REQUIRE(e.paths.size() == pattern.edge_count());
  std::set<VertexId> branch_images;
  for (auto [p, h] : e.branch) branch_images.insert(h);
  CHECK(branch_images.size() == pattern.size());
  std::set<VertexId> interiors;
  for (std::size_t k = 0; k < e.paths.size(); ++k) {
    const auto [u, v] = e.pattern_edges[k];
    const auto& path = e.paths[k];
    REQUIRE(path.size() >= 2);
    CHECK(path.front() == e.branch.at(u));
    CHECK(path.back() == e.branch.at(v));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(host.adjacent(path[i], path[i + 1]));
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      CHECK(branch_images.count(path[i]) == 0);
      CHECK(interiors.insert(path[i]).second);
    }
  }
}

// Paths in a tree are unique, so a subdivision is an injective branch map
// whose edge paths have pairwise disjoint interiors avoiding branch images.
std::vector<VertexId> tree_path(const Graph& t, VertexId from, VertexId to) {
  std::map<VertexId, VertexId> parent{{from, from}};
  std::vector<VertexId> queue{from};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (VertexId w : t.neighbors(queue[i]))
      if (parent.emplace(w, queue[i]).second) queue.push_back(w);
  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(parent.at(path.back()));
  return path;
}

bool brute_topological_minor(const Graph& host, const Graph& pattern) {
  const std::size_t k = pattern.size();
  std::vector<VertexId> image(k);
  std::vector<bool> used(host.size());
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == k) {
      std::set<VertexId> taken(image.begin(), image.end());
      for (auto [u, v] : pattern.edges()) {
        const auto path = tree_path(host, image[pattern.index(u)], image[pattern.index(v)]);
        for (std::size_t j = 1; j + 1 < path.size(); ++j)
          if (!taken.insert(path[j]).second) return false;
      }
      return true;
    }
    for (std::size_t h = 0; h < host.size(); ++h) {
      if (used[h]) continue;
      used[h] = true;
      image[i] = host.id(h);
      if (place(i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return place(0);
}

std::vector<Graph> trees_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (const Graph& g : all_connected_graphs(k))
      if (is_tree(g)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("phi weight") {
  CHECK(phi_weight(path_graph(6)) == 0);
  CHECK(phi_weight(complete_binary_tree(3)) == 0);
  CHECK(phi_weight(star_graph(4)) == 4);
  Graph spider = star_graph(5).with_vertex(6, {1});
  spider.remove_edge(0, 1);
  spider.add_edge(0, 6);
  CHECK(phi_weight(spider) == 5);
  CHECK(phi_weight(star_graph(4).with_vertex(9, {1})) == 4);
  CHECK_THROWS_AS(phi_weight(cycle_graph(4)), InvalidArgument);
}

TEST_CASE("subcubic expansion of stars") {
  const SubcubicExpansion same = to_subcubic(path_graph(5));
  CHECK(same.tree == path_graph(5));
  CHECK(same.script.empty());

  const SubcubicExpansion k14 = to_subcubic(star_graph(4));
  CHECK(k14.tree.size() == 7);
  CHECK(max_degree(k14.tree) <= 3);
  CHECK(is_tree(k14.tree));
  CHECK(apply_script(k14.tree, k14.script) == star_graph(4));

  const SubcubicExpansion k16 = to_subcubic(star_graph(6));
  CHECK(k16.tree.size() <= 35);
  CHECK(max_degree(k16.tree) <= 3);
  CHECK(isomorphic(apply_script(k16.tree, k16.script), star_graph(6)));
}

TEST_CASE("subcubic expansion replays on every tree up to 8 vertices and random larger trees") {
  std::vector<Graph> trees = trees_up_to(8);
  Rng rng(83);
  for (int round = 0; round < 200; ++round) trees.push_back(random_tree(9 + rng() % 30, rng));
  for (const Graph& t : trees) {
    const SubcubicExpansion s = to_subcubic(t);
    CHECK(is_tree(s.tree));
    CHECK(max_degree(s.tree) <= 3);
    CHECK(s.tree.size() <= 5 * t.size());
    CHECK(phi_weight(s.tree) == 0);
    CHECK(isomorphic(apply_script(s.tree, s.script), t));
  }
}

TEST_CASE("eta replaces each edge by a path of length four") {
  CHECK(isomorphic(eta(path_graph(2)), path_graph(5)));
  CHECK(isomorphic(eta(path_graph(3)), path_graph(9)));
  const Graph s = eta(star_graph(3));
  CHECK(s.size() == 13);
  CHECK(is_tree(s));
  CHECK(max_degree(s) == 3);
  const Graph t = complete_binary_tree(3);
  CHECK(eta(t).size() == t.size() + 3 * t.edge_count());
  // Original ids survive; new ids lie above them.
  for (VertexId v : t.ids()) CHECK(eta(t).contains(v));
}

TEST_CASE("topological minors in trees") {
  const Graph t = complete_binary_tree(2);
  const auto self = find_tree_topological_minor(t, t);
  REQUIRE(self.has_value());
  check_embedding(t, t, *self);
  CHECK(self->host_vertices().size() == t.size());

  const Graph host = complete_binary_tree(4);
  const auto claw = find_tree_topological_minor(host, star_graph(3));
  REQUIRE(claw.has_value());
  check_embedding(host, star_graph(3), *claw);
  CHECK(host.degree(claw->branch.at(0)) == 3);

  CHECK_FALSE(find_tree_topological_minor(path_graph(10), star_graph(3)).has_value());
  CHECK_THROWS_AS(find_tree_topological_minor(cycle_graph(5), path_graph(2)), InvalidArgument);
}

TEST_CASE("topological minors agree with exhaustive branch maps on small trees") {
  Rng rng(89);
  std::size_t present = 0, absent = 0;
  for (int round = 0; round < 150; ++round) {
    const Graph host = random_tree(4 + rng() % 7, rng);
    const Graph pattern = random_tree(2 + rng() % 4, rng);
    if (max_degree(pattern) > 3) continue;
    const auto e = find_tree_topological_minor(host, pattern);
    if (e) check_embedding(host, pattern, *e);
    const bool slow = brute_topological_minor(host, pattern);
    CHECK(e.has_value() == slow);
    (slow ? present : absent) += 1;
  }
  CHECK(present > 0);
  CHECK(absent > 0);
}

TEST_CASE("prime induced paths on the five-cycle") {
  const Graph c5 = cycle_graph(5);
  CHECK(prime_induced_path(c5, 0, 2, 1).empty());
  const VertexMinorScript s = prime_induced_path(c5, 0, 4, 2);
  const Graph after = apply_script(c5, s);
  CHECK(induced_path(after, 0, 2, 4));
  for (const ScriptOp& op : s) {
    CHECK(op.op == OpKind::LocalComplement);
    CHECK(op.a != 0);
    CHECK(op.a != 4);
  }
  CHECK_THROWS_AS(prime_induced_path(c5, 0, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(prime_induced_path(path_graph(5), 0, 2, 1), InvalidArgument);
}

TEST_CASE("prime induced paths on random prime graphs never complement at the ends") {
  Rng rng(97);
  std::size_t tried = 0;
  while (tried < 400) {
    const std::size_t n = 5 + rng() % 4;
    const Graph g = random_connected_graph(n, 0.5, rng);
    if (!is_prime(g)) continue;
    ++tried;
    const VertexId a = g.id(rng() % n);
    VertexId b = a, c = a;
    while (b == a) b = g.id(rng() % n);
    while (c == a || c == b) c = g.id(rng() % n);
    const VertexMinorScript s = prime_induced_path(g, a, b, c);
    for (const ScriptOp& op : s) {
      CHECK(op.op == OpKind::LocalComplement);
      CHECK(op.a != a);
      CHECK(op.a != b);
    }
    CHECK(induced_path(apply_script(g, s), a, c, b));
  }
}

TEST_CASE("extraction examples") {
  const auto spider = extract_tree(fixture("gamma1").graph, star_graph(3));
  REQUIRE(spider.has_value());
  for (const ScriptOp& op : spider->script) CHECK(op.op == OpKind::Delete);
  CHECK(isomorphic(apply_script(fixture("gamma1").graph, spider->script), star_graph(3)));

  const Graph host = complete_binary_tree(7);
  const auto claw = extract_tree_vertex_minor(host, star_graph(3));
  REQUIRE(claw.has_value());
  CHECK(isomorphic(apply_script(host, *claw), star_graph(3)));

  CHECK_FALSE(extract_tree_vertex_minor(path_graph(10), star_graph(4)).has_value());
  CHECK_THROWS_AS(extract_tree(host, cycle_graph(4)), InvalidArgument);
  CHECK(largelrw_threshold(1, 4) == 480);
}

TEST_CASE("the decomposition pipeline replays on DH hosts") {
  Rng rng(101);
  std::size_t found = 0;
  for (int round = 0; round < 40; ++round) {
    const Graph g = random_dh_graph(40 + rng() % 60, rng);
    const Graph t = random_tree(2 + rng() % 5, rng);
    const auto r = extract_tree_via_decomposition(g, t);
    if (!r) continue;
    ++found;
    CHECK(r->method == "decomposition");
    CHECK(isomorphic(apply_script(g, r->script), t));
  }
  CHECK(found > 10);
}

TEST_CASE("the decomposition pipeline handles prime bags") {
  Rng rng(103);
  std::size_t found = 0;
  for (int round = 0; round < 30; ++round) {
    // A random tree whose vertices are blown up into small prime graphs
    // hanging off each other keeps prime bags in the decomposition.
    Graph g = random_connected_graph(30 + rng() % 20, 0.08, rng);
    const Graph t = random_tree(2 + rng() % 4, rng);
    std::optional<TreeExtraction> r;
    try {
      r = extract_tree_via_decomposition(g, t);
    } catch (const ResourceLimit&) {
      continue;
    }
    if (!r) continue;
    ++found;
    CHECK(isomorphic(apply_script(g, r->script), t));
  }
  MESSAGE("pairs extracted: " << found);
}
