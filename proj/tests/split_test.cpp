#include <doctest.h>

#include <algorithm>

#include "limbforge/canon.hpp"
#include "limbforge/dh.hpp"
#include "limbforge/errors.hpp"
#include "limbforge/generators.hpp"
#include "limbforge/obstructions.hpp"
#include "limbforge/oracles.hpp"
#include "limbforge/split.hpp"

using namespace limbforge;

namespace {

bool all_bags_star_or_complete(const MarkedGraph& d) {
  for (std::size_t b = 0; b < d.bag_count(); ++b)
    if (bag_type(d, b).kind == BagKind::Prime) return false;
  return true;
}

bool is_s_decomposition(const MarkedGraph& d) {
  for (std::size_t b = 0; b < d.bag_count(); ++b) {
    const BagType t = bag_type(d, b);
    if (d.bag_graph(b).size() == 2) continue;
    if (t.kind != BagKind::Star || d.is_marked(t.center)) return false;
  }
  return true;
}

Graph random_input(Rng& rng, std::size_t max_n) {
  const std::size_t n = 3 + rng() % (max_n - 2);
  switch (rng() % 3) {
    case 0: return random_dh_graph(n, rng);
    case 1: return random_tree(n, rng);
    default: return random_connected_graph(n, 0.35, rng);
  }
}

}  // namespace

TEST_CASE("net decomposes into a triangle bag and three pendant stars") {
  const Graph net = fixture("net").graph;
  const MarkedGraph d = canonical_decomposition(net);
  CHECK(d.bag_count() == 4);
  CHECK(d.marked_edges().size() == 3);
  CHECK(origin(d) == net);
  CHECK(validate_canonical(d));
  std::size_t complete = 0;
  for (std::size_t b = 0; b < d.bag_count(); ++b) complete += bag_type(d, b).kind == BagKind::Complete;
  CHECK(complete == 1);
}

TEST_CASE("prime graphs stay in one bag") {
  const Graph c5 = cycle_graph(5);
  CHECK(is_prime(c5));
  const MarkedGraph d = canonical_decomposition(c5);
  CHECK(d.bag_count() == 1);
  CHECK(bag_type(d, 0).kind == BagKind::Prime);
}

TEST_CASE("small bag classification") {
  const MarkedGraph k3 = canonical_decomposition(complete_graph(3));
  CHECK(k3.bag_count() == 1);
  CHECK(bag_type(k3, 0).kind == BagKind::Complete);
  const MarkedGraph p3 = canonical_decomposition(path_graph(3));
  CHECK(bag_type(p3, 0).kind == BagKind::Star);
  CHECK(bag_type(p3, 0).center == 1);
  CHECK(bag_type(canonical_decomposition(complete_graph(2)), 0).kind == BagKind::Complete);
}

TEST_CASE("split detection agrees with exhaustive cut-rank search") {
  for (std::size_t n = 4; n <= 7; ++n)
    for (const Graph& g : all_connected_graphs(n)) CHECK(is_prime(g) == !has_split_brute(g));
}

TEST_CASE("canonical decompositions: round trip, canonicity and characterisations") {
  Rng rng(23);
  for (int round = 0; round < 300; ++round) {
    const Graph g = random_input(rng, 11);
    const MarkedGraph d = canonical_decomposition(g);
    CHECK(origin(d) == g);
    CHECK(validate_canonical(d));
    for (std::size_t b = 0; b < d.bag_count(); ++b)
      if (bag_type(d, b).kind == BagKind::Prime) CHECK(d.bag_graph(b).size() >= 5);
    CHECK(all_bags_star_or_complete(d) == is_dh_by_distances(g));
    CHECK(is_s_decomposition(d) == is_tree(g));
    CHECK(decomposition_tree(d).as_graph().size() == d.bag_count());
    CHECK(is_tree(decomposition_tree(d).as_graph()));
    const Graph h = random_relabel(g, rng);
    CHECK(marked_isomorphic(d, canonical_decomposition(h)));
  }
}

TEST_CASE("the DH fast path and the general path agree") {
  Rng rng(29);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_dh_graph(3 + rng() % 15, rng);
    CHECK(marked_isomorphic(canonical_decomposition_dh(g), canonical_decomposition_general(g)));
  }
}

TEST_CASE("decomposition local complementation commutes with origin") {
  Rng rng(31);
  for (int round = 0; round < 200; ++round) {
    const Graph g = random_input(rng, 10);
    const MarkedGraph d = canonical_decomposition(g);
    const VertexId x = g.id(rng() % g.size());
    const MarkedGraph e = dec_local_complement(d, x);
    CHECK(origin(e) == local_complement(g, x));
    CHECK(validate_canonical(e));
    CHECK(decomposition_tree(e).as_graph() == decomposition_tree(d).as_graph());
  }
}

TEST_CASE("decomposition pivot commutes with origin") {
  Rng rng(37);
  for (int round = 0; round < 200; ++round) {
    const Graph g = random_input(rng, 10);
    const auto es = g.edges();
    if (es.empty()) continue;
    const auto [x, y] = es[rng() % es.size()];
    const MarkedGraph d = canonical_decomposition(g);
    const MarkedGraph e = dec_pivot(d, x, y);
    CHECK(origin(e) == pivot(g, x, y));
    CHECK(e == dec_pivot_by_local_complements(d, x, y));
  }
}

TEST_CASE("recomposing every marked edge in any order gives the origin") {
  Rng rng(41);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_input(rng, 10);
    const MarkedGraph d = canonical_decomposition(g);
    std::vector<VertexId> order;
    for (auto [u, v] : d.marked_edges()) order.push_back(rng() % 2 ? u : v);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(origin_by_recomposition(d, order) == g);
  }
}

TEST_CASE("representatives are the unmarked vertices reached through a marker") {
  const Graph net = fixture("net").graph;
  const MarkedGraph d = canonical_decomposition(net);
  for (auto [u, v] : d.marked_edges()) {
    // Every representative of u is adjacent in the origin to every representative of v.
    for (VertexId a : representatives(d, u))
      for (VertexId b : representatives(d, v)) CHECK(net.adjacent(a, b));
    CHECK_FALSE(representatives(d, u).empty());
  }
  for (VertexId x : d.unmarked_vertices()) CHECK(representatives(d, x) == std::vector<VertexId>{x});
}

TEST_CASE("marked graphs round-trip through JSON and render to DOT") {
  Rng rng(43);
  for (int round = 0; round < 50; ++round) {
    const MarkedGraph d = canonical_decomposition(random_input(rng, 10));
    CHECK(marked_from_json(marked_to_json(d)) == d);
  }
  const std::string dot = marked_to_dot(canonical_decomposition(fixture("net").graph));
  CHECK(dot.find("dashed") != std::string::npos);
  CHECK(dot.find("cluster") != std::string::npos);
}

TEST_CASE("illegal marked graphs are rejected") {
  // A marked edge that is not a cut edge.
  const Graph tri = complete_graph(3);
  CHECK_THROWS_AS(MarkedGraph(tri, {{0, 1}, {1, 0}}).check(), InvalidArgument);
}
