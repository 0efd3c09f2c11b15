#include <doctest.h>

#include "limbforge/dh.hpp"
#include "limbforge/errors.hpp"
#include "limbforge/generators.hpp"
#include "limbforge/limbs.hpp"
#include "limbforge/obstructions.hpp"
#include "limbforge/oracles.hpp"
#include "limbforge/split.hpp"
#include "limbforge/tree_pw.hpp"

using namespace limbforge;

TEST_CASE("lrw of small named graphs") {
  for (std::size_t n = 2; n <= 12; ++n) CHECK(lrw_dh(complete_graph(n)) == 1);
  CHECK(lrw_dh(path_graph(7)) == 1);
  CHECK(lrw_dh(star_graph(6)) == 1);
  CHECK(lrw_dh(fixture("net").graph) == 2);
  CHECK(lrw_dh(fixture("gamma1").graph) == 2);
  CHECK(lrw_oracle(cycle_graph(5)).width == 2);
  CHECK(lrw_dh(Graph::with_vertices(3)) == 0);
  CHECK_THROWS_AS(lrw_dh(cycle_graph(5)), UnsupportedInput);
}

TEST_CASE("complete binary trees of odd height") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Graph t = complete_binary_tree(2 * n + 1);
    CHECK(lrw_dh(t) == n + 1);
    CHECK(tree_pathwidth(decomposition_tree(canonical_decomposition(t)).as_graph()) == n);
  }
}

TEST_CASE("lrw_dh agrees with the oracle and its layout is certified") {
  Rng rng(53);
  for (int round = 0; round < 150; ++round) {
    const Graph g = random_dh_graph(2 + rng() % 9, rng);
    const std::size_t w = lrw_dh(g);
    CHECK(w == lrw_oracle(g).width);
    CHECK(w == lrw_dh_by_limbs(g));
    const LinearLayout l = lrw_layout_dh(g);
    CHECK(l.order.size() == g.size());
    CHECK(layout_width(g, l.order) == w);
  }
}

TEST_CASE("disconnected inputs take the maximum over components") {
  Graph g = Graph::from_edges(std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6},
                              {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}});
  const LrwDhReport r = lrw_dh_report(g);
  CHECK(r.lrw == 1);
  CHECK(r.components.size() == 2);
}

TEST_CASE("f values satisfy the bag condition at the computed width only") {
  Rng rng(59);
  for (int round = 0; round < 60; ++round) {
    const Graph g = random_dh_graph(4 + rng() % 12, rng);
    const MarkedGraph d = canonical_decomposition(g);
    const auto f = f_table(d);
    const std::size_t k = lrw_from_f_table(d, f);
    CHECK(k == lrw_dh(g));
    CHECK(satisfies_bag_condition(d, f, k));
    if (k > 0) CHECK_FALSE(satisfies_bag_condition(d, f, k - 1));
  }
}

TEST_CASE("path-width of the decomposition tree brackets lrw") {
  Rng rng(61);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_dh_graph(3 + rng() % 30, rng);
    const MarkedGraph d = canonical_decomposition(g);
    const std::size_t pw = tree_pathwidth(decomposition_tree(d).as_graph());
    const std::size_t w = lrw_dh(g);
    CHECK(pw <= 2 * w);
    CHECK(w <= pw + 1);
    const auto [layouts, p] = default_bag_layouts(d);
    const ComposedLayout c = compose_layout(d, layouts, p);
    CHECK(c.bound == 2 * (p + 2) * (pw + 1));
    CHECK(layout_width(g, c.layout.order) <= c.bound);
    CHECK(c.layout.width == layout_width(g, c.layout.order));
  }
}

TEST_CASE("lrw <= 1 recognition agrees with the oracle on all graphs up to 6 vertices") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : all_connected_graphs(n)) CHECK(is_lrw_le_1(g) == (lrw_oracle(g).width <= 1));
}

TEST_CASE("distance-hereditary recognition agrees with the distance test") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Graph& g : all_connected_graphs(n)) CHECK(is_distance_hereditary(g) == is_dh_by_distances(g));
  Rng rng(67);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_dh_graph(5 + rng() % 12, rng);
    CHECK(is_distance_hereditary(g));
    CHECK(is_dh_by_distances(g));
    CHECK(is_distance_hereditary(random_dh_graph(100 + rng() % 400, rng)));
  }
}

TEST_CASE("caterpillars with twins have lrw at most one") {
  Rng rng(71);
  const AdjList adj = caterpillar_with_twins(2000, rng);
  CHECK(adj.size() == 2000);
  CHECK(is_lrw_le_1(adj));
}

TEST_CASE("the oracle respects its cap") {
  CHECK_THROWS_AS(lrw_oracle(path_graph(40)), ResourceLimit);
}
