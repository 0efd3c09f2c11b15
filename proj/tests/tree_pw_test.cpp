#include <doctest.h>

#include "limbforge/errors.hpp"
#include "limbforge/generators.hpp"
#include "limbforge/oracles.hpp"
#include "limbforge/tree_pw.hpp"

using namespace limbforge;

TEST_CASE("path-width of named trees") {
  CHECK(tree_pathwidth(Graph::with_vertices(1)) == 0);
  CHECK(tree_pathwidth(path_graph(10)) == 1);
  CHECK(tree_pathwidth(star_graph(7)) == 1);
  // A spider with three legs of length 2 needs width 2.
  CHECK(tree_pathwidth(Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})) == 2);
  for (std::size_t h = 1; h <= 7; ++h) CHECK(tree_pathwidth(complete_binary_tree(h)) == (h + 1) / 2);
}

TEST_CASE("tree path-width agrees with the brute force on every tree up to 9 vertices") {
  std::size_t trees = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      if (!is_tree(g)) continue;
      ++trees;
      CHECK(tree_pathwidth(g) == pathwidth_brute(g));
    }
  }
  Rng rng(73);
  for (int round = 0; round < 300; ++round) {
    const Graph t = random_tree(9, rng);
    CHECK(tree_pathwidth(t) == pathwidth_brute(t));
  }
  CHECK(trees == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23);
}

TEST_CASE("forests take the maximum over components") {
  Graph f = Graph::from_edges(9, {{0, 1}, {1, 2}, {3, 4}, {3, 5}, {3, 6}, {4, 7}, {5, 8}});
  CHECK(tree_pathwidth(f) == pathwidth_brute(f));
}

TEST_CASE("path decompositions are valid and tight") {
  Rng rng(79);
  for (int round = 0; round < 200; ++round) {
    const Graph t = random_tree(1 + rng() % 60, rng);
    const PathDecomposition pd = tree_path_decomposition(t);
    CHECK(is_path_decomposition(t, pd));
    CHECK(pd.width == tree_pathwidth(t));
    std::size_t largest = 0;
    for (const auto& bag : pd.bags) largest = std::max(largest, bag.size());
    CHECK(largest == pd.width + 1);
  }
}

TEST_CASE("non-forests are rejected") {
  CHECK_THROWS_AS(tree_pathwidth(cycle_graph(4)), InvalidArgument);
}
