#include <doctest.h>

#include <random>

#include "limbforge/caps.hpp"
#include "limbforge/errors.hpp"
#include "limbforge/generators.hpp"
#include "limbforge/graph.hpp"
#include "limbforge/simd.hpp"
#include "support.hpp"

using namespace limbforge;
using limbforge::testing::naive_cut_rank;
using limbforge::testing::subset;

TEST_CASE("graph basics keep ids sorted and adjacency symmetric") {
  Graph g = Graph::from_edges(std::vector<VertexId>{9, 3, 5}, {{9, 3}, {3, 5}});
  CHECK(g.ids() == std::vector<VertexId>{3, 5, 9});
  CHECK(g.adjacent(3, 9));
  CHECK(g.adjacent(9, 3));
  CHECK_FALSE(g.adjacent(5, 9));
  CHECK(g.degree(3) == 2);
  CHECK(g.edges() == std::vector<Edge>{{3, 5}, {3, 9}});
  CHECK_THROWS_AS(g.index(4), InvalidArgument);
  CHECK(g.without(3).edge_count() == 0);
  CHECK(g.with_vertex(1, {5, 9}).edge_count() == 4);
}

TEST_CASE("cut-rank matches a dense elimination and is symmetric") {
  Rng rng(11);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + rng() % 9;
    const Graph g = random_graph(n, 0.5, rng);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += 1 + rng() % 5) {
      const auto x = subset(g, mask);
      const auto y = subset(g, ~mask & ((std::uint64_t{1} << n) - 1));
      const std::size_t r = cut_rank(g, x);
      CHECK(r == naive_cut_rank(g, x));
      CHECK(r == cut_rank(g, y));
    }
  }
}

TEST_CASE("cut-rank over more than one word") {
  Rng rng(5);
  const Graph g = random_graph(150, 0.3, rng);
  std::vector<VertexId> x;
  for (VertexId v : g.ids())
    if (v % 3 == 0) x.push_back(v);
  CHECK(cut_rank(g, x) == naive_cut_rank(g, x));
}

TEST_CASE("local complementation preserves every cut-rank") {
  Rng rng(3);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 3 + rng() % 7;
    const Graph g = random_graph(n, 0.5, rng);
    const VertexId v = g.id(rng() % n);
    const Graph h = local_complement(g, v);
    CHECK(local_complement(h, v) == g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      CHECK(cut_rank(g, subset(g, mask)) == cut_rank(h, subset(h, mask)));
  }
}

TEST_CASE("local complementation toggles exactly the neighbourhood") {
  const Graph g = path_graph(4);  // 0-1-2-3
  const Graph h = local_complement(g, 1);
  CHECK(h.adjacent(0, 2));
  CHECK(h.adjacent(0, 1));
  CHECK(h.edge_count() == 4);
}

TEST_CASE("pivot equals three local complementations and the explicit rule") {
  Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + rng() % 8;
    const Graph g = random_graph(n, 0.5, rng);
    const auto es = g.edges();
    if (es.empty()) continue;
    const auto [x, y] = es[rng() % es.size()];
    const Graph p = pivot(g, x, y);
    CHECK(p == pivot_by_local_complements(g, x, y));
    CHECK(p == local_complement(local_complement(local_complement(g, x), y), x));
    CHECK(p == pivot(g, y, x));
    // Toggle pairs across the three classes of N(x) and N(y), then swap x, y.
    Graph q = g;
    auto cls = [&](VertexId w) {
      const bool ax = w != y && g.adjacent(w, x), ay = w != x && g.adjacent(w, y);
      return ax && ay ? 0 : ax ? 1 : ay ? 2 : 3;
    };
    for (VertexId u : g.ids())
      for (VertexId w : g.ids()) {
        if (u >= w || u == x || u == y || w == x || w == y) continue;
        const int a = cls(u), b = cls(w);
        if (a != 3 && b != 3 && a != b) q.toggle_adj(q.index(u), q.index(w));
      }
    Graph swapped = q.relabeled([&](VertexId v) { return v == x ? y : v == y ? x : v; });
    CHECK(p == swapped);
  }
}

TEST_CASE("pivot keeps cut-ranks") {
  const Graph g = cycle_graph(6);
  const Graph p = pivot(g, 0, 1);
  for (std::uint64_t mask = 0; mask < 64; ++mask) CHECK(cut_rank(g, subset(g, mask)) == cut_rank(p, subset(p, mask)));
}

TEST_CASE("layout width of a path is one") {
  const Graph g = path_graph(6);
  CHECK(layout_width(g, g.ids()) == 1);
  CHECK(layout_width(complete_graph(5), complete_graph(5).ids()) == 1);
  CHECK(layout_width(Graph::with_vertices(3), {0, 1, 2}) == 0);
}

TEST_CASE("components, forests and trees") {
  Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}});
  CHECK(components(g).size() == 3);
  CHECK(is_forest(g));
  CHECK_FALSE(is_tree(g));
  CHECK(is_tree(path_graph(5)));
  CHECK_FALSE(is_forest(cycle_graph(4)));
}

TEST_CASE("scalar and AVX2 kernels agree") {
  const auto* fast = simd::avx2_kernels();
  if (fast == nullptr) {
    MESSAGE("AVX2 not available; only the scalar kernels are exercised");
    return;
  }
  const auto& slow = simd::scalar_kernels();
  Rng rng(13);
  for (std::size_t words : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u}) {
    std::vector<std::uint64_t> a(words), b(words);
    for (auto& w : a) w = rng();
    for (auto& w : b) w = rng() & rng();
    CHECK(slow.popcount(a.data(), words) == fast->popcount(a.data(), words));
    CHECK(slow.and_popcount(a.data(), b.data(), words) == fast->and_popcount(a.data(), b.data(), words));
    CHECK(slow.any(b.data(), words) == fast->any(b.data(), words));
    std::vector<std::uint64_t> zero(words);
    CHECK(slow.any(zero.data(), words) == fast->any(zero.data(), words));
    auto x1 = a, x2 = a;
    slow.xor_into(x1.data(), b.data(), words);
    fast->xor_into(x2.data(), b.data(), words);
    CHECK(x1 == x2);
    std::vector<std::uint64_t> y1(words), y2(words);
    slow.and_into(y1.data(), a.data(), b.data(), words);
    fast->and_into(y2.data(), a.data(), b.data(), words);
    CHECK(y1 == y2);
  }
}

TEST_CASE("gf2 rank of known matrices") {
  std::vector<std::uint64_t> rows{0b011, 0b110, 0b101};
  CHECK(gf2_rank(rows, 3, 1) == 2);
  std::vector<std::uint64_t> id{1, 2, 4, 8};
  CHECK(gf2_rank(id, 4, 1) == 4);
}

TEST_CASE("caps parsing") {
  const Caps c = parse_caps("oracle=14,orbit=10");
  CHECK(c.oracle_n == 14);
  CHECK(c.orbit_n == 10);
  CHECK(c.vm_states == Caps{}.vm_states);
  CHECK_THROWS_AS(parse_caps("bogus=1"), InvalidArgument);
  CHECK_THROWS_AS(parse_caps("oracle=x"), InvalidArgument);
}
