#include <doctest.h>

#include "limbforge/canon.hpp"
#include "limbforge/errors.hpp"
#include "limbforge/generators.hpp"
#include "limbforge/obstructions.hpp"
#include "limbforge/vertexminor.hpp"

using namespace limbforge;

TEST_CASE("scripts replay and round-trip through JSON") {
  const VertexMinorScript s{lc_op(1), pivot_op(2, 3), delete_op(0)};
  CHECK(script_from_json(script_to_json(s)) == s);
  const Graph g = path_graph(5);
  const Graph h = apply_script(g, s);
  CHECK(h == pivot(local_complement(g, 1), 2, 3).without(0));
  CHECK_THROWS_AS(apply_script(g, {pivot_op(0, 2)}), InvalidArgument);
  CHECK_THROWS_AS(apply_script(g, {delete_op(9)}), InvalidArgument);
  CHECK_THROWS_AS(script_from_json("[{\"op\":\"twist\",\"args\":[1]}]"), ParseError);
}

TEST_CASE("elementary vertex-minors: deletion, complement-then-delete, one pivot per neighbour") {
  const Graph g = cycle_graph(5);
  const auto minors = elementary_vertex_minors(g, 0);
  CHECK(minors.size() == 2 + g.degree(0));
  CHECK(minors[1] == local_complement(g, 0).without(0));
  CHECK(minors[0] == g.without(0));
  for (const auto& em : elementary_vertex_minors_with_steps(g, 0)) CHECK(apply_script(g, em.steps) == em.graph);
}

TEST_CASE("local equivalence classes") {
  // Every star is locally equivalent to the complete graph of the same size.
  CHECK(locally_equivalent(star_graph(4), complete_graph(5)));
  // Up to isomorphism: the triangle and the path.
  CHECK(lc_orbit(complete_graph(3)).size() == 2);
}

TEST_CASE("vertex-minor search returns replayable scripts") {
  const Graph c5 = cycle_graph(5);
  const auto hit = has_vertex_minor(c5, path_graph(4));
  REQUIRE(hit.has_value());
  CHECK(isomorphic(apply_script(c5, *hit), path_graph(4)));
  CHECK_FALSE(has_vertex_minor(path_graph(7), c5).has_value());
  const Graph net = fixture("net").graph;
  CHECK_FALSE(has_vertex_minor(net, c5).has_value());
  const auto spider = has_vertex_minor(fixture("gamma2").graph, fixture("gamma1").graph);
  CHECK(spider.has_value() == locally_equivalent(fixture("gamma2").graph, fixture("gamma1").graph));
}
