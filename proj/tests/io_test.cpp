#include <doctest.h>

#include <string>

#include "limbforge/errors.hpp"
#include "limbforge/generators.hpp"
#include "limbforge/io.hpp"

using namespace limbforge;

namespace {

// Reference graph6 encoder for n <= 62, written from the format description.
std::string reference_graph6(const Graph& g) {
  std::string out(1, static_cast<char>(63 + g.size()));
  std::vector<int> bits;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) bits.push_back(g.adj(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) v = v << 1 | bits[k + t];
    out.push_back(static_cast<char>(63 + v));
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 small literals") {
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.size() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(emit_graph6(k2) == "A_");
  const Graph p3 = parse_graph6("Bg");
  CHECK(p3.size() == 3);
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(emit_graph6(path_graph(4)) == "Ch");
  CHECK(emit_graph6(cycle_graph(5)) == "Dhc");
  CHECK(parse_graph6(">>graph6<<Bg\n") == p3);
}

TEST_CASE("graph6 agrees with the reference encoder and round-trips") {
  Rng rng(17);
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 1 + rng() % 20;
    const Graph g = random_graph(n, 0.4, rng);
    const std::string text = emit_graph6(g);
    CHECK(text == reference_graph6(g));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("graph6 beyond 62 vertices") {
  Rng rng(2);
  const Graph g = random_graph(100, 0.1, rng);
  const std::string text = emit_graph6(g);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == g);
}

TEST_CASE("json graphs round-trip") {
  Rng rng(19);
  for (int round = 0; round < 1000; ++round) {
    const Graph g = random_graph(1 + rng() % 20, 0.4, rng);
    CHECK(parse_graph_json(emit_graph_json(g)) == g);
  }
  const Graph relabeled = Graph::from_edges(std::vector<VertexId>{4, 10, 7}, {{4, 7}});
  // Ids are positional in JSON.
  CHECK(parse_graph_json(emit_graph_json(relabeled)) == relabeled.compacted());
}

TEST_CASE("format detection") {
  CHECK(parse_graph("Bg") == parse_graph6("Bg"));
  const Graph g = path_graph(3);
  CHECK(parse_graph(emit_graph_json(g)) == g);
  CHECK(parse_format_name("graph6") == GraphFormat::Graph6);
  CHECK(parse_format_name("json") == GraphFormat::Json);
  CHECK_THROWS_AS(parse_format_name("dimacs"), InvalidArgument);
}

TEST_CASE("malformed input reports the byte offset") {
  try {
    parse_graph6("Ch!");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);      // too short
  CHECK_THROWS_AS(parse_graph6("ChAA"), ParseError);   // too long
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);     // padding bits set
  CHECK_THROWS_AS(parse_graph_json("{\"n\": 2, \"edges\": [[0, 5]]}"), ParseError);
  CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
}
