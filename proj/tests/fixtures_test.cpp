#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "limbforge/canon.hpp"
#include "limbforge/io.hpp"
#include "limbforge/obstructions.hpp"
#include "limbforge/split.hpp"

using namespace limbforge;
using nlohmann::json;

namespace {

json load_fixtures() {
  std::ifstream in(LIMBFORGE_FIXTURE_DIR "/dh_obstructions.json");
  REQUIRE(in.good());
  return json::parse(in);
}

Graph from_adjacency(const json& adjacency) {
  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  for (auto& [key, nbrs] : adjacency.items()) {
    const VertexId v = std::stoull(key);
    ids.push_back(v);
    for (VertexId w : nbrs.get<std::vector<VertexId>>()) {
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(ids, edges);
}

}  // namespace

TEST_CASE("fixture adjacency lists are symmetric and match their degree sequences") {
  const json doc = load_fixtures();
  REQUIRE(doc["graphs"].size() == 17);
  for (const auto& rec : doc["graphs"]) {
    CAPTURE(rec["name"].get<std::string>());
    const Graph g = from_adjacency(rec["adjacency"]);
    for (auto& [key, nbrs] : rec["adjacency"].items())
      for (VertexId w : nbrs.get<std::vector<VertexId>>()) CHECK(g.adjacent(std::stoull(key), w));
    std::vector<std::size_t> degrees;
    for (std::size_t i = 0; i < g.size(); ++i) degrees.push_back(g.degree_at(i));
    std::sort(degrees.rbegin(), degrees.rend());
    CHECK(degrees == rec["degree_sequence"].get<std::vector<std::size_t>>());
    CHECK(emit_graph6(g) == rec["graph6"].get<std::string>());
    CHECK(rec["source"].contains("figure"));
    CHECK(rec["source"].contains("layout"));
  }
}

TEST_CASE("fixture files agree with the built-in table") {
  const json doc = load_fixtures();
  for (const auto& rec : doc["graphs"]) {
    const std::string name = rec["name"];
    CAPTURE(name);
    const NamedGraph& f = fixture(name);
    const Graph g = from_adjacency(rec["adjacency"]);
    // Same drawing order; c5 is numbered from 0 in the table.
    CHECK(g.compacted() == f.graph.compacted());
    CHECK(rec.contains("row") == f.row.has_value());
    if (!f.row) continue;
    CHECK(std::string(1, f.row->bag) == rec["row"]["bag"].get<std::string>());
    const auto edges = rec["row"]["edges"].get<std::vector<std::string>>();
    CHECK(std::vector<std::string>(f.row->edges.begin(), f.row->edges.end()) == edges);
    CHECK(matches_bag_row(canonical_decomposition(g), *f.row));
  }
}
