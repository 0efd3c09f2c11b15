#include <doctest.h>

#include <set>

#include "limbforge/canon.hpp"
#include "limbforge/dh.hpp"
#include "limbforge/errors.hpp"
#include "limbforge/generators.hpp"
#include "limbforge/io.hpp"
#include "limbforge/limbs.hpp"
#include "limbforge/obstructions.hpp"
#include "limbforge/oracles.hpp"
#include "limbforge/split.hpp"
#include "limbforge/vertexminor.hpp"

using namespace limbforge;

namespace {

const ObstructionCatalog& phi1() {
  static const ObstructionCatalog c = [] {
    ObstructionCatalog x = generate_phi(1);
    certify_catalog(x);
    return x;
  }();
  return c;
}

const ObstructionCatalog& psi1() {
  static const ObstructionCatalog c = generate_psi(1);
  return c;
}

const char* kDhObstructions[] = {"alpha1", "alpha2", "alpha3", "alpha4", "beta1",  "beta2",  "beta3",
                                 "beta4",  "beta5",  "beta6",  "gamma1", "gamma2", "gamma3", "gamma4"};

// Some induced subgraph on 6 or 7 vertices is one of the 14 fixtures.
bool has_fixture_induced(const Graph& g) {
  std::set<std::string> forms;
  for (const char* name : kDhObstructions) forms.insert(canonical_form(fixture(name).graph));
  const std::size_t n = g.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int k = __builtin_popcountll(mask);
    if (k != 6 && k != 7) continue;
    std::vector<VertexId> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) keep.push_back(g.id(i));
    if (forms.count(canonical_form(g.induced(keep)))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("phi at level one has ten certified members") {
  const ObstructionCatalog& c = phi1();
  CHECK(c.members.size() == 10);
  CHECK(c.complete);
  for (const auto& m : c.members) {
    CHECK(m.certification.checked);
    CHECK(m.certification.pass);
    CHECK(m.certification.lrw == 2);
    CHECK(lrw_oracle(m.origin).width == 2);
    CHECK(isomorphic(parse_graph6(m.graph6), m.origin));
  }
}

TEST_CASE("phi at level one is closed under local complementation") {
  std::set<std::string> forms;
  for (const auto& m : phi1().members) forms.insert(canonical_form(m.origin));
  for (const auto& m : phi1().members)
    for (VertexId v : m.decomposition.unmarked_vertices())
      CHECK(forms.count(canonical_form(origin(dec_local_complement(m.decomposition, v)))) == 1);
}

TEST_CASE("every composed member has a new bag of three markers") {
  for (const auto& m : phi1().members) {
    CHECK(validate_canonical(m.decomposition));
    CHECK(origin(m.decomposition) == m.origin);
    bool found = false;
    for (const auto& bag : m.decomposition.bags()) {
      bool all_marked = bag.size() == 3;
      for (VertexId v : bag) all_marked = all_marked && m.decomposition.is_marked(v);
      found = found || all_marked;
    }
    CHECK(found);
  }
}

TEST_CASE("psi at level one") {
  const ObstructionCatalog& c = psi1();
  CHECK(c.members.size() == 660);
  std::set<std::string> forms;
  for (const auto& m : c.members) {
    CHECK(lrw_dh(m.origin) == 2);
    forms.insert(canonical_form(m.origin));
  }
  CHECK(forms.size() == c.members.size());
  // Every phi member is a psi member.
  for (const auto& m : phi1().members) CHECK(forms.count(canonical_form(m.origin)) == 1);
}

TEST_CASE("catalogs round-trip through JSON") {
  const ObstructionCatalog& c = phi1();
  const std::string text = catalog_to_json(c);
  const ObstructionCatalog back = catalog_from_json(text);
  CHECK(back.members.size() == c.members.size());
  CHECK(catalog_to_json(back) == text);
}

TEST_CASE("the DH fixtures have lrw two and match their rows") {
  for (const std::string name : kDhObstructions) {
    CAPTURE(name);
    const NamedGraph& f = fixture(name);
    REQUIRE(f.row.has_value());
    CHECK(lrw_oracle(f.graph).width == 2);
    CHECK(lrw_dh(f.graph) == 2);
    // Minimal as induced subgraphs.
    for (VertexId v : f.graph.ids()) CHECK(lrw_dh(f.graph.without(v)) <= 1);
    CHECK(matches_bag_row(canonical_decomposition(f.graph), *f.row));
  }
  CHECK(isomorphic(fixture("net").graph, fixture("alpha1").graph));
  CHECK(isomorphic(fixture("c4_two_pendants").graph, fixture("beta1").graph));
  CHECK_THROWS_AS(fixture("delta9"), InvalidArgument);
}

TEST_CASE("alpha and beta fixtures are vertex-minor minimal, the gammas are not") {
  for (const std::string name : kDhObstructions) {
    CAPTURE(name);
    const Certification c = certify_obstruction(fixture(name).graph, 1);
    CHECK(c.lrw == 2);
    CHECK(c.pass == (name[0] != 'g'));
    if (!c.pass) {
      // The witness minor keeps lrw two, so it holds a smaller obstruction.
      CHECK(lrw_dh(apply_script(fixture(name).graph, c.witness_script)) == 2);
    }
  }
}

TEST_CASE("rows are specific to their fixture") {
  // gamma1's row does not describe alpha1's decomposition and vice versa.
  CHECK_FALSE(matches_bag_row(canonical_decomposition(fixture("alpha1").graph), *fixture("gamma1").row));
  CHECK_FALSE(matches_bag_row(canonical_decomposition(fixture("gamma1").graph), *fixture("alpha1").row));
}

TEST_CASE("certification rejects narrow and non-minimal graphs") {
  const Certification narrow = certify_obstruction(path_graph(5), 1);
  CHECK_FALSE(narrow.pass);
  CHECK(narrow.failed == "lrw");
  const Graph net_plus = fixture("net").graph.with_vertex(7, {2});
  const Certification fat = certify_obstruction(net_plus, 1);
  CHECK_FALSE(fat.pass);
  CHECK(fat.failed == "minor");
  REQUIRE(fat.witness_vertex.has_value());
  CHECK(lrw_dh(apply_script(net_plus, fat.witness_script)) == 2);
}

TEST_CASE("psi members appear in wide DH graphs") {
  for (const char* name : {"net", "gamma1", "beta3"}) {
    const Graph g = fixture(name).graph;
    const auto hit = check_mainobs(g, psi1());
    REQUIRE(hit.has_value());
    CHECK(isomorphic(apply_script(g, hit->script), psi1().members[hit->member].origin));
  }
}

TEST_CASE("gamma1 is not one of the three vertex-minor obstructions") {
  // It holds the C_4-with-two-pendants graph as a vertex-minor, so the
  // triple {C_5, net, gamma1} would miss graphs such as that one.
  const Graph c4p = fixture("c4_two_pendants").graph;
  CHECK(has_vertex_minor(fixture("gamma1").graph, c4p).has_value());
  CHECK_FALSE(has_vertex_minor(c4p, fixture("gamma1").graph).has_value());
  CHECK_FALSE(has_vertex_minor(c4p, fixture("net").graph).has_value());
  CHECK_FALSE(has_vertex_minor(c4p, cycle_graph(5)).has_value());
  CHECK(lrw_oracle(c4p).width == 2);
}

TEST_CASE("lrw <= 1 iff none of the three vertex-minor obstructions, up to 7 vertices") {
  const std::vector<Graph> obstructions{cycle_graph(5), fixture("net").graph, fixture("c4_two_pendants").graph};
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      bool has = false;
      for (const Graph& h : obstructions) has = has || has_vertex_minor(g, h).has_value();
      CHECK((lrw_oracle(g).width <= 1) == !has);
    }
  }
}

TEST_CASE("a DH graph has lrw <= 1 iff it avoids the 14 fixtures as induced subgraphs") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const Graph& g : all_connected_dh_graphs(n)) CHECK((lrw_dh(g) <= 1) == !has_fixture_induced(g));
}
