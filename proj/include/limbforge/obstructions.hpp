#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "limbforge/graph.hpp"
#include "limbforge/split.hpp"
#include "limbforge/vertexminor.hpp"

namespace limbforge {

struct RootedGraph {
  Graph graph;
  VertexId root;
};

// Connected DH graphs g + w (w = max id + 1), one per isomorphism class of
// the pair (graph, w). Throws ResourceLimit above caps().extension_n.
std::vector<RootedGraph> rooted_dh_extensions(const Graph& g);
// Canonical decompositions of the one-vertex DH-extensions of origin(d),
// deduplicated up to isomorphism of the extended graph.
std::vector<MarkedGraph> one_vertex_dh_extensions(const MarkedGraph& d);

// Role of the new bag's vertex v_i that the piece attaches to.
enum class AttachRole { Complete, Center, Leaf };
std::string role_name(AttachRole r);

// An extension D_i' prepared for one attachment role: D_i'*w_i (complete),
// D_i' pivot w_i z_i (center), D_i' unchanged (leaf). graph is the origin of
// the prepared decomposition; w is unmarked in it.
struct DeltaPiece {
  Graph graph;
  VertexId w = 0;
  AttachRole role = AttachRole::Leaf;
  std::optional<VertexId> z;  // center role only
  std::string source;         // graph6 of D_i's origin
  std::string extension;      // graph6 of D_i' with w last
  std::string key;            // rooted canonical form of (graph, w)
};

// All pieces over a family of origins, deduplicated per role by rooted
// form, dropping pieces whose attaching edge would be KK or S_pS_c. Pieces
// are sorted by (role, key) so enumeration order is reproducible.
std::vector<DeltaPiece> delta_pieces(const std::vector<Graph>& family);

enum class NewBag { Complete, Star };

struct DeltaProvenance {
  NewBag bag = NewBag::Complete;
  std::array<std::string, 3> sources;     // D_i origins, graph6
  std::array<std::string, 3> extensions;  // D_i' origins, graph6
  std::array<AttachRole, 3> roles{};
  std::array<std::optional<VertexId>, 3> z;
};

struct DeltaMember {
  MarkedGraph decomposition;
  Graph origin;
  DeltaProvenance provenance;
};

// Joins three prepared pieces at a new 3-vertex bag (pieces[0] at the center
// for a star). Returns nullopt when the result is not canonical. Throws
// InvalidArgument when a piece's role does not fit its slot.
std::optional<DeltaMember> delta_join(const std::array<const DeltaPiece*, 3>& pieces, NewBag bag);

// Every outcome of the recipe for three extensions (d_i, w_i) and a new bag
// (center_slot picks the star center), over all linked z_i; deduplicated up
// to isomorphism of origins.
std::vector<DeltaMember> delta_compose(const std::array<RootedGraph, 3>& extensions, NewBag bag,
                                       std::size_t center_slot = 0);

// Δ over a family, indexed without materialising: members are multisets of
// three complete-role pieces, then (center piece, multiset of two leaf
// pieces).
class DeltaFamily {
 public:
  explicit DeltaFamily(std::vector<DeltaPiece> pieces);
  std::uint64_t size() const { return complete_count_ + star_count_; }
  std::uint64_t complete_count() const { return complete_count_; }
  std::uint64_t star_count() const { return star_count_; }
  std::size_t pieces_with(AttachRole r) const;
  // Builds member i; nullopt if the join is not canonical.
  std::optional<DeltaMember> member(std::uint64_t i) const;

 private:
  std::vector<DeltaPiece> pieces_;
  std::vector<std::size_t> complete_, center_, leaf_;
  std::uint64_t complete_count_ = 0, star_count_ = 0;
};

struct Certification {
  bool checked = false;
  bool pass = false;
  std::size_t lrw = 0;
  std::string failed;                    // "", "lrw", or "minor"
  std::optional<VertexId> witness_vertex;
  VertexMinorScript witness_script;      // elementary minor that stayed wide
};

// (a) lrw_dh(origin) = k+1; (b) every elementary vertex-minor at every vertex
// has lrw <= k.
Certification certify_obstruction(const Graph& origin_graph, std::size_t k);

struct CatalogMember {
  MarkedGraph decomposition;
  Graph origin;
  std::string graph6;
  std::optional<DeltaProvenance> provenance;  // absent for the level-0 K_2
  Certification certification;
};

struct ObstructionCatalog {
  std::string family;  // "psi" or "phi"
  std::size_t level = 0;
  std::vector<CatalogMember> members;  // sorted by canonical form of origin
  bool complete = true;                // false when members is a sample
  std::uint64_t combinations = 0;      // size of the Δ index at this level
  std::array<std::size_t, 3> pieces{};  // complete, center, leaf
};

// Ψ_0 = Φ_0 = {K_2}; Ψ_{k+1} = Δ(Ψ_k^+), Φ_{k+1} = Δ(Φ_k). Levels whose Δ
// index exceeds caps().catalog_members are returned with complete = false and
// `sample` members drawn with a fixed seed.
ObstructionCatalog generate_psi(std::size_t k, std::size_t sample = 128);
ObstructionCatalog generate_phi(std::size_t k, std::size_t sample = 128);

void certify_catalog(ObstructionCatalog& catalog);

std::string catalog_to_json(const ObstructionCatalog& c);
ObstructionCatalog catalog_from_json(const std::string& text);

struct MainObsHit {
  std::size_t member;  // index into catalog.members
  VertexMinorScript script;
};

// Catalog members with at most max_n vertices as vertex-minor targets; the
// target orbits are built once and shared by every search.
class MainObsSearch {
 public:
  MainObsSearch(const ObstructionCatalog& catalog, std::size_t max_n);
  std::optional<MainObsHit> find(const Graph& g) const;
  std::size_t target_count() const { return members_.size(); }

 private:
  std::vector<std::size_t> members_;
  std::optional<VertexMinorTargets> targets_;
};

// Some catalog member as a vertex-minor of g, with a replayable script.
std::optional<MainObsHit> check_mainobs(const Graph& g, const ObstructionCatalog& catalog);

// Central bag type and the three marked-edge types leaving it, central side
// first.
struct BagRow {
  char bag;  // 'K' or 'S'
  std::array<std::string, 3> edges;
};

struct NamedGraph {
  std::string name;
  Graph graph;                // vertices 1..n as drawn
  std::optional<BagRow> row;  // the 14 DH obstructions carry their row
  std::string description;
};

// net (= alpha1), c4_two_pendants (same shape as beta1), c5, alpha2..alpha4,
// beta1..beta6, gamma1..gamma4.
const std::vector<NamedGraph>& builtin_fixtures();
// Throws InvalidArgument for an unknown name.
const NamedGraph& fixture(const std::string& name);

// Some bag with exactly three marked vertices has the row's type and its
// marked-edge types equal the row as a multiset.
bool matches_bag_row(const MarkedGraph& d, const BagRow& row);

}  // namespace limbforge
