#include "limbforge/obstructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

#include "limbforge/canon.hpp"
#include "limbforge/caps.hpp"
#include "limbforge/dh.hpp"
#include "limbforge/errors.hpp"
#include "limbforge/generators.hpp"
#include "limbforge/io.hpp"
#include "limbforge/limbs.hpp"
#include "limbforge/parallel.hpp"

namespace limbforge {

using nlohmann::json;

std::vector<RootedGraph> rooted_dh_extensions(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) return {RootedGraph{Graph::with_vertices(1), 0}};
  if (!is_connected(g) || !is_distance_hereditary(g))
    throw InvalidArgument("extensions: graph must be connected and distance-hereditary");
  if (n > caps().extension_n || n >= 63)
    throw ResourceLimit("extensions: " + std::to_string(n) + " vertices exceeds the extension cap");
  const VertexId w = g.ids().back() + 1;
  std::map<std::string, RootedGraph> seen;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> nbrs;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) nbrs.push_back(g.id(i));
    Graph h = g.with_vertex(w, nbrs);
    if (!is_distance_hereditary(h)) continue;
    std::string key = rooted_canonical_form(h, w);
    seen.try_emplace(std::move(key), RootedGraph{std::move(h), w});
  }
  std::vector<RootedGraph> out;
  for (auto& [key, r] : seen) out.push_back(std::move(r));
  return out;
}

std::vector<MarkedGraph> one_vertex_dh_extensions(const MarkedGraph& d) {
  std::map<std::string, Graph> seen;
  for (auto& r : rooted_dh_extensions(origin(d))) seen.try_emplace(canonical_form(r.graph), r.graph);
  std::vector<MarkedGraph> out;
  for (auto& [form, g] : seen) out.push_back(canonical_decomposition_dh(g));
  return out;
}

std::string role_name(AttachRole r) {
  switch (r) {
    case AttachRole::Complete: return "complete";
    case AttachRole::Center: return "center";
    case AttachRole::Leaf: return "leaf";
  }
  return "";
}

namespace {

AttachRole role_from_name(const std::string& s) {
  if (s == "complete") return AttachRole::Complete;
  if (s == "center") return AttachRole::Center;
  if (s == "leaf") return AttachRole::Leaf;
  throw ParseError("catalog: unknown role '" + s + "'", 0);
}

// Role of w in the canonical decomposition of h, or nullopt when w's bag has
// fewer than three vertices (the joined bag would be too small).
std::optional<std::string> attach_role_of(const Graph& h, VertexId w) {
  MarkedGraph d = canonical_decomposition_dh(h);
  if (d.bags()[d.bag_of(w)].size() < 3) return std::nullopt;
  return vertex_role(d, w);
}

// The new edge v_i w_i must be neither KK nor S_pS_c.
bool compatible(AttachRole r, const std::string& w_role) {
  switch (r) {
    case AttachRole::Complete: return w_role == "S_p" || w_role == "S_c";
    case AttachRole::Center: return w_role == "K" || w_role == "S_c";
    case AttachRole::Leaf: return w_role == "K" || w_role == "S_p";
  }
  return false;
}

// Prepared candidates of one extension for one role; center gives one per
// neighbour z of w.
std::vector<DeltaPiece> prepare(const Graph& ext, VertexId w, AttachRole r) {
  std::vector<std::pair<Graph, std::optional<VertexId>>> cands;
  switch (r) {
    case AttachRole::Complete: cands.emplace_back(local_complement(ext, w), std::nullopt); break;
    case AttachRole::Center:
      for (VertexId z : ext.neighbors(w)) cands.emplace_back(pivot(ext, w, z), z);
      break;
    case AttachRole::Leaf: cands.emplace_back(ext, std::nullopt); break;
  }
  std::vector<DeltaPiece> out;
  const std::string source = emit_graph6(ext.without(w));
  const std::string extension = emit_graph6(ext);
  for (auto& [h, z] : cands) {
    auto role = attach_role_of(h, w);
    if (!role || !compatible(r, *role)) continue;
    DeltaPiece p;
    p.key = rooted_canonical_form(h, w);
    p.graph = std::move(h);
    p.w = w;
    p.role = r;
    p.z = z;
    p.source = source;
    p.extension = extension;
    out.push_back(std::move(p));
  }
  return out;
}

constexpr std::array<AttachRole, 3> kRoles{AttachRole::Complete, AttachRole::Center, AttachRole::Leaf};

}  // namespace

std::vector<DeltaPiece> delta_pieces(const std::vector<Graph>& family) {
  std::vector<std::vector<RootedGraph>> exts(family.size());
  parallel_for(family.size(), [&](std::size_t i) { exts[i] = rooted_dh_extensions(family[i]); });
  std::vector<std::pair<const Graph*, VertexId>> flat;
  for (auto& e : exts)
    for (auto& r : e) flat.emplace_back(&r.graph, r.root);
  std::vector<std::vector<DeltaPiece>> prepared(flat.size());
  parallel_for(flat.size(), [&](std::size_t i) {
    for (AttachRole r : kRoles)
      for (auto& p : prepare(*flat[i].first, flat[i].second, r)) prepared[i].push_back(std::move(p));
  });
  // First occurrence in family order wins, so provenance is reproducible.
  std::map<std::pair<AttachRole, std::string>, DeltaPiece> seen;
  for (auto& ps : prepared)
    for (auto& p : ps) seen.try_emplace({p.role, p.key}, std::move(p));
  std::vector<DeltaPiece> out;
  for (auto& [k, p] : seen) out.push_back(std::move(p));
  return out;
}

std::optional<DeltaMember> delta_join(const std::array<const DeltaPiece*, 3>& pieces, NewBag bag) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (pieces[i] == nullptr) throw InvalidArgument("delta: missing piece");
    const AttachRole want = bag == NewBag::Complete ? AttachRole::Complete
                            : i == 0                ? AttachRole::Center
                                                    : AttachRole::Leaf;
    if (pieces[i]->role != want)
      throw InvalidArgument("delta: piece " + std::to_string(i) + " has role " + role_name(pieces[i]->role) +
                            ", slot needs " + role_name(want));
  }
  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  std::map<VertexId, VertexId> partner;
  VertexId next_vertex = 0, next_marker = MarkedGraph::kMarkerBase;
  std::array<VertexId, 3> attach{};
  for (std::size_t i = 0; i < 3; ++i) {
    const DeltaPiece& p = *pieces[i];
    MarkedGraph d = canonical_decomposition_dh(p.graph);
    std::map<VertexId, VertexId> rename;
    for (VertexId v : d.unmarked_vertices())
      if (v != p.w) rename[v] = next_vertex++;
    rename[p.w] = attach[i] = next_marker++;
    for (VertexId v : d.marked_vertices()) rename[v] = next_marker++;
    for (auto& [from, to] : rename) ids.push_back(to);
    for (auto [u, v] : d.graph().edges()) edges.emplace_back(rename.at(u), rename.at(v));
    for (auto [u, v] : d.partners()) partner[rename.at(u)] = rename.at(v);
  }
  std::array<VertexId, 3> b{};
  for (std::size_t i = 0; i < 3; ++i) {
    b[i] = next_marker++;
    ids.push_back(b[i]);
    edges.emplace_back(b[i], attach[i]);
    partner[b[i]] = attach[i];
    partner[attach[i]] = b[i];
  }
  edges.emplace_back(b[0], b[1]);
  edges.emplace_back(b[0], b[2]);
  if (bag == NewBag::Complete) edges.emplace_back(b[1], b[2]);
  std::sort(ids.begin(), ids.end());
  MarkedGraph d(Graph::from_edges(ids, edges), std::move(partner), next_marker);
  if (!validate_canonical(d)) return std::nullopt;
  DeltaMember m;
  m.origin = origin(d);
  m.decomposition = std::move(d);
  m.provenance.bag = bag;
  for (std::size_t i = 0; i < 3; ++i) {
    m.provenance.sources[i] = pieces[i]->source;
    m.provenance.extensions[i] = pieces[i]->extension;
    m.provenance.roles[i] = pieces[i]->role;
    m.provenance.z[i] = pieces[i]->z;
  }
  return m;
}

std::vector<DeltaMember> delta_compose(const std::array<RootedGraph, 3>& extensions, NewBag bag,
                                       std::size_t center_slot) {
  if (center_slot > 2) throw InvalidArgument("delta: center slot must be 0, 1 or 2");
  std::array<std::size_t, 3> order{0, 1, 2};
  if (bag == NewBag::Star) std::swap(order[0], order[center_slot]);
  std::array<std::vector<DeltaPiece>, 3> cands;
  for (std::size_t s = 0; s < 3; ++s) {
    const RootedGraph& e = extensions[order[s]];
    if (!e.graph.contains(e.root)) throw InvalidArgument("delta: root is not a vertex of its extension");
    if (!is_connected(e.graph) || !is_distance_hereditary(e.graph))
      throw InvalidArgument("delta: extension must be connected and distance-hereditary");
    const AttachRole r = bag == NewBag::Complete ? AttachRole::Complete
                         : s == 0                ? AttachRole::Center
                                                 : AttachRole::Leaf;
    cands[s] = prepare(e.graph, e.root, r);
  }
  std::map<std::string, DeltaMember> seen;
  for (auto& p0 : cands[0])
    for (auto& p1 : cands[1])
      for (auto& p2 : cands[2])
        if (auto m = delta_join({&p0, &p1, &p2}, bag)) seen.try_emplace(canonical_form(m->origin), std::move(*m));
  std::vector<DeltaMember> out;
  for (auto& [form, m] : seen) out.push_back(std::move(m));
  return out;
}

DeltaFamily::DeltaFamily(std::vector<DeltaPiece> pieces) : pieces_(std::move(pieces)) {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    switch (pieces_[i].role) {
      case AttachRole::Complete: complete_.push_back(i); break;
      case AttachRole::Center: center_.push_back(i); break;
      case AttachRole::Leaf: leaf_.push_back(i); break;
    }
  }
  const std::uint64_t k = complete_.size(), c = center_.size(), l = leaf_.size();
  complete_count_ = k * (k + 1) * (k + 2) / 6;
  star_count_ = c * (l * (l + 1) / 2);
}

std::size_t DeltaFamily::pieces_with(AttachRole r) const {
  switch (r) {
    case AttachRole::Complete: return complete_.size();
    case AttachRole::Center: return center_.size();
    case AttachRole::Leaf: return leaf_.size();
  }
  return 0;
}

namespace {

// i-th pair x <= y over [from, m) in lexicographic order.
std::pair<std::uint64_t, std::uint64_t> unrank_pair(std::uint64_t i, std::uint64_t from, std::uint64_t m) {
  for (std::uint64_t x = from; x < m; ++x) {
    if (i < m - x) return {x, x + i};
    i -= m - x;
  }
  throw InvalidArgument("delta: pair index out of range");
}

}  // namespace

std::optional<DeltaMember> DeltaFamily::member(std::uint64_t i) const {
  if (i >= size()) throw InvalidArgument("delta: member index out of range");
  if (i < complete_count_) {
    const std::uint64_t m = complete_.size();
    for (std::uint64_t x = 0; x < m; ++x) {
      const std::uint64_t block = (m - x) * (m - x + 1) / 2;
      if (i < block) {
        auto [y, z] = unrank_pair(i, x, m);
        return delta_join({&pieces_[complete_[x]], &pieces_[complete_[y]], &pieces_[complete_[z]]},
                          NewBag::Complete);
      }
      i -= block;
    }
  }
  i -= complete_count_;
  const std::uint64_t pairs = leaf_.size() * (leaf_.size() + 1) / 2;
  auto [y, z] = unrank_pair(i % pairs, 0, leaf_.size());
  return delta_join({&pieces_[center_[i / pairs]], &pieces_[leaf_[y]], &pieces_[leaf_[z]]}, NewBag::Star);
}

Certification certify_obstruction(const Graph& origin_graph, std::size_t k) {
  Certification c;
  c.checked = true;
  c.lrw = lrw_dh(origin_graph);
  if (c.lrw != k + 1) {
    c.failed = "lrw";
    return c;
  }
  // Elementary minors repeat up to isomorphism; check each class once.
  std::set<std::string> done;
  for (VertexId v : origin_graph.ids()) {
    for (auto& em : elementary_vertex_minors_with_steps(origin_graph, v)) {
      if (!done.insert(canonical_form(em.graph)).second) continue;
      if (lrw_dh(em.graph) > k) {
        c.failed = "minor";
        c.witness_vertex = v;
        c.witness_script = em.steps;
        return c;
      }
    }
  }
  c.pass = true;
  return c;
}

namespace {

CatalogMember level_zero_member() {
  CatalogMember m;
  m.origin = path_graph(2);
  m.decomposition = MarkedGraph::single_bag(m.origin);
  m.graph6 = emit_graph6(m.origin);
  return m;
}

ObstructionCatalog next_level(const ObstructionCatalog& prev, bool extend, std::size_t sample) {
  if (!prev.complete)
    throw ResourceLimit("catalog: level " + std::to_string(prev.level) +
                        " is a sample; the next level needs the full set");
  std::map<std::string, Graph> family;
  for (auto& m : prev.members) {
    family.try_emplace(canonical_form(m.origin), m.origin);
    if (extend)
      for (auto& r : rooted_dh_extensions(m.origin)) family.try_emplace(canonical_form(r.graph), r.graph);
  }
  std::vector<Graph> graphs;
  for (auto& [form, g] : family) graphs.push_back(g);
  DeltaFamily delta(delta_pieces(graphs));

  ObstructionCatalog next;
  next.family = prev.family;
  next.level = prev.level + 1;
  next.combinations = delta.size();
  next.pieces = {delta.pieces_with(AttachRole::Complete), delta.pieces_with(AttachRole::Center),
                 delta.pieces_with(AttachRole::Leaf)};
  std::vector<std::uint64_t> indices;
  if (delta.size() <= caps().catalog_members) {
    for (std::uint64_t i = 0; i < delta.size(); ++i) indices.push_back(i);
  } else {
    next.complete = false;
    std::mt19937_64 rng(0x6c726b77ULL + next.level);
    std::uniform_int_distribution<std::uint64_t> pick(0, delta.size() - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < std::min<std::uint64_t>(sample, delta.size())) chosen.insert(pick(rng));
    indices.assign(chosen.begin(), chosen.end());
  }
  std::vector<std::optional<DeltaMember>> built(indices.size());
  std::vector<std::string> forms(indices.size());
  parallel_for(indices.size(), [&](std::size_t i) {
    built[i] = delta.member(indices[i]);
    if (built[i]) forms[i] = canonical_form(built[i]->origin);
  });
  std::map<std::string, std::size_t> first;
  for (std::size_t i = 0; i < built.size(); ++i)
    if (built[i]) first.try_emplace(forms[i], i);
  for (auto& [form, i] : first) {
    CatalogMember m;
    m.decomposition = std::move(built[i]->decomposition);
    m.origin = std::move(built[i]->origin);
    m.graph6 = emit_graph6(m.origin);
    m.provenance = std::move(built[i]->provenance);
    next.members.push_back(std::move(m));
  }
  return next;
}

ObstructionCatalog generate(const std::string& family, std::size_t k, std::size_t sample) {
  ObstructionCatalog c;
  c.family = family;
  c.members.push_back(level_zero_member());
  c.combinations = 1;
  for (std::size_t level = 0; level < k; ++level) c = next_level(c, family == "psi", sample);
  return c;
}

}  // namespace

ObstructionCatalog generate_psi(std::size_t k, std::size_t sample) { return generate("psi", k, sample); }
ObstructionCatalog generate_phi(std::size_t k, std::size_t sample) { return generate("phi", k, sample); }

void certify_catalog(ObstructionCatalog& catalog) {
  parallel_for(catalog.members.size(), [&](std::size_t i) {
    catalog.members[i].certification = certify_obstruction(catalog.members[i].origin, catalog.level);
  });
}

namespace {

json provenance_json(const DeltaProvenance& p) {
  json j;
  j["bag"] = p.bag == NewBag::Complete ? "complete" : "star";
  j["sources"] = p.sources;
  j["extensions"] = p.extensions;
  j["roles"] = json::array();
  j["z"] = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    j["roles"].push_back(role_name(p.roles[i]));
    j["z"].push_back(p.z[i] ? json(*p.z[i]) : json(nullptr));
  }
  return j;
}

DeltaProvenance provenance_from(const json& j) {
  DeltaProvenance p;
  const std::string bag = j.at("bag").get<std::string>();
  if (bag != "complete" && bag != "star") throw ParseError("catalog: unknown bag '" + bag + "'", 0);
  p.bag = bag == "complete" ? NewBag::Complete : NewBag::Star;
  for (std::size_t i = 0; i < 3; ++i) {
    p.sources[i] = j.at("sources").at(i).get<std::string>();
    p.extensions[i] = j.at("extensions").at(i).get<std::string>();
    p.roles[i] = role_from_name(j.at("roles").at(i).get<std::string>());
    const json& z = j.at("z").at(i);
    if (!z.is_null()) p.z[i] = z.get<VertexId>();
  }
  return p;
}

json certification_json(const Certification& c) {
  json j;
  j["checked"] = c.checked;
  j["pass"] = c.pass;
  j["lrw"] = c.lrw;
  j["failed"] = c.failed;
  j["witness_vertex"] = c.witness_vertex ? json(*c.witness_vertex) : json(nullptr);
  j["witness_script"] = json::parse(script_to_json(c.witness_script));
  return j;
}

Certification certification_from(const json& j) {
  Certification c;
  c.checked = j.at("checked").get<bool>();
  c.pass = j.at("pass").get<bool>();
  c.lrw = j.at("lrw").get<std::size_t>();
  c.failed = j.at("failed").get<std::string>();
  if (!j.at("witness_vertex").is_null()) c.witness_vertex = j.at("witness_vertex").get<VertexId>();
  c.witness_script = script_from_json(j.at("witness_script").dump());
  return c;
}

}  // namespace

std::string catalog_to_json(const ObstructionCatalog& c) {
  json j;
  j["family"] = c.family;
  j["level"] = c.level;
  j["complete"] = c.complete;
  j["combinations"] = c.combinations;
  j["pieces"] = {{"complete", c.pieces[0]}, {"center", c.pieces[1]}, {"leaf", c.pieces[2]}};
  j["members"] = json::array();
  for (auto& m : c.members) {
    json e;
    e["graph6"] = m.graph6;
    e["decomposition"] = json::parse(marked_to_json(m.decomposition));
    e["provenance"] = m.provenance ? provenance_json(*m.provenance) : json(nullptr);
    e["certification"] = m.certification.checked ? certification_json(m.certification) : json(nullptr);
    j["members"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

ObstructionCatalog catalog_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("catalog: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  ObstructionCatalog c;
  try {
    c.family = j.value("family", std::string("psi"));
    c.level = j.at("level").get<std::size_t>();
    c.complete = j.value("complete", true);
    c.combinations = j.value("combinations", std::uint64_t{0});
    if (j.contains("pieces")) {
      const json& p = j.at("pieces");
      c.pieces = {p.at("complete").get<std::size_t>(), p.at("center").get<std::size_t>(),
                  p.at("leaf").get<std::size_t>()};
    }
    for (const json& e : j.at("members")) {
      CatalogMember m;
      m.graph6 = e.at("graph6").get<std::string>();
      m.decomposition = marked_from_json(e.at("decomposition").dump());
      m.origin = origin(m.decomposition);
      if (!isomorphic(m.origin, parse_graph6(m.graph6)))
        throw InvalidArgument("catalog: member " + m.graph6 + " does not match its decomposition");
      if (e.contains("provenance") && !e.at("provenance").is_null())
        m.provenance = provenance_from(e.at("provenance"));
      if (e.contains("certification") && !e.at("certification").is_null())
        m.certification = certification_from(e.at("certification"));
      c.members.push_back(std::move(m));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("catalog: ") + e.what(), 0);
  }
  return c;
}

MainObsSearch::MainObsSearch(const ObstructionCatalog& catalog, std::size_t max_n) {
  std::vector<Graph> targets;
  for (std::size_t i = 0; i < catalog.members.size(); ++i) {
    if (catalog.members[i].origin.size() > max_n) continue;
    members_.push_back(i);
    targets.push_back(catalog.members[i].origin);
  }
  if (!targets.empty()) targets_.emplace(targets);
}

std::optional<MainObsHit> MainObsSearch::find(const Graph& g) const {
  if (!targets_) return std::nullopt;
  auto hit = find_vertex_minor(g, *targets_);
  if (!hit) return std::nullopt;
  return MainObsHit{members_[hit->target], std::move(hit->script)};
}

std::optional<MainObsHit> check_mainobs(const Graph& g, const ObstructionCatalog& catalog) {
  return MainObsSearch(catalog, g.size()).find(g);
}

namespace {

// Vertices lo..hi as drawn; alpha3 and alpha4 are drawn without a v1.
Graph drawn_from(VertexId lo, VertexId hi, const std::vector<Edge>& edges) {
  std::vector<VertexId> ids;
  for (VertexId v = lo; v <= hi; ++v) ids.push_back(v);
  return Graph::from_edges(ids, edges);
}

Graph drawn(std::size_t n, const std::vector<Edge>& edges) { return drawn_from(1, n, edges); }

std::vector<NamedGraph> make_fixtures() {
  const std::vector<Edge> beta1{{1, 2}, {2, 3}, {3, 5}, {5, 6}, {2, 4}, {4, 5}};
  auto plus = [](std::vector<Edge> base, const std::vector<Edge>& extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
  };
  const std::vector<Edge> beta2 = plus(beta1, {{1, 3}, {1, 4}});
  const std::vector<Edge> beta3 = plus(beta2, {{3, 6}, {4, 6}});
  const std::vector<Edge> gamma1{{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}};
  const std::vector<Edge> gamma2 = plus(gamma1, {{1, 3}});
  const std::vector<Edge> gamma3 = plus(gamma2, {{1, 5}});
  const std::vector<Edge> net{{1, 3}, {3, 4}, {4, 1}, {1, 2}, {3, 5}, {4, 6}};
  auto row = [](char bag, std::string a, std::string b, std::string c) {
    return BagRow{bag, {std::move(a), std::move(b), std::move(c)}};
  };
  std::vector<NamedGraph> f;
  f.push_back({"net", drawn(6, net), row('K', "KS_p", "KS_p", "KS_p"), "triangle with one pendant per corner"});
  f.push_back({"c4_two_pendants", drawn(6, beta1), std::nullopt,
               "C_4 with pendants at two opposite corners; same shape as beta1"});
  f.push_back({"c5", cycle_graph(5), std::nullopt, "cycle on five vertices"});
  f.push_back({"alpha1", drawn(6, net), row('K', "KS_p", "KS_p", "KS_p"), "net"});
  f.push_back({"alpha2", drawn(6, {{1, 2}, {2, 3}, {3, 5}, {5, 6}, {2, 4}, {4, 5}, {2, 5}}),
               row('K', "KS_c", "KS_p", "KS_p"), "diamond 2-3-5-4 with chord 25, pendants 1 at 2 and 6 at 5"});
  f.push_back({"alpha3",
               drawn_from(2, 7, {{2, 3}, {3, 5}, {5, 4}, {4, 2}, {6, 2}, {6, 3}, {6, 4}, {6, 5}, {6, 7}}),
               row('K', "KS_c", "KS_c", "KS_p"), "wheel on C_4 2-3-5-4 with hub 6, pendant 7 at the hub"});
  f.push_back({"alpha4",
               drawn_from(2, 7,
                          {{2, 4}, {4, 5}, {5, 3}, {3, 2}, {6, 2}, {6, 3}, {6, 4}, {6, 5}, {7, 2}, {7, 3}, {7, 4},
                           {7, 5}}),
               row('K', "KS_c", "KS_c", "KS_c"), "octahedron: C_4 plus two vertices adjacent to all of it"});
  f.push_back({"beta1", drawn(6, beta1), row('S', "S_cS_c", "S_pS_p", "S_pS_p"), "C_4 2-3-5-4, pendants 1 and 6"});
  f.push_back({"beta2", drawn(6, beta2), row('S', "S_cS_c", "S_pS_p", "S_pK"), "beta1 plus 13, 14"});
  f.push_back({"beta3", drawn(6, beta3), row('S', "S_cS_c", "S_pK", "S_pK"), "beta2 plus 36, 46"});
  f.push_back({"beta4", drawn(6, plus(beta1, {{3, 4}})), row('S', "S_cK", "S_pS_p", "S_pS_p"), "beta1 plus 34"});
  f.push_back({"beta5", drawn(6, plus(beta2, {{3, 4}})), row('S', "S_cK", "S_pS_p", "S_pK"), "beta2 plus 34"});
  f.push_back({"beta6", drawn(6, plus(beta3, {{3, 4}})), row('S', "S_cK", "S_pK", "S_pK"), "beta3 plus 34"});
  f.push_back({"gamma1", drawn(7, gamma1), row('S', "S_pS_p", "S_pS_p", "S_pS_p"),
               "spider: center 1, legs 1-2-3, 1-4-5, 1-6-7"});
  f.push_back({"gamma2", drawn(7, gamma2), row('S', "S_pK", "S_pS_p", "S_pS_p"), "gamma1 plus 13"});
  f.push_back({"gamma3", drawn(7, gamma3), row('S', "S_pK", "S_pK", "S_pS_p"), "gamma2 plus 15"});
  f.push_back({"gamma4", drawn(7, plus(gamma3, {{1, 7}})), row('S', "S_pK", "S_pK", "S_pK"), "gamma3 plus 17"});
  return f;
}

}  // namespace

const std::vector<NamedGraph>& builtin_fixtures() {
  static const std::vector<NamedGraph> fixtures = make_fixtures();
  return fixtures;
}

const NamedGraph& fixture(const std::string& name) {
  for (auto& f : builtin_fixtures())
    if (f.name == name) return f;
  throw InvalidArgument("unknown fixture '" + name + "'");
}

bool matches_bag_row(const MarkedGraph& d, const BagRow& row) {
  std::vector<std::string> want(row.edges.begin(), row.edges.end());
  std::sort(want.begin(), want.end());
  for (std::size_t b = 0; b < d.bag_count(); ++b) {
    std::vector<std::string> got;
    for (VertexId v : d.bags()[b])
      if (d.is_marked(v)) got.push_back(marked_edge_type(d, v));
    if (got.size() != 3) continue;
    const BagType t = bag_type(d, b);
    const char kind = t.kind == BagKind::Complete ? 'K' : t.kind == BagKind::Star ? 'S' : 'P';
    if (kind != row.bag) continue;
    std::sort(got.begin(), got.end());
    if (got == want) return true;
  }
  return false;
}

}  // namespace limbforge
