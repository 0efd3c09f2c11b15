#include "limbforge/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>

#include <json.hpp>

#include "limbforge/canon.hpp"
#include "limbforge/dh.hpp"
#include "limbforge/errors.hpp"
#include "limbforge/extract.hpp"
#include "limbforge/generators.hpp"
#include "limbforge/io.hpp"
#include "limbforge/limbs.hpp"
#include "limbforge/obstructions.hpp"
#include "limbforge/oracles.hpp"
#include "limbforge/parallel.hpp"
#include "limbforge/split.hpp"
#include "limbforge/tree_pw.hpp"

namespace limbforge {

namespace {

constexpr std::size_t kMaxListed = 8;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Per-index failure slots so the listed failures do not depend on scheduling.
struct Failures {
  explicit Failures(std::size_t n) : slot(n) {}
  std::vector<std::string> slot;
  void merge_into(SweepReport& r) const {
    for (const auto& s : slot)
      if (!s.empty()) r.fail(s);
  }
};

std::size_t tree_pw_of_decomposition(const MarkedGraph& d) {
  return tree_pathwidth(decomposition_tree(d).as_graph());
}

// Every bag a star whose center is unmarked.
bool is_s_decomposition(const MarkedGraph& d) {
  for (std::size_t b = 0; b < d.bag_count(); ++b) {
    const BagType t = bag_type(d, b);
    if (t.kind != BagKind::Star || d.is_marked(t.center)) return false;
  }
  return true;
}

bool all_bags_k_or_s(const MarkedGraph& d) {
  for (std::size_t b = 0; b < d.bag_count(); ++b)
    if (bag_type(d, b).kind == BagKind::Prime) return false;
  return true;
}

}  // namespace

void SweepReport::fail(const std::string& what) {
  pass = false;
  ++metrics["failures"];
  if (failures.size() < kMaxListed) failures.push_back(what);
}

std::string report_to_json(const SweepReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["metrics"] = r.metrics;
  j["failures"] = r.failures;
  return j.dump();
}

SweepReport sweep_oracle_equivalence(std::size_t max_n) {
  Stopwatch clock;
  SweepReport r;
  r.name = "oracle-equivalence";
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto graphs = all_connected_dh_graphs(n);
    Failures bad(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) {
      const std::size_t fast = lrw_dh(graphs[i]), slow = lrw_oracle(graphs[i]).width;
      if (fast != slow)
        bad.slot[i] = emit_graph6(graphs[i]) + ": lrw_dh " + std::to_string(fast) + " oracle " + std::to_string(slow);
    });
    bad.merge_into(r);
    r.metrics["graphs"] += graphs.size();
    r.metrics["graphs_n" + std::to_string(n)] = graphs.size();
  }
  r.seconds = clock.seconds();
  return r;
}

SweepReport sweep_lrw1_recognition(std::size_t max_n, std::size_t caterpillar_n, double time_limit,
                                   std::uint64_t seed) {
  Stopwatch clock;
  SweepReport r;
  r.name = "lrw1-recognition";
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto graphs = all_connected_graphs(n);
    Failures bad(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) {
      const bool fast = is_lrw_le_1(graphs[i]), slow = lrw_oracle(graphs[i]).width <= 1;
      if (fast != slow) bad.slot[i] = emit_graph6(graphs[i]) + ": recognizer disagrees with oracle";
    });
    bad.merge_into(r);
    r.metrics["graphs"] += graphs.size();
  }
  if (caterpillar_n > 0) {
    Rng rng(seed);
    const AdjList big = caterpillar_with_twins(caterpillar_n, rng);
    Stopwatch big_clock;
    const bool ok = is_lrw_le_1(big);
    const double t = big_clock.seconds();
    r.metrics["caterpillar_vertices"] = big.size();
    r.metrics["caterpillar_ms"] = static_cast<std::uint64_t>(t * 1000);
    if (!ok) r.fail("caterpillar not recognized as lrw <= 1");
    if (t > time_limit) r.fail("caterpillar recognition took " + std::to_string(t) + " s");
  }
  r.seconds = clock.seconds();
  return r;
}

SweepReport sweep_named_values() {
  Stopwatch clock;
  SweepReport r;
  r.name = "named-values";
  auto expect = [&](const std::string& what, std::size_t got, std::size_t want) {
    ++r.metrics["checks"];
    if (got != want) r.fail(what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
  };
  for (std::size_t n = 2; n <= 12; ++n) {
    expect("lrw_dh(K_" + std::to_string(n) + ")", lrw_dh(complete_graph(n)), 1);
    expect("oracle(K_" + std::to_string(n) + ")", lrw_oracle(complete_graph(n)).width, 1);
  }
  for (const char* name : {"net", "gamma1"}) {
    expect(std::string("lrw_dh(") + name + ")", lrw_dh(fixture(name).graph), 2);
    expect(std::string("oracle(") + name + ")", lrw_oracle(fixture(name).graph).width, 2);
  }
  expect("oracle(C_5)", lrw_oracle(cycle_graph(5)).width, 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    const Graph t = complete_binary_tree(2 * n + 1);
    expect("lrw_dh(cbt " + std::to_string(2 * n + 1) + ")", lrw_dh(t), n + 1);
    expect("pw(T_D) of cbt " + std::to_string(2 * n + 1), tree_pw_of_decomposition(canonical_decomposition(t)), n);
  }
  r.seconds = clock.seconds();
  return r;
}

SweepReport sweep_bounds(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  Stopwatch clock;
  SweepReport r;
  r.name = "bounds";
  std::vector<Graph> graphs;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) graphs.push_back(random_dh_graph(2 + rng() % (max_n - 1), rng));
  Failures bad(count);
  std::vector<std::uint64_t> tight(count, 0);
  parallel_for(count, [&](std::size_t i) {
    const Graph& g = graphs[i];
    const MarkedGraph d = canonical_decomposition(g);
    const std::size_t pw = tree_pw_of_decomposition(d), lrw = lrw_dh(g);
    if (2 * lrw < pw || lrw > pw + 1) {
      bad.slot[i] = emit_graph6(g) + ": lrw " + std::to_string(lrw) + " pw " + std::to_string(pw);
      return;
    }
    const auto [layouts, p] = default_bag_layouts(d);
    const ComposedLayout c = compose_layout(d, layouts, p);
    const std::size_t width = layout_width(g, c.layout.order);
    if (width > c.bound || c.bound != 2 * (p + 2) * (pw + 1))
      bad.slot[i] = emit_graph6(g) + ": composed width " + std::to_string(width) + " bound " + std::to_string(c.bound);
    tight[i] = lrw == pw + 1;
  });
  bad.merge_into(r);
  r.metrics["graphs"] = count;
  r.metrics["upper_bound_tight"] = std::count(tight.begin(), tight.end(), 1);
  r.seconds = clock.seconds();
  return r;
}

SweepReport sweep_obstruction_certification() {
  Stopwatch clock;
  SweepReport r;
  r.name = "obstruction-certification";
  ObstructionCatalog phi1 = generate_phi(1);
  certify_catalog(phi1);
  for (const auto& m : phi1.members)
    if (!m.certification.pass) r.fail("phi1 member " + m.graph6 + " failed " + m.certification.failed);
  r.metrics["phi1_members"] = phi1.members.size();
  // The alpha/beta/gamma table; "net" repeats alpha1.
  for (const auto& f : builtin_fixtures()) {
    if (!f.row || f.name == "net") continue;
    ++r.metrics["fixtures"];
    const std::size_t w = lrw_oracle(f.graph).width;
    if (w != 2) r.fail(f.name + ": oracle lrw " + std::to_string(w));
    if (!matches_bag_row(canonical_decomposition(f.graph), *f.row)) r.fail(f.name + ": table row mismatch");
  }
  r.seconds = clock.seconds();
  return r;
}

SweepReport sweep_mainobs(std::size_t max_n) {
  Stopwatch clock;
  SweepReport r;
  r.name = "mainobs";
  const ObstructionCatalog psi1 = generate_psi(1);
  const MainObsSearch search(psi1, max_n);
  r.metrics["psi1_members"] = psi1.members.size();
  r.metrics["targets"] = search.target_count();
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto graphs = all_connected_dh_graphs(n);
    Failures bad(graphs.size());
    std::vector<char> wide(graphs.size(), 0);
    parallel_for(graphs.size(), [&](std::size_t i) {
      if (lrw_dh(graphs[i]) < 2) return;
      wide[i] = 1;
      const auto hit = search.find(graphs[i]);
      if (!hit) {
        bad.slot[i] = emit_graph6(graphs[i]) + ": no Psi_1 member found";
      } else if (!isomorphic(apply_script(graphs[i], hit->script), psi1.members[hit->member].origin)) {
        bad.slot[i] = emit_graph6(graphs[i]) + ": witness script does not replay to the member";
      }
    });
    bad.merge_into(r);
    r.metrics["wide_graphs"] += std::count(wide.begin(), wide.end(), 1);
  }
  r.seconds = clock.seconds();
  return r;
}

SweepReport sweep_canonicality(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  Stopwatch clock;
  SweepReport r;
  r.name = "canonicality";
  Rng rng(seed);
  std::vector<Graph> graphs, relabeled;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 3 + rng() % (max_n - 2);
    Graph g;
    switch (i % 3) {
      case 0: g = random_connected_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0, rng); break;
      case 1: g = random_dh_graph(n, rng); break;
      default: g = random_tree(n, rng); break;
    }
    relabeled.push_back(random_relabel(g, rng));
    graphs.push_back(std::move(g));
  }
  Failures bad(count);
  std::vector<char> dh(count, 0), tree(count, 0);
  parallel_for(count, [&](std::size_t i) {
    const Graph& g = graphs[i];
    const std::string code = emit_graph6(g);
    const MarkedGraph d = canonical_decomposition(g);
    dh[i] = is_dh_by_distances(g);
    tree[i] = is_tree(g);
    if (origin(d) != g) bad.slot[i] = code + ": origin differs";
    else if (!validate_canonical(d)) bad.slot[i] = code + ": not canonical";
    else if (!marked_isomorphic(d, canonical_decomposition(relabeled[i]))) bad.slot[i] = code + ": relabeling changes the decomposition";
    else if (all_bags_k_or_s(d) != static_cast<bool>(dh[i])) bad.slot[i] = code + ": DH characterisation fails";
    else if (is_s_decomposition(d) != static_cast<bool>(tree[i])) bad.slot[i] = code + ": tree characterisation fails";
  });
  bad.merge_into(r);
  r.metrics["graphs"] = count;
  r.metrics["dh"] = std::count(dh.begin(), dh.end(), 1);
  r.metrics["trees"] = std::count(tree.begin(), tree.end(), 1);
  r.seconds = clock.seconds();
  return r;
}

SweepReport sweep_extractor(std::size_t pairs, std::size_t subcubic_n, std::uint64_t seed) {
  Stopwatch clock;
  SweepReport r;
  r.name = "extractor";
  for (std::size_t n = 1; n <= subcubic_n; ++n)
    for (const Graph& t : all_connected_dh_graphs(n)) {
      if (!is_tree(t)) continue;
      ++r.metrics["subcubic_trees"];
      const SubcubicExpansion s = to_subcubic(t);
      std::size_t deg = 0;
      for (std::size_t i = 0; i < s.tree.size(); ++i) deg = std::max(deg, s.tree.degree_at(i));
      if (deg > 3 || s.tree.size() > 5 * t.size() || !is_tree(s.tree) || !isomorphic(apply_script(s.tree, s.script), t))
        r.fail(emit_graph6(t) + ": to_subcubic");
    }

  // A fifth of the pairs on complete binary trees, the rest on random DH hosts.
  Rng rng(seed);
  const std::vector<Graph> small_trees = {path_graph(2), path_graph(3), path_graph(4), star_graph(3),
                                          path_graph(5), star_graph(4)};
  std::size_t found = 0, tries = 0;
  const std::size_t binary_pairs = pairs / 5;
  while (found < pairs) {
    if (++tries > 200 * pairs) {
      r.fail("could not generate enough pairs with an embedding");
      break;
    }
    Graph g, t;
    if (found < binary_pairs) {
      g = complete_binary_tree(5 + rng() % 4);
      t = small_trees[rng() % small_trees.size()];
    } else {
      g = random_dh_graph(40 + rng() % 120, rng);
      t = random_tree(2 + rng() % 5, rng);
    }
    const Graph pattern = eta(to_subcubic(t).tree);
    std::optional<TopologicalEmbedding> emb;
    for (const auto& comp : components(g))
      if (comp.size() >= 2 && !emb)
        emb = find_tree_topological_minor(decomposition_tree(canonical_decomposition(g.induced(comp))).as_graph(), pattern);
    if (!emb) continue;
    ++found;
    const std::string code = emit_graph6(g) + " / " + emit_graph6(t);
    try {
      const auto script = extract_tree_vertex_minor(g, t);
      if (!script) r.fail(code + ": no script although the embedding exists");
      else if (!isomorphic(apply_script(g, *script), t)) r.fail(code + ": replay is not the tree");
      else r.metrics["script_ops"] += script->size();
    } catch (const std::exception& e) {
      r.fail(code + ": " + e.what());
    }
  }
  r.metrics["pairs"] = found;
  r.metrics["binary_pairs"] = std::min(found, binary_pairs);
  r.seconds = clock.seconds();
  return r;
}

SweepReport sweep_phi2(std::size_t sample) {
  Stopwatch clock;
  SweepReport r;
  r.name = "phi2";
  ObstructionCatalog phi2 = generate_phi(2, sample);
  certify_catalog(phi2);
  for (const auto& m : phi2.members)
    if (!m.certification.pass) r.fail("phi2 member " + m.graph6 + " failed " + m.certification.failed);
  r.metrics["members_checked"] = phi2.members.size();
  r.metrics["complete"] = phi2.complete;
  r.metrics["combinations"] = phi2.combinations;
  r.metrics["pieces_complete"] = phi2.pieces[0];
  r.metrics["pieces_center"] = phi2.pieces[1];
  r.metrics["pieces_leaf"] = phi2.pieces[2];
  std::size_t lo = SIZE_MAX, hi = 0;
  for (const auto& m : phi2.members) {
    lo = std::min(lo, m.origin.size());
    hi = std::max(hi, m.origin.size());
  }
  r.metrics["min_vertices"] = phi2.members.empty() ? 0 : lo;
  r.metrics["max_vertices"] = hi;
  if (phi2.members.size() < std::min<std::uint64_t>(100, phi2.combinations))
    r.fail("fewer than 100 members checked");
  r.seconds = clock.seconds();
  return r;
}

SweepReport sweep_pw_question(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  Stopwatch clock;
  SweepReport r;
  r.name = "pw-question";
  Rng rng(seed);
  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < count; ++i) graphs.push_back(random_dh_graph(2 + rng() % (max_n - 1), rng));
  std::vector<std::string> hits(count);
  parallel_for(count, [&](std::size_t i) {
    const std::size_t pw = tree_pw_of_decomposition(canonical_decomposition(graphs[i]));
    const std::size_t lrw = lrw_dh(graphs[i]);
    if (pw > lrw) hits[i] = emit_graph6(graphs[i]) + ": pw(T_D) " + std::to_string(pw) + " > lrw " + std::to_string(lrw);
  });
  r.metrics["graphs"] = count;
  r.metrics["pw_above_lrw"] = 0;
  for (const auto& h : hits)
    if (!h.empty()) {
      ++r.metrics["pw_above_lrw"];
      if (r.failures.size() < kMaxListed) r.failures.push_back(h);
    }
  r.seconds = clock.seconds();
  return r;
}

}  // namespace limbforge
