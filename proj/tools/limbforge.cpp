#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "limbforge/canon.hpp"
#include "limbforge/caps.hpp"
#include "limbforge/dh.hpp"
#include "limbforge/errors.hpp"
#include "limbforge/experiments.hpp"
#include "limbforge/extract.hpp"
#include "limbforge/generators.hpp"
#include "limbforge/io.hpp"
#include "limbforge/limbs.hpp"
#include "limbforge/obstructions.hpp"
#include "limbforge/oracles.hpp"
#include "limbforge/parallel.hpp"
#include "limbforge/split.hpp"
#include "limbforge/tree_pw.hpp"

using namespace limbforge;
using nlohmann::json;

namespace {

// A check that ran and failed; exit code 1.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string format = "auto";
  bool witness = false;
  bool check = false;
  std::size_t max_n = 0;  // 0: the command's default
  std::size_t threads = 0;
  std::string out;
};

class Output {
 public:
  explicit Output(const Options& o) : path_(o.out) {}
  std::ostream& stream() { return buffer_; }
  void flush() {
    if (path_.empty()) {
      std::cout << buffer_.str();
    } else {
      write_text(path_, buffer_.str());
    }
  }

 private:
  std::string path_;
  std::ostringstream buffer_;
};

GraphFormat format_of(const Options& o) {
  return o.format == "auto" ? GraphFormat::Auto : parse_format_name(o.format);
}

// Inline graph text, or else the --input file ("-" for standard input).
Graph load_graph(const Options& o, const std::string& inline_text) {
  const std::string text = inline_text.empty() ? read_text(o.input) : inline_text;
  return parse_graph(text, format_of(o));
}

// A path to an existing file is read; anything else is graph text.
Graph graph_argument(const Options& o, const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_graph(read_text(arg), format_of(o));
  return parse_graph(arg, format_of(o));
}

json layout_json(const Graph& g, const LinearLayout& l) {
  return {{"order", l.order}, {"width", layout_width(g, l.order)}};
}

void check_with_oracle(const Graph& g, std::size_t value) {
  if (g.size() > caps().oracle_n) {
    std::cerr << "check: skipped, " << g.size() << " vertices exceed the oracle cap\n";
    return;
  }
  const std::size_t slow = lrw_oracle(g).width;
  if (slow != value)
    throw CheckFailed("check: oracle gives " + std::to_string(slow) + ", computed " + std::to_string(value));
  std::cerr << "check: oracle agrees\n";
}

void cmd_lrw(const Options& o, const std::string& text, Output& out) {
  const Graph g = load_graph(o, text);
  json j;
  std::size_t value = 0;
  if (is_distance_hereditary(g)) {
    const LrwDhReport report = lrw_dh_report(g);
    value = report.lrw;
    if (o.witness) {
      j["lrw"] = value;
      j["certified_layout"] = layout_json(g, lrw_layout_dh(g));
      j["per_bag_f_values"] = json::array();
      for (const auto& c : report.components) {
        json f = json::object();
        for (const auto& [marker, v] : c.f) f[std::to_string(marker)] = v;
        j["per_bag_f_values"].push_back({{"vertices", c.vertices}, {"lrw", c.lrw}, {"f", f}});
      }
    }
  } else {
    if (g.size() > caps().oracle_n)
      throw UnsupportedInput("lrw: graph is not distance-hereditary and exceeds the oracle cap");
    const LinearLayout l = lrw_oracle(g);
    value = l.width;
    if (o.witness) {
      j["lrw"] = value;
      j["certified_layout"] = layout_json(g, l);
    }
  }
  if (o.check) check_with_oracle(g, value);
  if (o.witness) {
    out.stream() << j.dump() << "\n";
  } else {
    out.stream() << value << "\n";
  }
}

void cmd_pathwidth(const Options& o, const std::string& text, bool of_decomposition, Output& out) {
  Graph g = load_graph(o, text);
  if (of_decomposition) g = decomposition_tree(canonical_decomposition(g)).as_graph();
  if (!is_forest(g)) throw InvalidArgument("pathwidth: input is not a forest (try --decomposition-tree)");
  const std::size_t w = tree_pathwidth(g);
  if (o.check) {
    if (g.size() <= caps().pw_brute_n) {
      const std::size_t slow = pathwidth_brute(g);
      if (slow != w) throw CheckFailed("check: brute force gives " + std::to_string(slow));
      std::cerr << "check: brute force agrees\n";
    } else {
      std::cerr << "check: skipped, above the brute-force cap\n";
    }
  }
  if (o.witness) {
    const PathDecomposition pd = tree_path_decomposition(g);
    out.stream() << json{{"pathwidth", w}, {"bags", pd.bags}}.dump() << "\n";
  } else {
    out.stream() << w << "\n";
  }
}

void cmd_decompose(const Options& o, const std::string& text, bool dot, Output& out) {
  const Graph g = load_graph(o, text);
  const MarkedGraph d = canonical_decomposition(g);
  if (o.check) {
    if (origin(d) != g) throw CheckFailed("check: origin differs from the input");
    if (!validate_canonical(d)) throw CheckFailed("check: decomposition is not canonical");
    std::cerr << "check: origin and canonicity verified\n";
  }
  out.stream() << (dot ? marked_to_dot(d) : marked_to_json(d)) << "\n";
}

struct ObstructionArgs {
  std::string gen;
  std::size_t k = 1;
  std::size_t sample = 128;
  std::string certify;
  bool check_mainobs = false;
  std::size_t exhaustive = 0;
};

void cmd_obstructions(const Options& o, const ObstructionArgs& a, Output& out) {
  if (!a.gen.empty()) {
    if (a.gen != "psi" && a.gen != "phi") throw InvalidArgument("obstructions: --gen takes psi or phi");
    ObstructionCatalog c = a.gen == "psi" ? generate_psi(a.k, a.sample) : generate_phi(a.k, a.sample);
    if (o.check) {
      certify_catalog(c);
      for (const auto& m : c.members)
        if (!m.certification.pass) throw CheckFailed("check: member " + m.graph6 + " fails certification");
    }
    out.stream() << catalog_to_json(c) << "\n";
    return;
  }
  if (!a.certify.empty()) {
    ObstructionCatalog c = catalog_from_json(read_text(a.certify));
    certify_catalog(c);
    std::size_t passed = 0;
    for (const auto& m : c.members) passed += m.certification.pass;
    std::cerr << "certified " << passed << " of " << c.members.size() << "\n";
    out.stream() << catalog_to_json(c) << "\n";
    if (passed != c.members.size()) throw CheckFailed("certification failed for some members");
    return;
  }
  if (a.check_mainobs) {
    if (a.k != 1) throw InvalidArgument("obstructions: --check-mainobs supports --k 1 only");
    const std::size_t n = a.exhaustive ? a.exhaustive : (o.max_n ? o.max_n : 8);
    const SweepReport r = sweep_mainobs(n);
    out.stream() << report_to_json(r) << "\n";
    if (!r.pass) throw CheckFailed("mainobs sweep found exceptions");
    return;
  }
  throw InvalidArgument("obstructions: give --gen, --certify or --check-mainobs");
}

void cmd_extract(const Options& o, const std::string& graph, const std::string& tree, const std::string& emit,
                 Output& out) {
  const Graph g = graph_argument(o, graph);
  const Graph t = graph_argument(o, tree);
  const auto r = extract_tree(g, t);
  if (!r) {
    out.stream() << json{{"found", false}}.dump() << "\n";
    return;
  }
  if (o.check && !isomorphic(apply_script(g, r->script), t)) throw CheckFailed("check: replay is not the tree");
  const std::string script = script_to_json(r->script);
  if (!emit.empty()) write_text(emit, script + "\n");
  json j{{"found", true}, {"method", r->method}, {"operations", r->script.size()}};
  if (o.witness || emit.empty()) j["script"] = json::parse(script);
  out.stream() << j.dump() << "\n";
}

void cmd_certify(const Options& o, const std::string& text, std::size_t k, Output& out) {
  const Graph g = load_graph(o, text);
  const Certification c = certify_obstruction(g, k);
  json j{{"k", k}, {"lrw", c.lrw}, {"pass", c.pass}, {"failed", c.failed}};
  if (c.witness_vertex) {
    j["witness_vertex"] = *c.witness_vertex;
    j["witness_script"] = json::parse(script_to_json(c.witness_script));
  }
  out.stream() << j.dump() << "\n";
}

void cmd_oracle(const Options& o, const std::string& text, bool crosscheck, Output& out) {
  if (crosscheck) {
    const SweepReport r = sweep_oracle_equivalence(o.max_n ? o.max_n : 7);
    out.stream() << report_to_json(r) << "\n";
    if (!r.pass) throw CheckFailed("lrw_dh and the oracle disagree");
    return;
  }
  const Graph g = load_graph(o, text);
  if (g.size() > caps().oracle_n) throw ResourceLimit("oracle: graph exceeds the oracle cap");
  const LinearLayout l = lrw_oracle(g);
  if (o.witness) {
    out.stream() << json{{"lrw", l.width}, {"layout", layout_json(g, l)}}.dump() << "\n";
  } else {
    out.stream() << l.width << "\n";
  }
}

struct ExperimentArgs {
  std::string name;
  std::size_t count = 0;
  std::uint64_t seed = 1;
};

void cmd_experiment(const Options& o, const ExperimentArgs& a, Output& out) {
  auto pick = [](std::size_t given, std::size_t fallback) { return given ? given : fallback; };
  SweepReport r;
  if (a.name == "oracle-equivalence") r = sweep_oracle_equivalence(pick(o.max_n, 8));
  else if (a.name == "lrw1-recognition") r = sweep_lrw1_recognition(pick(o.max_n, 7), pick(a.count, 100000), 30, a.seed);
  else if (a.name == "named-values") r = sweep_named_values();
  else if (a.name == "bounds") r = sweep_bounds(pick(a.count, 500), pick(o.max_n, 40), a.seed);
  else if (a.name == "obstruction-certification") r = sweep_obstruction_certification();
  else if (a.name == "mainobs") r = sweep_mainobs(pick(o.max_n, 8));
  else if (a.name == "canonicality") r = sweep_canonicality(pick(a.count, 500), pick(o.max_n, 10), a.seed);
  else if (a.name == "extractor") r = sweep_extractor(pick(a.count, 50), pick(o.max_n, 9), a.seed);
  else if (a.name == "phi2") r = sweep_phi2(pick(a.count, 128));
  else if (a.name == "pw-question") r = sweep_pw_question(pick(a.count, 500), pick(o.max_n, 40), a.seed);
  else throw InvalidArgument("experiment: unknown name '" + a.name + "'");
  out.stream() << report_to_json(r) << "\n";
  if (!r.pass) throw CheckFailed("experiment " + a.name + " failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"limbforge: split decompositions, linear rank-width and vertex-minors"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--input", o.input, "Graph file, '-' for standard input");
  app.add_option("--format", o.format, "graph6, json or auto")->check(CLI::IsMember({"graph6", "json", "auto"}));
  app.add_flag("--witness", o.witness, "Emit witnesses (layouts, decompositions, scripts)");
  app.add_flag("--check", o.check, "Re-verify results with an independent method");
  app.add_option("--max-n", o.max_n, "Vertex bound for sweeps");
  app.add_option("--threads", o.threads, "Worker threads (0: hardware concurrency)");
  app.add_option("--out", o.out, "Write output to this file");

  std::string graph_text;
  auto* lrw = app.add_subcommand("lrw", "Linear rank-width (exact on DH graphs, oracle otherwise)");
  lrw->add_option("graph", graph_text, "Inline graph6 or JSON");

  bool of_decomposition = false;
  auto* pw = app.add_subcommand("pathwidth", "Path-width of a forest");
  pw->add_option("graph", graph_text, "Inline graph6 or JSON");
  pw->add_flag("--decomposition-tree", of_decomposition, "Use the decomposition tree of the input");

  bool dot = false;
  auto* dec = app.add_subcommand("decompose", "Canonical split decomposition");
  dec->add_option("graph", graph_text, "Inline graph6 or JSON");
  dec->add_flag("--dot", dot, "Emit DOT instead of JSON");

  ObstructionArgs oa;
  auto* obs = app.add_subcommand("obstructions", "Generate, certify or sweep obstruction catalogs");
  obs->add_option("--gen", oa.gen, "psi or phi");
  obs->add_option("--k", oa.k, "Level");
  obs->add_option("--sample", oa.sample, "Members drawn when a level is too large");
  obs->add_option("--certify", oa.certify, "Catalog JSON to certify");
  obs->add_flag("--check-mainobs", oa.check_mainobs, "Every wide DH graph contains a Psi_k member");
  obs->add_option("--exhaustive", oa.exhaustive, "Vertex bound of the mainobs sweep");

  std::string graph_arg, tree_arg, emit;
  auto* ext = app.add_subcommand("extract-tree", "Extract a tree as a vertex-minor");
  ext->add_option("--graph", graph_arg, "Host graph (file or inline)")->required();
  ext->add_option("--tree", tree_arg, "Target tree (file or inline)")->required();
  ext->add_option("--emit-script", emit, "Write the script JSON here");

  std::size_t cert_k = 1;
  auto* cert = app.add_subcommand("certify", "Certify a graph as an lrw obstruction");
  cert->add_option("graph", graph_text, "Inline graph6 or JSON");
  cert->add_option("--k", cert_k, "The graph should have lrw k+1 with every elementary minor at most k");

  bool crosscheck = false;
  auto* orc = app.add_subcommand("oracle", "Brute-force lrw, or the lrw_dh crosscheck sweep");
  orc->add_option("graph", graph_text, "Inline graph6 or JSON");
  orc->add_flag("--crosscheck", crosscheck, "Compare lrw_dh with the oracle on all DH graphs <= --max-n");

  ExperimentArgs ea;
  auto* exp = app.add_subcommand("experiment", "Run a named sweep and print its report");
  exp->add_option("name", ea.name, "Sweep name")->required();
  exp->add_option("--count", ea.count, "Sample count");
  exp->add_option("--seed", ea.seed, "Random seed");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    set_threads(o.threads);
    Output out(o);
    if (lrw->parsed()) cmd_lrw(o, graph_text, out);
    else if (pw->parsed()) cmd_pathwidth(o, graph_text, of_decomposition, out);
    else if (dec->parsed()) cmd_decompose(o, graph_text, dot, out);
    else if (obs->parsed()) cmd_obstructions(o, oa, out);
    else if (ext->parsed()) cmd_extract(o, graph_arg, tree_arg, emit, out);
    else if (cert->parsed()) cmd_certify(o, graph_text, cert_k, out);
    else if (orc->parsed()) cmd_oracle(o, graph_text, crosscheck, out);
    else if (exp->parsed()) cmd_experiment(o, ea, out);
    out.flush();
    return 0;
  } catch (const CheckFailed& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    // InvalidArgument, UnsupportedInput and ParseError.
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
}
