#pragma once

#include <string>
#include <string_view>

#include "limbforge/graph.hpp"

namespace limbforge {

enum class GraphFormat { Graph6, Json, Auto };

// graph6 per the published format; an optional ">>graph6<<" header and
// trailing whitespace are accepted. Vertices become 0..n-1.
Graph parse_graph6(std::string_view text);
// Encodes positions 0..n-1 (ids are not preserved).
std::string emit_graph6(const Graph& g);

// {"n": N, "edges": [[u, v], ...]} with vertices 0..N-1.
Graph parse_graph_json(std::string_view text);
std::string emit_graph_json(const Graph& g);

// Auto picks JSON when the first non-blank byte is '{'.
Graph parse_graph(std::string_view text, GraphFormat fmt = GraphFormat::Auto);
GraphFormat parse_format_name(const std::string& name);

// Whole file, or standard input for "-".
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace limbforge
