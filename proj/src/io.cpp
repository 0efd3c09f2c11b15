#include "limbforge/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "limbforge/errors.hpp"

namespace limbforge {

namespace {

bool blank(char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  std::size_t end = text.size();
  while (end > pos && blank(text[end - 1])) --end;
  auto byte = [&](std::size_t i) -> unsigned {
    if (i >= end) throw ParseError("graph6: truncated input", i);
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", i);
    return c - 63U;
  };
  std::size_t n = 0;
  if (pos >= end) throw ParseError("graph6: empty input", pos);
  if (byte(pos) < 63) {
    n = byte(pos++);
  } else if (pos + 1 < end && byte(pos + 1) == 63) {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | byte(pos++);
  } else {
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte(pos++);
  }
  const std::size_t nbits = n < 2 ? 0 : n * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (end - pos != nbytes)
    throw ParseError("graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                         std::to_string(end - pos),
                     end - pos < nbytes ? end : pos + nbytes);
  Graph g = Graph::with_vertices(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      std::size_t at = pos + bit / 6;
      if ((byte(at) >> (5 - bit % 6)) & 1U) g.set_adj(i, j, true);
    }
  // Padding bits must be zero.
  if (nbits % 6 != 0) {
    unsigned last = byte(pos + nbytes - 1);
    unsigned pad = (1U << (6 - nbits % 6)) - 1;
    if (last & pad) throw ParseError("graph6: nonzero padding bits", pos + nbytes - 1);
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int k = 5; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
  }
  unsigned acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adj(i, j) ? 1U : 0U);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  auto field_at = [&](const char* key) {
    std::size_t at = text.find(std::string("\"") + key + "\"");
    return at == std::string_view::npos ? 0 : at;
  };
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
    throw ParseError("json: expected object with unsigned field \"n\"", field_at("n"));
  const std::size_t n = j["n"].get<std::size_t>();
  Graph g = Graph::with_vertices(n);
  if (!j.contains("edges")) return g;
  const auto& edges = j["edges"];
  if (!edges.is_array()) throw ParseError("json: \"edges\" must be an array", field_at("edges"));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw ParseError("json: edge " + std::to_string(k) + " is not a pair of vertex indices",
                       field_at("edges"));
    std::size_t u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
    if (u >= n || v >= n || u == v)
      throw ParseError("json: edge " + std::to_string(k) + " is out of range or a loop",
                       field_at("edges"));
    g.set_adj(u, v, true);
  }
  return g;
}

std::string emit_graph_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.size();
  j["edges"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k : g.neighbor_indices(i))
      if (i < k) j["edges"].push_back({i, k});
  return j.dump();
}

Graph parse_graph(std::string_view text, GraphFormat fmt) {
  if (fmt == GraphFormat::Auto) {
    std::size_t i = 0;
    while (i < text.size() && blank(text[i])) ++i;
    fmt = i < text.size() && text[i] == '{' ? GraphFormat::Json : GraphFormat::Graph6;
    if (fmt == GraphFormat::Graph6) text = text.substr(i);
  }
  return fmt == GraphFormat::Json ? parse_graph_json(text) : parse_graph6(text);
}

GraphFormat parse_format_name(const std::string& name) {
  if (name == "graph6") return GraphFormat::Graph6;
  if (name == "json") return GraphFormat::Json;
  if (name == "auto") return GraphFormat::Auto;
  throw InvalidArgument("unknown format " + name);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

}  // namespace limbforge
