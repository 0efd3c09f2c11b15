#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "limbforge/graph.hpp"

namespace limbforge {

enum class OpKind { LocalComplement, Pivot, Delete };

struct ScriptOp {
  OpKind op;
  VertexId a;
  VertexId b = 0;  // pivot only
  bool operator==(const ScriptOp& o) const { return op == o.op && a == o.a && b == o.b; }
};

using VertexMinorScript = std::vector<ScriptOp>;

ScriptOp lc_op(VertexId v);
ScriptOp pivot_op(VertexId x, VertexId y);
ScriptOp delete_op(VertexId v);

// Replays a script; throws InvalidArgument on a missing vertex or a pivot on
// a non-edge.
Graph apply_script(const Graph& g, const VertexMinorScript& s);

// [{"op": "local_complement"|"pivot"|"delete", "args": [...]}, ...]
std::string script_to_json(const VertexMinorScript& s);
VertexMinorScript script_from_json(const std::string& text);

struct ElementaryMinor {
  Graph graph;
  VertexMinorScript steps;  // replay from the parent graph
};

// g\v, g*v\v and g∧vw\v for each neighbour w, in that order.
std::vector<ElementaryMinor> elementary_vertex_minors_with_steps(const Graph& g, VertexId v);
std::vector<Graph> elementary_vertex_minors(const Graph& g, VertexId v);

struct LcOrbit {
  std::vector<Graph> members;  // one labelled representative per class, BFS order
  std::vector<std::string> forms;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, VertexId>> parent;  // (member, vertex); root has itself

  // Local complementations turning the root into members[i].
  VertexMinorScript path_to(std::size_t i) const;
};

// Closure under local complementation, deduplicated by canonical form. Throws
// ResourceLimit above caps().orbit_n vertices or caps().orbit_size members.
LcOrbit lc_orbit_full(const Graph& g);
std::vector<Graph> lc_orbit(const Graph& g);
bool locally_equivalent(const Graph& a, const Graph& b);

// Script turning g into a graph isomorphic to h, if h is a vertex-minor.
std::optional<VertexMinorScript> has_vertex_minor(const Graph& g, const Graph& h);

struct VertexMinorHit {
  std::size_t target;        // index into the target list
  VertexMinorScript script;  // replay on g gives a graph isomorphic to the target
};

// Precomputed union of target LC orbits for repeated searches.
class VertexMinorTargets {
 public:
  explicit VertexMinorTargets(const std::vector<Graph>& targets);
  const std::vector<Graph>& targets() const { return targets_; }
  std::optional<std::size_t> match(const std::string& form) const;
  std::size_t min_size() const { return min_size_; }

 private:
  std::vector<Graph> targets_;
  std::map<std::string, std::size_t> forms_;  // orbit member form -> target
  std::size_t min_size_ = 0;
};

// Depth-first search over elementary vertex-minors with canonical-form
// memoisation. Throws ResourceLimit past caps().vm_states visited states.
std::optional<VertexMinorHit> find_vertex_minor(const Graph& g, const VertexMinorTargets& targets);

}  // namespace limbforge
