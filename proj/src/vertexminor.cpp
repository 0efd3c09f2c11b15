#include "limbforge/vertexminor.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include <json.hpp>

#include "limbforge/canon.hpp"
#include "limbforge/caps.hpp"
#include "limbforge/errors.hpp"

namespace limbforge {

ScriptOp lc_op(VertexId v) { return {OpKind::LocalComplement, v, 0}; }
ScriptOp pivot_op(VertexId x, VertexId y) { return {OpKind::Pivot, x, y}; }
ScriptOp delete_op(VertexId v) { return {OpKind::Delete, v, 0}; }

Graph apply_script(const Graph& g, const VertexMinorScript& s) {
  Graph cur = g;
  for (const auto& op : s) {
    switch (op.op) {
      case OpKind::LocalComplement:
        cur = local_complement(cur, op.a);
        break;
      case OpKind::Pivot:
        cur = pivot(cur, op.a, op.b);
        break;
      case OpKind::Delete:
        if (!cur.contains(op.a)) throw InvalidArgument("script deletes a missing vertex");
        cur = cur.without(op.a);
        break;
    }
  }
  return cur;
}

std::string script_to_json(const VertexMinorScript& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& op : s) {
    switch (op.op) {
      case OpKind::LocalComplement:
        j.push_back({{"op", "local_complement"}, {"args", {op.a}}});
        break;
      case OpKind::Pivot:
        j.push_back({{"op", "pivot"}, {"args", {op.a, op.b}}});
        break;
      case OpKind::Delete:
        j.push_back({{"op", "delete"}, {"args", {op.a}}});
        break;
    }
  }
  return j.dump();
}

VertexMinorScript script_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_array()) throw ParseError("script: expected a JSON array", 0);
  VertexMinorScript s;
  for (const auto& item : j) {
    try {
      std::string op = item.at("op").get<std::string>();
      auto args = item.at("args").get<std::vector<VertexId>>();
      if (op == "local_complement" && args.size() == 1) s.push_back(lc_op(args[0]));
      else if (op == "pivot" && args.size() == 2) s.push_back(pivot_op(args[0], args[1]));
      else if (op == "delete" && args.size() == 1) s.push_back(delete_op(args[0]));
      else throw ParseError("script: bad op " + op, 0);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("script: ") + e.what(), 0);
    }
  }
  return s;
}

std::vector<ElementaryMinor> elementary_vertex_minors_with_steps(const Graph& g, VertexId v) {
  std::vector<ElementaryMinor> out;
  out.push_back({g.without(v), {delete_op(v)}});
  auto nb = g.neighbors(v);
  if (nb.empty()) return out;
  out.push_back({local_complement(g, v).without(v), {lc_op(v), delete_op(v)}});
  for (VertexId w : nb) out.push_back({pivot(g, v, w).without(v), {pivot_op(v, w), delete_op(v)}});
  return out;
}

std::vector<Graph> elementary_vertex_minors(const Graph& g, VertexId v) {
  std::vector<Graph> out;
  for (auto& m : elementary_vertex_minors_with_steps(g, v)) out.push_back(std::move(m.graph));
  return out;
}

VertexMinorScript LcOrbit::path_to(std::size_t i) const {
  VertexMinorScript s;
  while (parent[i].first != i) {
    s.push_back(lc_op(parent[i].second));
    i = parent[i].first;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

LcOrbit lc_orbit_full(const Graph& g) {
  const Caps& c = caps();
  if (g.size() > c.orbit_n)
    throw ResourceLimit("lc_orbit: " + std::to_string(g.size()) + " vertices exceeds cap " +
                        std::to_string(c.orbit_n));
  LcOrbit o;
  auto add = [&](Graph h, std::size_t par, VertexId v) {
    std::string f = canonical_form(h);
    if (o.index.count(f)) return;
    if (o.members.size() >= c.orbit_size) throw ResourceLimit("lc_orbit: orbit exceeds member cap");
    o.index[f] = o.members.size();
    o.parent.push_back({par == SIZE_MAX ? o.members.size() : par, v});
    o.forms.push_back(std::move(f));
    o.members.push_back(std::move(h));
  };
  add(g, SIZE_MAX, 0);
  for (std::size_t i = 0; i < o.members.size(); ++i)
    for (VertexId v : o.members[i].ids()) add(local_complement(o.members[i], v), i, v);
  return o;
}

std::vector<Graph> lc_orbit(const Graph& g) { return lc_orbit_full(g).members; }

bool locally_equivalent(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  return lc_orbit_full(a).index.count(canonical_form(b)) != 0;
}

VertexMinorTargets::VertexMinorTargets(const std::vector<Graph>& targets) : targets_(targets) {
  min_size_ = SIZE_MAX;
  for (std::size_t t = 0; t < targets_.size(); ++t) {
    min_size_ = std::min(min_size_, targets_[t].size());
    for (const auto& f : lc_orbit_full(targets_[t]).forms) forms_.emplace(f, t);
  }
}

std::optional<std::size_t> VertexMinorTargets::match(const std::string& form) const {
  auto it = forms_.find(form);
  if (it == forms_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexMinorHit> find_vertex_minor(const Graph& g, const VertexMinorTargets& targets) {
  if (targets.targets().empty()) return std::nullopt;
  const std::size_t cap = caps().vm_states;
  std::set<std::string> seen;
  VertexMinorScript path;
  std::optional<VertexMinorHit> hit;
  std::function<bool(const Graph&, const std::string&)> dfs = [&](const Graph& cur, const std::string& form) {
    if (auto t = targets.match(form)) {
      // Walk the LC orbit of cur to the target's labelled class.
      std::string want = canonical_form(targets.targets()[*t]);
      LcOrbit o = lc_orbit_full(cur);
      auto it = o.index.find(want);
      if (it == o.index.end()) throw std::logic_error("orbit table disagrees with lc_orbit");
      VertexMinorScript s = path;
      for (const auto& op : o.path_to(it->second)) s.push_back(op);
      hit = VertexMinorHit{*t, std::move(s)};
      return true;
    }
    if (cur.size() <= targets.min_size()) return false;
    for (VertexId v : cur.ids())
      for (auto& m : elementary_vertex_minors_with_steps(cur, v)) {
        std::string f = canonical_form(m.graph);
        if (!seen.insert(f).second) continue;
        if (seen.size() > cap) throw ResourceLimit("vertex-minor search exceeds state cap");
        path.insert(path.end(), m.steps.begin(), m.steps.end());
        if (dfs(m.graph, f)) return true;
        path.resize(path.size() - m.steps.size());
      }
    return false;
  };
  std::string f0 = canonical_form(g);
  seen.insert(f0);
  dfs(g, f0);
  return hit;
}

std::optional<VertexMinorScript> has_vertex_minor(const Graph& g, const Graph& h) {
  if (h.size() > g.size()) return std::nullopt;
  VertexMinorTargets t({h});
  auto hit = find_vertex_minor(g, t);
  if (!hit) return std::nullopt;
  return hit->script;
}

}  // namespace limbforge
