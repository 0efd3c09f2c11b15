#include "limbforge/tree_pw.hpp"

#include <algorithm>
#include <map>

#include "critical_label.hpp"
#include "limbforge/errors.hpp"

namespace limbforge {

namespace {

using detail::combine;
using detail::Label;

void require_forest(const Graph& t) {
  if (!is_forest(t)) throw InvalidArgument("expected a forest");
}

// Labels of directed subtrees: key (u, v) is the component of t - u holding
// v, rooted at v; u == SIZE_MAX roots the whole component at v.
class Labels {
 public:
  explicit Labels(const Graph& t) : t_(t), nbr_(t.size()) {
    for (std::size_t i = 0; i < t.size(); ++i) nbr_[i] = t.neighbor_indices(i);
  }

  const Label& of(std::size_t from, std::size_t v) {
    auto key = std::make_pair(from, v);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Label> kids;
    for (std::size_t w : nbr_[v])
      if (w != from) kids.push_back(of(v, w));
    return memo_[key] = combine(std::move(kids));
  }

  std::size_t pw(std::size_t from, std::size_t v) { return of(from, v)[0].value; }
  const std::vector<std::size_t>& nbr(std::size_t v) const { return nbr_[v]; }

 private:
  const Graph& t_;
  std::vector<std::vector<std::size_t>> nbr_;
  std::map<std::pair<std::size_t, std::size_t>, Label> memo_;
};

std::vector<std::size_t> tree_path(const Labels& lab, std::size_t n, std::size_t a, std::size_t b) {
  std::vector<std::size_t> par(n, SIZE_MAX);
  std::vector<std::size_t> stack{a};
  par[a] = a;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : lab.nbr(u))
      if (par[w] == SIZE_MAX) {
        par[w] = u;
        stack.push_back(w);
      }
  }
  std::vector<std::size_t> path{b};
  while (path.back() != a) path.push_back(par[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::size_t> main_path_indices(const Graph& t, Labels& lab, std::size_t k) {
  const std::size_t n = t.size();
  if (n == 1) return {0};
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (lab.nbr(v).size() == 1) leaves.push_back(v);
  std::vector<char> on(n, 0);
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      auto path = tree_path(lab, n, leaves[i], leaves[j]);
      for (std::size_t v : path) on[v] = 1;
      bool ok = true;
      for (std::size_t v : path) {
        for (std::size_t w : lab.nbr(v))
          if (!on[w] && lab.pw(v, w) + 1 > k) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      for (std::size_t v : path) on[v] = 0;
      if (ok) return path;
    }
  throw InvalidArgument("tree_main_path: path-width exceeds " + std::to_string(k));
}

void decompose(const Graph& t, std::vector<std::vector<VertexId>>& out) {
  if (t.size() == 1) {
    out.push_back({t.id(0)});
    return;
  }
  Labels lab(t);
  std::size_t k = lab.pw(SIZE_MAX, 0);
  auto path = main_path_indices(t, lab, k);
  std::vector<char> on(t.size(), 0);
  for (std::size_t v : path) on[v] = 1;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const std::size_t p = path[i];
    for (std::size_t w : lab.nbr(p)) {
      if (on[w]) continue;
      // Vertices of the hanging subtree through w.
      std::vector<std::size_t> sub{w};
      std::vector<char> seen(t.size(), 0);
      seen[p] = seen[w] = 1;
      for (std::size_t s = 0; s < sub.size(); ++s)
        for (std::size_t x : lab.nbr(sub[s]))
          if (!seen[x]) {
            seen[x] = 1;
            sub.push_back(x);
          }
      std::size_t first = out.size();
      decompose(t.induced_indices(sub), out);
      for (std::size_t b = first; b < out.size(); ++b) out[b].push_back(t.id(p));
    }
    if (i + 1 < path.size()) out.push_back({t.id(p), t.id(path[i + 1])});
    else if (path.size() == 1) out.push_back({t.id(p)});
  }
}

}  // namespace

std::size_t tree_pathwidth(const Graph& t) {
  require_forest(t);
  std::size_t best = 0;
  for (const auto& comp : components(t)) {
    Graph c = t.induced(comp);
    Labels lab(c);
    best = std::max(best, lab.pw(SIZE_MAX, 0));
  }
  return best;
}

std::vector<VertexId> tree_main_path(const Graph& t, std::size_t k) {
  if (!is_tree(t)) throw InvalidArgument("tree_main_path: expected a tree");
  Labels lab(t);
  if (lab.pw(SIZE_MAX, 0) > k) throw InvalidArgument("tree_main_path: path-width exceeds " + std::to_string(k));
  std::vector<VertexId> out;
  for (std::size_t i : main_path_indices(t, lab, k)) out.push_back(t.id(i));
  return out;
}

PathDecomposition tree_path_decomposition(const Graph& t) {
  require_forest(t);
  PathDecomposition pd;
  for (const auto& comp : components(t)) decompose(t.induced(comp), pd.bags);
  for (auto& b : pd.bags) {
    std::sort(b.begin(), b.end());
    pd.width = std::max(pd.width, b.size() - 1);
  }
  return pd;
}

bool is_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  std::map<VertexId, std::pair<std::size_t, std::size_t>> span;  // first, last bag
  std::map<VertexId, std::size_t> count;
  std::size_t width = 0;
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    if (pd.bags[i].empty()) return false;
    width = std::max(width, pd.bags[i].size() - 1);
    for (VertexId v : pd.bags[i]) {
      if (!g.contains(v)) return false;
      auto it = span.find(v);
      if (it == span.end()) span[v] = {i, i};
      else it->second.second = i;
      ++count[v];
    }
  }
  if (width != pd.width && !(g.empty() && pd.bags.empty())) return false;
  for (VertexId v : g.ids()) {
    auto it = span.find(v);
    if (it == span.end()) return false;
    // Occurrences form an interval.
    if (it->second.second - it->second.first + 1 != count[v]) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& b : pd.bags)
      if (std::find(b.begin(), b.end(), u) != b.end() && std::find(b.begin(), b.end(), v) != b.end()) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

}  // namespace limbforge
