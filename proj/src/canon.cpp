#include "limbforge/canon.hpp"

#include <algorithm>
#include <numeric>

#include "limbforge/dh.hpp"
#include "limbforge/errors.hpp"

namespace limbforge {

namespace {

// Individualization-refinement with automorphism pruning. Colours are kept as
// dense ranks; refinement orders cells by an isomorphism-invariant key so the
// cell order itself is canonical.
class Labeler {
 public:
  Labeler(const Graph& g, const std::vector<std::uint32_t>& colors) : g_(g), n_(g.size()) {
    init_.resize(n_);
    std::vector<std::uint32_t> sorted(colors.begin(), colors.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n_; ++v)
      init_[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), colors[v]) - sorted.begin());
    add_twin_generators();
  }

  std::vector<std::size_t> run() {
    if (n_ == 0) return {};
    std::vector<std::uint32_t> c = init_;
    refine(c);
    std::vector<std::size_t> prefix;
    search(c, prefix);
    return best_order_;
  }

 private:
  void refine(std::vector<std::uint32_t>& c) const {
    std::size_t cells = count_cells(c);
    std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> keys(n_);
    for (;;) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& k = keys[v].first;
        k.clear();
        k.push_back(c[v]);
        std::size_t mark = k.size();
        for (std::size_t u : g_.neighbor_indices(v)) k.push_back(c[u]);
        std::sort(k.begin() + static_cast<std::ptrdiff_t>(mark), k.end());
        keys[v].second = v;
      }
      std::vector<std::size_t> idx(n_);
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(),
                [&](std::size_t a, std::size_t b) { return keys[a].first < keys[b].first; });
      std::uint32_t rank = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && keys[idx[i]].first != keys[idx[i - 1]].first) ++rank;
        c[idx[i]] = rank;
      }
      std::size_t now = rank + 1;
      if (now == cells) return;
      cells = now;
    }
  }

  static std::size_t count_cells(const std::vector<std::uint32_t>& c) {
    std::vector<std::uint32_t> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  std::vector<std::uint32_t> individualize(const std::vector<std::uint32_t>& c, std::size_t v) const {
    std::vector<std::uint32_t> d(n_);
    for (std::size_t u = 0; u < n_; ++u) d[u] = 2 * c[u] + 1;
    d[v] = 2 * c[v];
    refine(d);
    return d;
  }

  // Leaf certificate: original colours in canonical order, then the upper
  // triangle of the permuted adjacency matrix.
  std::vector<std::uint64_t> certificate(const std::vector<std::size_t>& order) const {
    std::vector<std::uint64_t> cert;
    cert.reserve(n_ + (n_ * n_) / 128 + 2);
    for (std::size_t i = 0; i < n_; ++i) cert.push_back(init_[order[i]]);
    std::uint64_t word = 0;
    int bits = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        word = (word << 1) | (g_.adj(order[i], order[j]) ? 1U : 0U);
        if (++bits == 64) {
          cert.push_back(word);
          word = 0;
          bits = 0;
        }
      }
    if (bits) cert.push_back(word << (64 - bits));
    return cert;
  }

  void search(const std::vector<std::uint32_t>& c, std::vector<std::size_t>& prefix) {
    // First non-singleton cell in colour order.
    std::vector<std::size_t> count(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) ++count[c[v]];
    std::int64_t target = -1;
    for (std::size_t col = 0; col < n_; ++col)
      if (count[col] > 1) {
        target = static_cast<std::int64_t>(col);
        break;
      }
    if (target < 0) {
      std::vector<std::size_t> order(n_);
      for (std::size_t v = 0; v < n_; ++v) order[c[v]] = v;
      leaf(order);
      return;
    }
    std::vector<std::size_t> cell;
    for (std::size_t v = 0; v < n_; ++v)
      if (c[v] == static_cast<std::uint32_t>(target)) cell.push_back(v);
    std::vector<std::size_t> done;
    for (std::size_t v : cell) {
      if (!done.empty() && in_explored_orbit(v, done, prefix)) continue;
      done.push_back(v);
      prefix.push_back(v);
      search(individualize(c, v), prefix);
      prefix.pop_back();
    }
  }

  void leaf(const std::vector<std::size_t>& order) {
    std::vector<std::uint64_t> cert = certificate(order);
    if (best_order_.empty() || cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = order;
      return;
    }
    if (cert == best_cert_) {
      // order and best_order_ induce the same labelled graph: best∘order^-1.
      std::vector<std::size_t> perm(n_);
      for (std::size_t i = 0; i < n_; ++i) perm[order[i]] = best_order_[i];
      add_generator(std::move(perm));
    }
  }

  void add_generator(std::vector<std::size_t> perm) {
    if (generators_.size() < 256) generators_.push_back(std::move(perm));
  }

  // Is v in the orbit of some vertex of `done` under the subgroup generated
  // by stored automorphisms fixing the prefix pointwise?
  bool in_explored_orbit(std::size_t v, const std::vector<std::size_t>& done,
                         const std::vector<std::size_t>& prefix) const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& p : generators_) {
      bool fixes = true;
      for (std::size_t q : prefix)
        if (p[q] != q) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (std::size_t x = 0; x < n_; ++x) parent[find(x)] = find(p[x]);
    }
    if (!any) return false;
    std::size_t rv = find(v);
    for (std::size_t d : done)
      if (find(d) == rv) return true;
    return false;
  }

  // Same-coloured twins give transpositions in Aut(G).
  void add_twin_generators() {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (init_[a] != init_[b]) continue;
        bool twins = true;
        for (std::size_t w = 0; w < g_.words() && twins; ++w) {
          std::uint64_t ra = g_.row(a)[w], rb = g_.row(b)[w];
          std::uint64_t mask = ~std::uint64_t{0};
          if (w == (a >> 6)) mask &= ~(std::uint64_t{1} << (a & 63));
          if (w == (b >> 6)) mask &= ~(std::uint64_t{1} << (b & 63));
          if ((ra & mask) != (rb & mask)) twins = false;
        }
        if (!twins) continue;
        std::vector<std::size_t> p(n_);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[a], p[b]);
        add_generator(std::move(p));
        break;  // a chain of transpositions suffices to connect a twin class
      }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint32_t> init_;
  std::vector<std::vector<std::size_t>> generators_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<std::size_t> best_order_;
};

std::string encode_form(char tag, const Graph& g, const std::vector<std::uint32_t>& colors,
                        const std::vector<std::size_t>& order) {
  const std::size_t n = g.size();
  std::string out;
  out.push_back(tag);
  out += std::to_string(n) + ":";
  for (std::size_t i = 0; i < n; ++i) out += std::to_string(colors[order[i]]) + ",";
  out.push_back(':');
  unsigned char byte = 0;
  int bits = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      byte = static_cast<unsigned char>((byte << 1) | (g.adj(order[i], order[j]) ? 1 : 0));
      if (++bits == 8) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
        bits = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>(byte << (8 - bits)));
  return out;
}

}  // namespace

std::vector<std::size_t> canonical_labeling(const Graph& g, const std::vector<std::uint32_t>& colors) {
  if (colors.size() != g.size()) throw InvalidArgument("colour vector size mismatch");
  return Labeler(g, colors).run();
}

std::string canonical_form_colored(const Graph& g, const std::vector<std::uint32_t>& colors) {
  return encode_form('I', g, colors, canonical_labeling(g, colors));
}

std::string canonical_form(const Graph& g) {
  if (is_distance_hereditary(g)) return dh_code(g);
  return canonical_form_colored(g, std::vector<std::uint32_t>(g.size(), 0));
}

std::string rooted_canonical_form(const Graph& g, VertexId root) {
  std::vector<std::uint32_t> colors(g.size(), 0);
  colors[g.index(root)] = 1;
  return canonical_form_colored(g, colors);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace limbforge
