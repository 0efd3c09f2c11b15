#include "limbforge/oracles.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "limbforge/caps.hpp"
#include "limbforge/errors.hpp"

namespace limbforge {

namespace {

Bits mask_bits(const Graph& g, std::uint64_t s) {
  Bits b(g.words(), 0);
  b[0] = s;
  return b;
}

void require_small(const Graph& g, std::size_t cap, const char* what) {
  if (g.size() > cap || g.size() > 30)
    throw ResourceLimit(std::string(what) + ": " + std::to_string(g.size()) +
                        " vertices exceeds cap " + std::to_string(cap));
}

}  // namespace

LinearLayout lrw_oracle(const Graph& g) {
  require_small(g, caps().oracle_n, "lrw_oracle");
  const std::size_t n = g.size();
  LinearLayout out;
  out.order = g.ids();
  if (n < 2) return out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint8_t> w(states, 0), best(states, 0);
  for (std::uint64_t s = 1; s < full; ++s) w[s] = static_cast<std::uint8_t>(cut_rank_mask(g, mask_bits(g, s)));
  // best[S]: least achievable max cut-rank over the remaining prefixes.
  best[full] = 0;
  for (std::uint64_t s = full; s-- > 0;) {
    std::uint8_t b = std::numeric_limits<std::uint8_t>::max();
    for (std::size_t v = 0; v < n; ++v) {
      if ((s >> v) & 1U) continue;
      std::uint64_t t = s | (std::uint64_t{1} << v);
      b = std::min(b, std::max(t == full ? std::uint8_t{0} : w[t], best[t]));
    }
    best[s] = b;
  }
  out.width = best[0];
  out.order.clear();
  std::uint64_t s = 0;
  while (s != full) {
    for (std::size_t v = 0; v < n; ++v) {
      if ((s >> v) & 1U) continue;
      std::uint64_t t = s | (std::uint64_t{1} << v);
      if (std::max(t == full ? std::uint8_t{0} : w[t], best[t]) <= out.width) {
        out.order.push_back(g.id(v));
        s = t;
        break;
      }
    }
  }
  return out;
}

bool is_dh_by_distances(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 16) throw ResourceLimit("is_dh_by_distances: too many vertices");
  auto dist_within = [&](std::uint64_t s, std::size_t src) {
    std::vector<int> d(n, -1);
    std::queue<std::size_t> q;
    d[src] = 0;
    q.push(src);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : g.neighbor_indices(u))
        if (((s >> v) & 1U) && d[v] < 0) {
          d[v] = d[u] + 1;
          q.push(v);
        }
    }
    return d;
  };
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::vector<int>> base(n);
  for (std::size_t v = 0; v < n; ++v) base[v] = dist_within(full, v);
  for (std::uint64_t s = 1; s <= full; ++s) {
    std::size_t first = static_cast<std::size_t>(__builtin_ctzll(s));
    auto d0 = dist_within(s, first);
    bool connected = true;
    for (std::size_t v = 0; v < n; ++v)
      if (((s >> v) & 1U) && d0[v] < 0) connected = false;
    if (!connected) continue;
    for (std::size_t u = 0; u < n; ++u) {
      if (!((s >> u) & 1U)) continue;
      auto du = u == first ? d0 : dist_within(s, u);
      for (std::size_t v = 0; v < n; ++v)
        if (((s >> v) & 1U) && du[v] != base[u][v]) return false;
    }
  }
  return true;
}

std::size_t pathwidth_brute(const Graph& g) {
  require_small(g, caps().pw_brute_n, "pathwidth_brute");
  const std::size_t n = g.size();
  if (n == 0) return 0;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> nb(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u : g.neighbor_indices(v)) nb[v] |= std::uint64_t{1} << u;
  std::vector<std::uint8_t> f(std::size_t{1} << n, 0);
  for (std::uint64_t s = 1; s <= full; ++s) {
    std::uint8_t boundary = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (((s >> v) & 1U) && (nb[v] & ~s)) ++boundary;
    std::uint8_t b = std::numeric_limits<std::uint8_t>::max();
    for (std::size_t v = 0; v < n; ++v)
      if ((s >> v) & 1U) b = std::min(b, f[s & ~(std::uint64_t{1} << v)]);
    f[s] = std::max(b, boundary);
  }
  return f[full];
}

bool has_split_brute(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 20) throw ResourceLimit("has_split_brute: too many vertices");
  if (n < 4) return false;
  // Fix vertex n-1 on the Y side to halve the work.
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t x = 1; x < half; ++x) {
    int sz = __builtin_popcountll(x);
    if (sz < 2 || static_cast<std::size_t>(sz) > n - 2) continue;
    if (cut_rank_mask(g, mask_bits(g, x)) == 1) return true;
  }
  return false;
}

}  // namespace limbforge
