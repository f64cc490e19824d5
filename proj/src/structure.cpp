#include "propcon/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "propcon/errors.hpp"

namespace propcon {

namespace {

void require_connected(const Graph& g, const char* op) {
  if (!g.is_connected()) throw ConnectivityError(std::string(op) + " requires a connected graph");
}

}  // namespace

std::vector<int> find_bridges(const Graph& g) {
  require_connected(g, "find_bridges");
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> bridges;
  int timer = 0;
  // DFS low-link; an edge is a bridge iff no back edge jumps over it.
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    for (int e : g.incident_edges(v)) {
      if (e == parent_edge) continue;
      const auto& [a, b] = g.edges()[e];
      const int w = a == v ? b : a;
      if (disc[w] < 0) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridges.push_back(e);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  if (n > 0) dfs(0, -1);
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::vector<std::vector<int>> two_edge_connected_components(const Graph& g) {
  require_connected(g, "two_edge_connected_components");
  const int n = g.vertex_count();
  const auto bridges = find_bridges(g);
  std::vector<char> is_bridge(g.edge_count(), 0);
  for (int e : bridges) is_bridge[e] = 1;
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.push_back({});
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int e : g.incident_edges(v)) {
        if (is_bridge[e]) continue;
        const auto& [a, b] = g.edges()[e];
        const int w = a == v ? b : a;
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  // Scanning sources in ascending order already yields smallest-member order.
  return out;
}

BridgeTree build_bridge_tree(const Graph& g) {
  require_connected(g, "build_bridge_tree");
  BridgeTree t;
  t.bridges = find_bridges(g);
  auto comps = two_edge_connected_components(g);
  t.node_of.assign(g.vertex_count(), -1);
  for (int id = 0; id < static_cast<int>(comps.size()); ++id) {
    for (int v : comps[id]) t.node_of[v] = id;
    t.nodes.push_back({comps[id].size() == 1, std::move(comps[id])});
  }
  std::vector<int> deg(t.nodes.size(), 0);
  for (int e : t.bridges) {
    const auto& [u, v] = g.edges()[e];
    t.tree_edges.emplace_back(t.node_of[u], t.node_of[v]);
    ++deg[t.node_of[u]];
    ++deg[t.node_of[v]];
  }
  t.max_node_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  return t;
}

std::optional<std::vector<int>> hamiltonian_path(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw UnsupportedSizeError("hamiltonian_path bitmask DP is capped at 20 vertices");
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<int>{0};
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint32_t(1) << e.v;
    adj[e.v] |= std::uint32_t(1) << e.u;
  }
  const std::uint32_t full = (std::uint32_t(1) << n) - 1;
  std::vector<std::uint32_t> dp(std::size_t(1) << n, 0);  // dp[mask] = possible endpoints
  for (int v = 0; v < n; ++v) dp[std::uint32_t(1) << v] = std::uint32_t(1) << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = dp[mask];
    while (ends) {
      const int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t nxt = adj[v] & ~mask;
      while (nxt) {
        const int w = std::countr_zero(nxt);
        nxt &= nxt - 1;
        dp[mask | std::uint32_t(1) << w] |= std::uint32_t(1) << w;
      }
    }
  }
  if (!dp[full]) return std::nullopt;
  // Walk the DP backwards to reconstruct one path.
  std::vector<int> path;
  std::uint32_t mask = full;
  int v = std::countr_zero(dp[full]);
  while (true) {
    path.push_back(v);
    const std::uint32_t rest = mask & ~(std::uint32_t(1) << v);
    if (!rest) break;
    std::uint32_t prev = dp[rest] & adj[v];
    v = std::countr_zero(prev);  // nonzero by DP construction
    mask = rest;
  }
  std::reverse(path.begin(), path.end());
  if (static_cast<int>(path.size()) != n) throw Error("internal: hamiltonian path reconstruction failed");
  for (size_t i = 1; i < path.size(); ++i)
    if (!g.has_edge(path[i - 1], path[i])) throw Error("internal: hamiltonian path not verified");
  return path;
}

PathCycleProfile path_cycle_profile(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 14) throw UnsupportedSizeError("path_cycle_profile bitmask DP is capped at 14 vertices");
  if (n == 0) return {0, 0, false, false};
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint32_t(1) << e.v;
    adj[e.v] |= std::uint32_t(1) << e.u;
  }
  const std::uint32_t full = (std::uint32_t(1) << n) - 1;
  // any[mask]: endpoints of paths covering mask (any start vertex);
  // low[mask]: endpoints of paths covering mask that start at its lowest bit.
  std::vector<std::uint32_t> any(std::size_t(1) << n, 0), low(std::size_t(1) << n, 0);
  for (int v = 0; v < n; ++v) {
    any[std::uint32_t(1) << v] = std::uint32_t(1) << v;
    low[std::uint32_t(1) << v] = std::uint32_t(1) << v;
  }
  int p = 1, c = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (any[mask]) p = std::max(p, std::popcount(mask));
    const int lsb = std::countr_zero(mask);
    std::uint32_t ends = low[mask];
    if (ends && std::popcount(mask) >= 3)
      if (ends & adj[lsb]) c = std::max(c, std::popcount(mask));
    while (ends) {
      const int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t nxt = adj[v] & ~mask;
      while (nxt) {
        const int w = std::countr_zero(nxt);
        nxt &= nxt - 1;
        if (w > lsb) low[mask | std::uint32_t(1) << w] |= std::uint32_t(1) << w;
      }
    }
    std::uint32_t aends = any[mask];
    while (aends) {
      const int v = std::countr_zero(aends);
      aends &= aends - 1;
      std::uint32_t nxt = adj[v] & ~mask;
      while (nxt) {
        const int w = std::countr_zero(nxt);
        nxt &= nxt - 1;
        any[mask | std::uint32_t(1) << w] |= std::uint32_t(1) << w;
      }
    }
  }
  return {p, c, p == n, c == n};
}

DiracOreFlags dirac_ore_flags(const Graph& g) {
  const int n = g.vertex_count();
  const int delta = g.min_degree();
  DiracOreFlags f{};
  f.dirac_path = 2 * delta >= n - 1;
  f.dirac_cycle = n >= 3 && 2 * delta >= n;
  f.dirac_hamiltonian_connected = n >= 3 && 2 * delta >= n + 1;
  f.ore_cycle = n >= 3;
  for (int u = 0; u < n && f.ore_cycle; ++u)
    for (int v = u + 1; v < n && f.ore_cycle; ++v)
      if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < n) f.ore_cycle = false;
  const long long half = static_cast<long long>(n - 1) * (n - 2) / 2;
  f.size_hamiltonian = n >= 3 && g.edge_count() >= half + 2;
  return f;
}

}  // namespace propcon
