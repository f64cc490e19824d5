#include "propcon/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "propcon/errors.hpp"

namespace propcon {

namespace {

std::string fmt_vertex_pair(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 1) throw ContractError("graph needs at least one vertex");
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw ContractError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n)
      throw ContractError("edge " + fmt_vertex_pair(e.u, e.v) + " out of range for n=" + std::to_string(n));
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw ContractError("duplicate edge " + fmt_vertex_pair(edges[i].u, edges[i].v));

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  g.inc_.assign(n, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges_[e];
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.inc_[u].push_back(e);
    g.inc_[v].push_back(e);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

Graph Graph::empty(int n) { return from_edges(n, {}); }

Graph Graph::complete(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return from_edges(n, std::move(es));
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back({v - 1, v});
  return from_edges(n, std::move(es));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw ContractError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back({v - 1, v});
  es.push_back({0, n - 1});
  return from_edges(n, std::move(es));
}

Graph Graph::star(int n) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back({0, v});
  return from_edges(n, std::move(es));
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || u == v) return -1;
  Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  if (it == edges_.end() || !(*it == key)) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

bool Graph::is_complete() const {
  return static_cast<long long>(edge_count()) * 2 == static_cast<long long>(n_) * (n_ - 1);
}

bool Graph::is_tree() const { return edge_count() == n_ - 1 && is_connected(); }

Graph Graph::without_vertex(int v) const {
  if (v < 0 || v >= n_) throw ContractError("vertex " + std::to_string(v) + " out of range");
  std::vector<Edge> es;
  for (const auto& e : edges_) {
    if (e.u == v || e.v == v) continue;
    es.push_back({e.u - (e.u > v), e.v - (e.v > v)});
  }
  return from_edges(n_ - 1, std::move(es));
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.edges_ == b.edges_;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> es = g.edges();
  for (const auto& e : h.edges()) es.push_back({e.u + g.vertex_count(), e.v + g.vertex_count()});
  return Graph::from_edges(g.vertex_count() + h.vertex_count(), std::move(es));
}

Graph join(const Graph& g, const Graph& h) {
  std::vector<Edge> es = disjoint_union(g, h).edges();
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = 0; v < h.vertex_count(); ++v) es.push_back({u, g.vertex_count() + v});
  return Graph::from_edges(g.vertex_count() + h.vertex_count(), std::move(es));
}

// ---- graph6 ----------------------------------------------------------------

Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw ParseError("empty graph6 line", 0);
  const unsigned char header = static_cast<unsigned char>(line[0]);
  if (header == 126) throw ParseError("long-form graph6 header (byte 0) not supported", 0);
  if (header < 63 || header > 126)
    throw ParseError("graph6 byte 0 out of range: " + std::to_string(int(header)), 0);
  const int n = header - 63;
  const int bits = n * (n - 1) / 2;
  const size_t expected = 1 + (bits + 5) / 6;
  if (line.size() != expected)
    throw ParseError("graph6 line for n=" + std::to_string(n) + " must be " + std::to_string(expected) +
                         " bytes, got " + std::to_string(line.size()),
                     static_cast<long>(std::min(line.size(), expected)));
  std::vector<Edge> es;
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      const size_t byte = 1 + bit / 6;
      const unsigned char c = static_cast<unsigned char>(line[byte]);
      if (c < 63 || c > 126)
        throw ParseError("graph6 byte " + std::to_string(byte) + " out of range: " + std::to_string(int(c)),
                         static_cast<long>(byte));
      if ((c - 63) >> (5 - bit % 6) & 1) es.push_back({u, v});
    }
  return Graph::from_edges(n, std::move(es));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw UnsupportedSizeError("graph6 short form is capped at 62 vertices");
  const int bits = n * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, char(63));
  out[0] = static_cast<char>(63 + n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.has_edge(u, v)) out[1 + bit / 6] += char(1 << (5 - bit % 6));
  return out;
}

// ---- edge list -------------------------------------------------------------

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  int n = 0;
  bool have_header = false;
  std::vector<Edge> es;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first, extra;
    if (!(ls >> first)) continue;  // blank line
    if (!have_header) {
      if (first != "n" || !(ls >> n) || (ls >> extra) || n < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected header \"n <count>\"", lineno);
      have_header = true;
      continue;
    }
    int u, v;
    std::istringstream es_line(line);
    if (!(es_line >> u >> v) || (es_line >> extra))
      throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"", lineno);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("line " + std::to_string(lineno) + ": vertex out of range for n=" + std::to_string(n),
                       lineno);
    if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop", lineno);
    Edge e{std::min(u, v), std::max(u, v)};
    for (const auto& prev : es)
      if (prev == e)
        throw ParseError("line " + std::to_string(lineno) + ": duplicate edge " + fmt_vertex_pair(e.u, e.v),
                         lineno);
    es.push_back(e);
  }
  if (!have_header) throw ParseError("missing header line \"n <count>\"", 1);
  return Graph::from_edges(n, std::move(es));
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

// ---- relabeling, canonical form, isomorphism -------------------------------

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw ContractError("permutation length mismatch");
  std::vector<char> hit(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) throw ContractError("not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> es;
  es.reserve(g.edge_count());
  for (const auto& e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
  return Graph::from_edges(n, std::move(es));
}

namespace {

// Branch-and-bound search for the permutation minimizing the column-wise
// adjacency bit string (same bit order graph6 uses). Positions are filled left
// to right; placing position j fixes column j, so a prefix comparison against
// the best-so-far prunes whole subtrees.
struct CanonSearch {
  int n = 0;
  std::array<std::uint64_t, 10> row{};  // adjacency rows over original labels
  std::array<int, 10> order{};          // candidate order (degree ascending)
  std::array<int, 10> cur{}, best{};
  std::array<std::uint32_t, 10> cur_col{}, best_col{};
  std::uint16_t used = 0;
  bool have_best = false;

  // -1 / 0 / 1: cur_col[0..len) versus best_col[0..len). best_col only ever
  // shrinks lexicographically, so comparing against the live best is always
  // safe; a cached verdict would go stale the moment a descendant updates it.
  int prefix_cmp(int len) const {
    for (int i = 0; i < len; ++i) {
      if (cur_col[i] < best_col[i]) return -1;
      if (cur_col[i] > best_col[i]) return 1;
    }
    return 0;
  }

  void dfs(int pos) {
    if (pos == n) {
      if (!have_best || prefix_cmp(n) < 0) {
        best = cur;
        best_col = cur_col;
        have_best = true;
      }
      return;
    }
    for (int idx = 0; idx < n; ++idx) {
      const int cand = order[idx];
      if (used >> cand & 1) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < pos; ++i) col = col << 1 | (row[cur[i]] >> cand & 1);
      cur[pos] = cand;
      cur_col[pos] = col;
      if (have_best && prefix_cmp(pos + 1) > 0) continue;
      used |= std::uint16_t(1) << cand;
      dfs(pos + 1);
      used &= ~(std::uint16_t(1) << cand);
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 10) throw UnsupportedSizeError("canonical form uses exhaustive relabeling, capped at 10 vertices");
  if (n == 0) return emit_graph6(g);
  CanonSearch s;
  s.n = n;
  for (const auto& e : g.edges()) {
    s.row[e.u] |= std::uint64_t(1) << e.v;
    s.row[e.v] |= std::uint64_t(1) << e.u;
  }
  std::iota(s.order.begin(), s.order.begin() + n, 0);
  std::sort(s.order.begin(), s.order.begin() + n,
            [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b; });
  s.dfs(0);
  std::vector<int> perm(n);  // original vertex -> canonical position
  for (int pos = 0; pos < n; ++pos) perm[s.best[pos]] = pos;
  return emit_graph6(relabeled(g, perm));
}

namespace {

bool extend_mapping(const Graph& g, const Graph& h, std::vector<int>& map, std::vector<char>& taken, int v) {
  const int n = g.vertex_count();
  if (v == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (taken[cand] || h.degree(cand) != g.degree(v)) continue;
    bool ok = true;
    for (int w : g.neighbors(v)) {
      if (w > v) continue;  // only earlier vertices are mapped
      if (!h.has_edge(map[w], cand)) {
        ok = false;
        break;
      }
    }
    if (ok)  // also reject extra edges among mapped vertices
      for (int w = 0; w < v && ok; ++w)
        if (!g.has_edge(w, v) && h.has_edge(map[w], cand)) ok = false;
    if (!ok) continue;
    map[v] = cand;
    taken[cand] = 1;
    if (extend_mapping(g, h, map, taken, v + 1)) return true;
    taken[cand] = 0;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  const int n = g.vertex_count();
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<int> map(n, -1);
  std::vector<char> taken(n, 0);
  return extend_mapping(g, h, map, taken, 0);
}

BasicStats basic_stats(const Graph& g) {
  return {g.vertex_count(), g.edge_count(), g.min_degree(), g.max_degree(), g.is_connected(),
          g.is_complete()};
}

}  // namespace propcon
