#include "propcon/coloring.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "propcon/errors.hpp"
#include "propcon/structure.hpp"

namespace propcon {

namespace {

constexpr int kTraceableMaxN = 20;  // hamiltonian_path DP regime
constexpr int kSearchMaxEdges = 28;

struct AdjEntry {
  int to, edge;
};

// Adjacency restricted to an active edge subset, plus the colors in play.
struct View {
  int n = 0, k = 0;
  std::vector<std::vector<AdjEntry>> adj;
  const int* color = nullptr;  // by edge index

  int state(int v, int c) const { return v * k + (c - 1); }
};

View make_view(const Graph& g, const std::vector<int>& color, const std::vector<char>* active, int k) {
  View view;
  view.n = g.vertex_count();
  view.k = std::max(k, 1);
  view.color = color.data();
  view.adj.assign(view.n, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    if (active && !(*active)[e]) continue;
    const auto& [u, v] = g.edges()[e];
    view.adj[u].push_back({v, e});
    view.adj[v].push_back({u, e});
  }
  return view;
}

// BFS over (vertex, last color) states. seen[] doubles as the walk
// reachability table: seen[state(v,c)] != 0 iff some proper walk from src
// arrives at v with last color c; by reversal that equals "a proper walk from
// v to src may start with color c".
struct StateBfs {
  std::vector<int> parent_state;  // -1 means the walk starts at src
  std::vector<int> parent_vertex;
  std::vector<int> order;  // states in discovery order
  std::vector<char> seen;
  std::vector<char> vertex_reached;

  void run(const View& view, int src) {
    const int states = view.n * view.k;
    parent_state.assign(states, -2);
    parent_vertex.assign(states, -1);
    seen.assign(states, 0);
    vertex_reached.assign(view.n, 0);
    order.clear();
    vertex_reached[src] = 1;
    for (const auto& [w, e] : view.adj[src]) {
      const int s = view.state(w, view.color[e]);
      if (seen[s]) continue;
      seen[s] = 1;
      parent_state[s] = -1;
      parent_vertex[s] = src;
      vertex_reached[w] = 1;
      order.push_back(s);
    }
    for (size_t head = 0; head < order.size(); ++head) {
      const int s = order[head];
      const int v = s / view.k;
      const int c = s % view.k + 1;
      for (const auto& [w, e] : view.adj[v]) {
        const int b = view.color[e];
        if (b == c) continue;
        const int s2 = view.state(w, b);
        if (seen[s2]) continue;
        seen[s2] = 1;
        parent_state[s2] = s;
        parent_vertex[s2] = v;
        vertex_reached[w] = 1;
        order.push_back(s2);
      }
    }
  }

  // Walk ending at `state`, as a vertex sequence from src. Empty when the walk
  // revisits a vertex (i.e. it is not a simple path).
  std::vector<int> simple_walk_to(const View& view, int state) const {
    std::vector<int> rev;
    int s = state;
    rev.push_back(s / view.k);
    while (s >= 0) {
      rev.push_back(parent_vertex[s]);
      s = parent_state[s];
    }
    std::vector<char> hit(view.n, 0);
    for (int v : rev) {
      if (hit[v]) return {};
      hit[v] = 1;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }
};

// Exact search for a proper simple path u -> v. `from_v` must hold a finished
// BFS from v; its reachability prunes branches that cannot even continue as a
// walk.
bool dfs_proper_path(const View& view, int u, int v, const StateBfs& from_v, std::vector<char>& visited,
                     int at, int last_color, std::vector<int>* out) {
  for (const auto& [w, e] : view.adj[at]) {
    const int c = view.color[e];
    if (c == last_color || visited[w]) continue;
    if (w == v) {
      if (out) out->push_back(w);
      return true;
    }
    bool walkable = false;
    for (int b = 1; b <= view.k && !walkable; ++b)
      if (b != c && from_v.seen[view.state(w, b)]) walkable = true;
    if (!walkable) continue;
    visited[w] = 1;
    if (dfs_proper_path(view, u, v, from_v, visited, w, c, out)) {
      if (out) out->push_back(w);
      return true;
    }
    visited[w] = 0;
  }
  return false;
}

// Shared pair decision: walk reachability first, then a simple shortest walk
// as a positive certificate, exact DFS as the tie-breaker.
bool pair_has_proper_path(const View& view, const StateBfs& from_u, int u, int v, StateBfs& scratch,
                          std::vector<int>* witness) {
  if (!from_u.vertex_reached[v]) return false;
  for (int s : from_u.order) {
    if (s / view.k != v) continue;
    auto walk = from_u.simple_walk_to(view, s);
    if (!walk.empty()) {
      if (witness) *witness = std::move(walk);
      return true;
    }
  }
  scratch.run(view, v);
  std::vector<char> visited(view.n, 0);
  visited[u] = 1;
  std::vector<int> rev;
  if (!dfs_proper_path(view, u, v, scratch, visited, u, 0, witness ? &rev : nullptr)) return false;
  if (witness) {
    rev.push_back(u);
    std::reverse(rev.begin(), rev.end());
    *witness = std::move(rev);
  }
  return true;
}

bool properly_connected_view(const View& view, StateBfs& bfs, StateBfs& scratch) {
  for (int u = 0; u < view.n - 1; ++u) {
    bfs.run(view, u);
    for (int v = u + 1; v < view.n; ++v)
      if (!pair_has_proper_path(view, bfs, u, v, scratch, nullptr)) return false;
  }
  return true;
}

void validate_total(const Graph& g, const EdgeColoring& c, const char* op) {
  if (static_cast<int>(c.assignment.size()) != g.edge_count())
    throw ContractError(std::string(op) + ": coloring covers " + std::to_string(c.assignment.size()) +
                        " edges, graph has " + std::to_string(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e)
    if (c.assignment[e] < 1 || c.assignment[e] > c.colors)
      throw ContractError(std::string(op) + ": edge " + std::to_string(e) + " has color " +
                          std::to_string(c.assignment[e]) + ", valid range is 1.." +
                          std::to_string(c.colors));
}

// BFS spanning tree from vertex 0: edge indices in discovery order, plus the
// tree's maximum degree.
std::pair<std::vector<int>, int> bfs_tree(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> tree;
  std::vector<int> tree_deg(n, 0);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int e : g.incident_edges(v)) {
      const auto& [a, b] = g.edges()[e];
      const int w = a == v ? b : a;
      if (seen[w]) continue;
      seen[w] = 1;
      tree.push_back(e);
      ++tree_deg[v];
      ++tree_deg[w];
      q.push(w);
    }
  }
  return {std::move(tree), n ? *std::max_element(tree_deg.begin(), tree_deg.end()) : 0};
}

}  // namespace

const char* to_string(PcMethod m) {
  switch (m) {
    case PcMethod::complete: return "complete";
    case PcMethod::tree: return "tree";
    case PcMethod::traceable: return "traceable";
    case PcMethod::search: return "search";
  }
  return "?";
}

bool is_properly_connected(const Graph& g, const EdgeColoring& c) {
  if (!g.is_connected()) throw ConnectivityError("is_properly_connected requires a connected graph");
  validate_total(g, c, "is_properly_connected");
  if (g.vertex_count() <= 1) return true;
  View view = make_view(g, c.assignment, nullptr, c.colors);
  StateBfs bfs, scratch;
  return properly_connected_view(view, bfs, scratch);
}

std::optional<std::vector<int>> proper_path_witness(const Graph& g, const EdgeColoring& c, int u, int v) {
  if (!g.is_connected()) throw ConnectivityError("proper_path_witness requires a connected graph");
  validate_total(g, c, "proper_path_witness");
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n || u == v)
    throw ContractError("proper_path_witness needs two distinct vertices in range");
  View view = make_view(g, c.assignment, nullptr, c.colors);
  StateBfs bfs, scratch;
  bfs.run(view, u);
  std::vector<int> path;
  if (!pair_has_proper_path(view, bfs, u, v, scratch, &path)) return std::nullopt;
  return path;
}

EdgeColoring color_tree(const Graph& g) {
  if (!g.is_tree()) throw ContractError("color_tree requires a tree");
  EdgeColoring c;
  c.colors = g.max_degree();
  c.assignment.assign(g.edge_count(), 0);
  std::vector<int> parent_color(g.vertex_count(), 0);
  std::queue<int> q;
  std::vector<char> seen(std::max(g.vertex_count(), 1), 0);
  if (g.vertex_count() > 0) {
    seen[0] = 1;
    q.push(0);
  }
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    int next = 1;
    for (int e : g.incident_edges(v)) {
      const auto& [a, b] = g.edges()[e];
      const int w = a == v ? b : a;
      if (seen[w]) continue;
      if (next == parent_color[v]) ++next;
      c.assignment[e] = next++;
      parent_color[w] = c.assignment[e];
      seen[w] = 1;
      q.push(w);
    }
  }
  return c;
}

EdgeColoring color_traceable(const Graph& g, const std::vector<int>& ham_path) {
  const int n = g.vertex_count();
  if (static_cast<int>(ham_path.size()) != n)
    throw ContractError("color_traceable: path does not cover every vertex");
  std::vector<char> hit(n, 0);
  for (int v : ham_path) {
    if (v < 0 || v >= n || hit[v]) throw ContractError("color_traceable: not a Hamiltonian path");
    hit[v] = 1;
  }
  EdgeColoring c;
  c.colors = 2;
  c.assignment.assign(g.edge_count(), 1);
  for (int i = 0; i + 1 < n; ++i) {
    const int e = g.edge_index(ham_path[i], ham_path[i + 1]);
    if (e < 0) throw ContractError("color_traceable: consecutive path vertices not adjacent");
    c.assignment[e] = i % 2 + 1;
  }
  return c;
}

namespace {

// Exhaustive search tier of decide_pc_le_k. Edges are visited tree-first;
// once the spanning tree is colored, every deeper node re-checks the active
// subgraph and accepts early.
struct PcSearch {
  const Graph* g;
  int k, n, m;
  std::vector<int> order;    // edge visit order
  std::vector<int> color;    // by edge index; 0 = unassigned
  std::vector<char> active;  // by edge index
  StateBfs bfs, scratch;

  bool accept_check() {
    View view = make_view(*g, color, &active, k);
    return properly_connected_view(view, bfs, scratch);
  }

  bool dfs(int depth, int max_used) {
    const int e = order[depth];
    const int limit = std::min(k, max_used + 1);
    active[e] = 1;
    for (int c = 1; c <= limit; ++c) {
      color[e] = c;
      const int used = std::max(max_used, c);
      if (depth + 1 >= n - 1 && accept_check()) {
        for (int rest = depth + 1; rest < m; ++rest) color[order[rest]] = 1;
        return true;
      }
      if (depth + 1 < m && dfs(depth + 1, used)) return true;
    }
    color[e] = 0;
    active[e] = 0;
    return false;
  }
};

}  // namespace

std::optional<EdgeColoring> decide_pc_le_k(const Graph& g, int k) {
  if (k < 1) throw ContractError("decide_pc_le_k needs k >= 1");
  if (!g.is_connected()) throw ConnectivityError("decide_pc_le_k requires a connected graph");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (g.is_complete()) return EdgeColoring{1, std::vector<int>(m, 1)};
  if (k == 1) return std::nullopt;  // pc = 1 only for complete graphs
  if (g.is_tree()) {
    if (g.max_degree() > k) return std::nullopt;
    return color_tree(g);
  }
  if (n <= kTraceableMaxN)
    if (auto hp = hamiltonian_path(g)) return color_traceable(g, *hp);
  if (m > kSearchMaxEdges)
    throw UnsupportedSizeError("exact pc search is capped at " + std::to_string(kSearchMaxEdges) +
                               " edges (m = " + std::to_string(m) + ")");
  PcSearch s;
  s.g = &g;
  s.k = k;
  s.n = n;
  s.m = m;
  auto [tree, tree_delta] = bfs_tree(g);
  (void)tree_delta;
  std::vector<char> in_tree(m, 0);
  for (int e : tree) in_tree[e] = 1;
  s.order = tree;
  for (int e = 0; e < m; ++e)
    if (!in_tree[e]) s.order.push_back(e);
  s.color.assign(m, 0);
  s.active.assign(m, 0);
  if (!s.dfs(0, 0)) return std::nullopt;
  EdgeColoring c;
  c.colors = *std::max_element(s.color.begin(), s.color.end());
  c.assignment = std::move(s.color);
  return c;
}

PcResult pc_exact(const Graph& g) {
  if (!g.is_connected()) throw ConnectivityError("pc_exact requires a connected graph");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (g.is_complete()) return {1, EdgeColoring{1, std::vector<int>(m, 1)}, PcMethod::complete};
  if (g.is_tree()) return {g.max_degree(), color_tree(g), PcMethod::tree};
  if (n <= kTraceableMaxN)
    if (auto hp = hamiltonian_path(g))
      return {2, color_traceable(g, *hp), PcMethod::traceable};  // pc >= 2: not complete
  // Guaranteed ceiling: properly color any spanning tree and give chords
  // color 1; so iterating k up to the BFS tree's max degree must succeed.
  const int cap = bfs_tree(g).second;
  for (int k = 2; k <= cap; ++k)
    if (auto w = decide_pc_le_k(g, k)) return {k, std::move(*w), PcMethod::search};
  throw Error("internal: pc search exceeded its spanning-tree ceiling");
}

bool pc_at_most_two_by_deletion(const Graph& g) {
  if (!g.is_connected()) throw ConnectivityError("pc_at_most_two_by_deletion requires a connected graph");
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) continue;
    Graph h = g.without_vertex(v);
    if (h.vertex_count() == 0 || !h.is_connected()) continue;
    if (decide_pc_le_k(h, 2)) return true;
  }
  return false;
}

EdgeColoring parse_coloring(const std::string& text, const Graph& g) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  EdgeColoring c;
  bool have_header = false;
  std::vector<char> covered(g.edge_count(), 0);
  c.assignment.assign(g.edge_count(), 0);
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first, extra;
    if (!(ls >> first)) continue;
    if (!have_header) {
      if (first != "k" || !(ls >> c.colors) || (ls >> extra) || c.colors < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected header \"k <K>\"", lineno);
      have_header = true;
      continue;
    }
    int u, v, col;
    std::istringstream cl(line);
    if (!(cl >> u >> v >> col) || (cl >> extra))
      throw ParseError("line " + std::to_string(lineno) + ": expected \"u v c\"", lineno);
    const int e = g.edge_index(u, v);
    if (e < 0)
      throw ParseError("line " + std::to_string(lineno) + ": graph has no edge (" + std::to_string(u) +
                           "," + std::to_string(v) + ")",
                       lineno);
    if (covered[e])
      throw ParseError("line " + std::to_string(lineno) + ": edge colored twice", lineno);
    if (col < 1 || col > c.colors)
      throw ParseError("line " + std::to_string(lineno) + ": color " + std::to_string(col) +
                           " outside 1.." + std::to_string(c.colors),
                       lineno);
    covered[e] = 1;
    c.assignment[e] = col;
  }
  if (!have_header) throw ParseError("missing header line \"k <K>\"", 1);
  for (int e = 0; e < g.edge_count(); ++e)
    if (!covered[e])
      throw ParseError("edge (" + std::to_string(g.edges()[e].u) + "," + std::to_string(g.edges()[e].v) +
                           ") never colored",
                       lineno + 1);
  return c;
}

std::string emit_coloring(const Graph& g, const EdgeColoring& c) {
  std::ostringstream out;
  out << "k " << c.colors << "\n";
  for (int e = 0; e < g.edge_count(); ++e)
    out << g.edges()[e].u << " " << g.edges()[e].v << " " << c.assignment[e] << "\n";
  return out.str();
}

}  // namespace propcon
