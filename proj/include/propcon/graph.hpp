#pragma once

#include <string>
#include <vector>

namespace propcon {

struct Edge {
  int u, v;  // normalized to u < v
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1. Edges are stored
// sorted by (u, v); an edge's position in that list is its stable index, which
// is what colorings refer to.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(int n, std::vector<Edge> edges);
  static Graph empty(int n);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int n);  // K_{1,n-1}: vertex 0 is the hub

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  int edge_index(int u, int v) const;  // -1 when absent
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<int>& incident_edges(int v) const { return inc_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;
  int max_degree() const;
  bool is_connected() const;
  bool is_complete() const;
  bool is_tree() const;
  Graph without_vertex(int v) const;  // labels above v shift down by one
  friend bool operator==(const Graph&, const Graph&);  // same labeled graph

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
  std::vector<std::vector<int>> inc_;  // incident edge indices, ascending
};

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);  // union plus all g-h edges

// graph6, short form only (n <= 62).
Graph parse_graph6(const std::string& line);
std::string emit_graph6(const Graph& g);

// Plain text edge list: first line "n <count>", then one "u v" line per edge.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// Vertex i of g becomes vertex perm[i] of the result.
Graph relabeled(const Graph& g, const std::vector<int>& perm);

// Canonical graph6 string: the lexicographically minimal adjacency bit string
// over all relabelings, re-encoded as graph6. Exhaustive regime, n <= 10.
std::string canonical_form(const Graph& g);

// Exact isomorphism test (backtracking); intended for desk-scale graphs.
bool are_isomorphic(const Graph& g, const Graph& h);

struct BasicStats {
  int n, m, min_degree, max_degree;
  bool connected, complete;
};
BasicStats basic_stats(const Graph& g);

}  // namespace propcon
