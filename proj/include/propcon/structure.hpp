#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "propcon/graph.hpp"

namespace propcon {

// Edge indices of all bridges, ascending. Requires a connected graph.
std::vector<int> find_bridges(const Graph& g);

// Vertex sets of the components of G minus its bridges, each sorted, ordered
// by smallest member. Requires a connected graph.
std::vector<std::vector<int>> two_edge_connected_components(const Graph& g);

struct BridgeTreeNode {
  bool singleton;             // true when the component is a single vertex
  std::vector<int> vertices;  // sorted
};

// The tree G*: one node per 2-edge-connected component, one tree edge per
// bridge. For a connected input it has (#bridges + 1) nodes.
struct BridgeTree {
  std::vector<BridgeTreeNode> nodes;              // ordered by smallest contained vertex
  std::vector<int> node_of;                       // vertex -> node id
  std::vector<int> bridges;                       // edge indices, ascending
  std::vector<std::pair<int, int>> tree_edges;    // node-id pairs, aligned with bridges
  int max_node_degree = 0;                        // Delta(G*)
};

BridgeTree build_bridge_tree(const Graph& g);

// Bitmask DP, n <= 20. Returns a verified path visiting every vertex, if any.
std::optional<std::vector<int>> hamiltonian_path(const Graph& g);

struct PathCycleProfile {
  int longest_path;         // p(G), counted in vertices
  int circumference;        // c(G); 0 for forests
  bool has_hamiltonian_path;
  bool has_hamiltonian_cycle;
};

// Exact longest path and cycle by bitmask DP, n <= 14.
PathCycleProfile path_cycle_profile(const Graph& g);

struct DiracOreFlags {
  bool dirac_path;                  // 2*delta >= n-1: Hamiltonian path guaranteed
  bool dirac_cycle;                 // n >= 3 and 2*delta >= n
  bool dirac_hamiltonian_connected; // n >= 3 and 2*delta >= n+1
  bool ore_cycle;                   // n >= 3, nonadjacent degree sums >= n
  bool size_hamiltonian;            // |E| >= C(n-1,2) + 2
};

DiracOreFlags dirac_ore_flags(const Graph& g);

}  // namespace propcon
