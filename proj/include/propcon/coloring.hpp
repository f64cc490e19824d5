#pragma once

#include <optional>
#include <string>
#include <vector>

#include "propcon/graph.hpp"

namespace propcon {

// Total edge coloring: assignment[e] in 1..colors for every edge index e.
struct EdgeColoring {
  int colors = 0;
  std::vector<int> assignment;
};

// True iff every vertex pair is joined by a simple path whose consecutive
// edges all differ in color. Decided by (vertex, last-color) state BFS, which
// settles almost every pair; the rare pair whose shortest proper walk revisits
// a vertex falls back to an exact search over simple paths (a proper walk does
// not always imply a proper path).
bool is_properly_connected(const Graph& g, const EdgeColoring& c);

// A verified proper simple path from u to v, absent when none exists.
std::optional<std::vector<int>> proper_path_witness(const Graph& g, const EdgeColoring& c, int u, int v);

// Proper edge coloring of a tree with exactly max_degree colors; the unique
// tree paths are then all proper.
EdgeColoring color_tree(const Graph& g);

// Alternates colors 1,2 along a Hamiltonian path, color 1 elsewhere.
EdgeColoring color_traceable(const Graph& g, const std::vector<int>& ham_path);

// Smallest number of colors in any properly connecting coloring, with witness.
enum class PcMethod { complete, tree, traceable, search };
const char* to_string(PcMethod m);

struct PcResult {
  int pc;
  EdgeColoring witness;
  PcMethod method;
};

// Exact decision "pc(g) <= k?" with witness. Fast paths: complete graphs,
// trees, traceable graphs (k >= 2). Otherwise exhaustive search over
// colorings, spanning-tree edges first, first edge pinned, each edge allowed
// at most one brand-new color, accepting as soon as the colored spanning
// subgraph is properly connected (edge additions never hurt). Search regime
// is capped at 28 edges.
std::optional<EdgeColoring> decide_pc_le_k(const Graph& g, int k);

PcResult pc_exact(const Graph& g);

// Decision-level shortcut: some vertex v with d(v) >= 2 leaves a connected
// g - v with pc <= 2, which forces pc(g) <= 2. Boolean only; it cannot
// produce a witness for g itself.
bool pc_at_most_two_by_deletion(const Graph& g);

// Coloring text format: header "k <K>", then one "u v c" line per edge,
// covering every edge exactly once.
EdgeColoring parse_coloring(const std::string& text, const Graph& g);
std::string emit_coloring(const Graph& g, const EdgeColoring& c);

}  // namespace propcon
