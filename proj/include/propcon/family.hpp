#pragma once

#include <string>

#include "propcon/graph.hpp"

namespace propcon {

// Named graph families. The last five are the extremal constructions that sit
// at (or one edge under) the size thresholds in bounds.hpp:
//   g-star-1 = K1 v (2K1 + K2)            order 5
//   g-star-2 = K1 v (K1 + 2K2)            order 6
//   g-1      = K1 v 3K2                   order 7
//   g-n      = K_{n-5} bridged to the hub of K1 v 2K2, n >= 8
//   g-k      = K_{n-(k+1)(d+1)} with k+1 copies of K_{d+1}, each hung off
//              vertex 0 of the big clique by one bridge
enum class FamilyTag { complete, path, cycle, star, g_star_1, g_star_2, g_1, g_n, g_k };

struct GraphFamily {
  FamilyTag tag;
  int n = 0;      // order; ignored by the fixed families
  int k = 0;      // g-k only
  int delta = 0;  // g-k only
};

Graph build_family(const GraphFamily& f);

Graph make_g_star_1();
Graph make_g_star_2();
Graph make_g1();
Graph make_gn(int n);
Graph make_gk(int n, int k, int delta);

// Accepts "g-1", "g1", "g-star-1", "gstar1", ... (dashes optional).
FamilyTag parse_family_tag(const std::string& name);
std::string family_tag_name(FamilyTag tag);

}  // namespace propcon
