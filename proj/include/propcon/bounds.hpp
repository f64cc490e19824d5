#pragma once

#include <string>

#include "propcon/graph.hpp"

namespace propcon {

// C(a,2) with the convention that it is 0 for a < 2.
long long binomial2(long long a);

struct BoundResult {
  long long value;
  long long m_used;     // value the m-rule picked; 0 where no m-rule applies
  std::string formula;  // instantiated formula, for humans
};

// Maximum size of a connected graph of order n with exactly t bridges:
// simple form C(n-t,2) + t, and the refined form
//   C(n - m - (t-m)(delta+1), 2) + (t-m)*C(delta+1,2) + t
// with m = 0 if t = 0, m = t if delta = 1, m = floor((t-1)/(delta-1)) else.
BoundResult bridge_edge_bound_simple(int n, int t);
BoundResult bridge_edge_bound(int n, int t, int delta);

enum class ThresholdVariant { g_nk, main_thm, main_thm_abstract, thm34, conjecture };

struct BoundQuery {
  ThresholdVariant variant;
  int n = 0;
  int k = 0;      // g_nk, main_thm, main_thm_abstract
  int delta = 0;  // main_thm, main_thm_abstract, conjecture
  int t = 0;      // main_thm_abstract only (its delta=1 m-rule reads m = t)
};

// Size thresholds that force pc(G) <= k (<= 2 for thm34 and the conjecture):
//   g_nk:       C(n-k-1,2) + k + 2                                   (k >= 2)
//   main_thm:   C(n-m-(k+1-m)(delta+1),2) + (k+1-m)*C(delta+1,2) + k + 2,
//               m = k+1 if delta = 1, floor(k/(delta-1)) if delta >= 2 (k >= 3)
//   main_thm_abstract: same formula, but m = t when delta = 1
//   thm34:      C(n-5,2) + 7                                         (n >= 6)
//   conjecture: C(n-m-(3-m)(delta+1),2) + (3-m)*C(delta+1,2) + 4,
//               m = 1 if delta = 3, m = 0 if delta >= 4
BoundResult pc_size_threshold(const BoundQuery& q);

// Smallest edge count strictly exceeding c(n-1)/2; any graph that large has a
// cycle longer than c.
long long erdos_gallai_min_edges(int c, int n);

struct WoodallBound {
  long long t, r;       // n = t*m + r with 1 <= r <= m
  long long threshold;  // t*C(m+1,2) + C(r,2)
};

// Any graph with more than `threshold` edges has circumference >= m+2 and a
// path on >= m+3 vertices.
WoodallBound woodall_min_edges(int n, int m);

}  // namespace propcon
