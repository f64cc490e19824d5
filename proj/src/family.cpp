#include "propcon/family.hpp"

#include <cctype>

#include "propcon/errors.hpp"

namespace propcon {

Graph make_g_star_1() {
  return join(Graph::complete(1), disjoint_union(Graph::empty(2), Graph::complete(2)));
}

Graph make_g_star_2() {
  return join(Graph::complete(1),
              disjoint_union(Graph::empty(1), disjoint_union(Graph::complete(2), Graph::complete(2))));
}

Graph make_g1() {
  Graph pairs = disjoint_union(Graph::complete(2), disjoint_union(Graph::complete(2), Graph::complete(2)));
  return join(Graph::complete(1), pairs);
}

Graph make_gn(int n) {
  if (n < 8) throw ConstructionError("g-n family needs n >= 8");
  // Hub of K1 v 2K2 lands at index n-5; one bridge from clique vertex 0.
  Graph tail = join(Graph::complete(1), disjoint_union(Graph::complete(2), Graph::complete(2)));
  Graph g = disjoint_union(Graph::complete(n - 5), tail);
  auto es = g.edges();
  es.push_back({0, n - 5});
  return Graph::from_edges(n, std::move(es));
}

Graph make_gk(int n, int k, int delta) {
  if (k < 1) throw ConstructionError("g-k family needs k >= 1");
  if (delta < 1) throw ConstructionError("g-k family needs delta >= 1");
  const int big = n - (k + 1) * (delta + 1);
  if (big < 1) throw ConstructionError("g-k family needs n >= (k+1)(delta+1)+1");
  std::vector<Edge> es;
  for (int u = 0; u < big; ++u)
    for (int v = u + 1; v < big; ++v) es.push_back({u, v});
  for (int b = 0; b <= k; ++b) {
    const int base = big + b * (delta + 1);
    for (int u = 0; u <= delta; ++u)
      for (int v = u + 1; v <= delta; ++v) es.push_back({base + u, base + v});
    es.push_back({0, base});  // the bridge
  }
  return Graph::from_edges(n, std::move(es));
}

Graph build_family(const GraphFamily& f) {
  switch (f.tag) {
    case FamilyTag::complete:
      if (f.n < 1) throw ConstructionError("complete graph needs n >= 1");
      return Graph::complete(f.n);
    case FamilyTag::path:
      if (f.n < 1) throw ConstructionError("path needs n >= 1");
      return Graph::path(f.n);
    case FamilyTag::cycle:
      if (f.n < 3) throw ConstructionError("cycle needs n >= 3");
      return Graph::cycle(f.n);
    case FamilyTag::star:
      if (f.n < 1) throw ConstructionError("star needs n >= 1");
      return Graph::star(f.n);
    case FamilyTag::g_star_1:
      return make_g_star_1();
    case FamilyTag::g_star_2:
      return make_g_star_2();
    case FamilyTag::g_1:
      return make_g1();
    case FamilyTag::g_n:
      return make_gn(f.n);
    case FamilyTag::g_k:
      return make_gk(f.n, f.k, f.delta);
  }
  throw ConstructionError("unknown family tag");
}

FamilyTag parse_family_tag(const std::string& name) {
  std::string s;
  for (char c : name)
    if (c != '-' && c != '_') s.push_back(static_cast<char>(std::tolower(c)));
  if (s == "complete") return FamilyTag::complete;
  if (s == "path") return FamilyTag::path;
  if (s == "cycle") return FamilyTag::cycle;
  if (s == "star") return FamilyTag::star;
  if (s == "gstar1") return FamilyTag::g_star_1;
  if (s == "gstar2") return FamilyTag::g_star_2;
  if (s == "g1") return FamilyTag::g_1;
  if (s == "gn") return FamilyTag::g_n;
  if (s == "gk") return FamilyTag::g_k;
  throw ParseError("unknown family: " + name);
}

std::string family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::complete: return "complete";
    case FamilyTag::path: return "path";
    case FamilyTag::cycle: return "cycle";
    case FamilyTag::star: return "star";
    case FamilyTag::g_star_1: return "g-star-1";
    case FamilyTag::g_star_2: return "g-star-2";
    case FamilyTag::g_1: return "g-1";
    case FamilyTag::g_n: return "g-n";
    case FamilyTag::g_k: return "g-k";
  }
  return "?";
}

}  // namespace propcon
