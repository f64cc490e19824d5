#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "oracle.hpp"
#include "propcon/errors.hpp"
#include "propcon/family.hpp"
#include "propcon/graph.hpp"

using namespace propcon;

TEST_CASE("from_edges validates input") {
  CHECK_NOTHROW(Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), ContractError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), ContractError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{-1, 0}}), ContractError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), ContractError);
  CHECK_THROWS_AS(Graph::from_edges(0, {}), ContractError);
}

TEST_CASE("edges are normalized and stably indexed") {
  Graph g = Graph::from_edges(4, {{2, 0}, {3, 1}, {0, 1}});
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{0, 2});
  CHECK(g.edges()[2] == Edge{1, 3});
  CHECK(g.edge_index(1, 0) == 0);
  CHECK(g.edge_index(2, 0) == 1);
  CHECK(g.edge_index(2, 3) == -1);
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(0, 3));
}

TEST_CASE("factories") {
  CHECK(Graph::complete(5).edge_count() == 10);
  CHECK(Graph::complete(1).edge_count() == 0);
  CHECK(Graph::path(6).edge_count() == 5);
  CHECK(Graph::cycle(5).edge_count() == 5);
  CHECK_THROWS_AS(Graph::cycle(2), ContractError);
  Graph s = Graph::star(5);
  CHECK(s.degree(0) == 4);
  CHECK(s.min_degree() == 1);
  CHECK(s.is_tree());
  CHECK(Graph::empty(4).edge_count() == 0);
  CHECK_FALSE(Graph::empty(4).is_connected());
  CHECK(Graph::empty(1).is_connected());
  CHECK(Graph::complete(2).is_tree());
  CHECK_FALSE(Graph::cycle(3).is_tree());
  CHECK(Graph::complete(3).is_complete());
  CHECK_FALSE(Graph::path(3).is_complete());
}

TEST_CASE("graph6 frozen vectors") {
  CHECK(emit_graph6(Graph::complete(1)) == "@");
  CHECK(emit_graph6(Graph::complete(2)) == "A_");
  CHECK(emit_graph6(Graph::complete(3)) == "Bw");
  CHECK(emit_graph6(Graph::empty(5)) == "D??");
  CHECK(parse_graph6("@") == Graph::complete(1));
  CHECK(parse_graph6("A_") == Graph::complete(2));
  CHECK(parse_graph6("Bw") == Graph::complete(3));
  CHECK(parse_graph6("D??") == Graph::empty(5));
}

TEST_CASE("graph6 round trip over every labeled graph up to n=5") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      Graph back = parse_graph6(emit_graph6(g));
      REQUIRE(back == g);
    }
}

TEST_CASE("graph6 round trip at larger random orders") {
  std::mt19937_64 rng(7101);
  for (int n : {10, 23, 41, 62}) {
    for (int rep = 0; rep < 20; ++rep) {
      Graph g = oracle::random_graph(n, rng);
      CHECK(parse_graph6(emit_graph6(g)) == g);
    }
  }
}

TEST_CASE("graph6 parse errors carry positions") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("~??"), ParseError);   // long form unsupported
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);     // truncated
  CHECK_THROWS_AS(parse_graph6("Bw?"), ParseError);   // trailing bytes
  CHECK_THROWS_AS(parse_graph6("B\x1f"), ParseError); // byte below '?'
  try {
    parse_graph6("Bw\x7f");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  CHECK_THROWS_AS(emit_graph6(Graph::empty(63)), UnsupportedSizeError);
}

TEST_CASE("edge list round trip and parse errors") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(parse_edge_list(emit_edge_list(g)) == g);
  CHECK(parse_edge_list("n 3\n\n0 1\n") == Graph::from_edges(3, {{0, 1}}));
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 1 9\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 1\n1 0\n"), ParseError);
  try {
    parse_edge_list("n 3\n0 1\n0 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("join and disjoint union") {
  Graph a = Graph::complete(2), b = Graph::path(3);
  Graph u = disjoint_union(a, b);
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 3);
  CHECK_FALSE(u.is_connected());
  Graph j = join(a, b);
  CHECK(j.vertex_count() == 5);
  CHECK(j.edge_count() == 2 * 3 + 1 + 2);
  CHECK(j.is_connected());
  // K1 joined onto isolated vertices is the star.
  CHECK(are_isomorphic(join(Graph::complete(1), Graph::empty(4)), Graph::star(5)));
  // K1 ∨ (2K1 + K2) has 5 vertices and 5 edges: the first small exception graph.
  Graph gs1 = make_g_star_1();
  CHECK(gs1.vertex_count() == 5);
  CHECK(gs1.edge_count() == 5);
  CHECK(gs1.min_degree() == 1);
  CHECK(gs1.max_degree() == 4);
}

TEST_CASE("without_vertex shifts labels") {
  Graph g = Graph::cycle(5);
  Graph h = g.without_vertex(0);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 3);
  CHECK(are_isomorphic(h, Graph::path(4)));
  Graph k4 = Graph::complete(4);
  CHECK(k4.without_vertex(2) == Graph::complete(3));
}

TEST_CASE("relabeled permutes incidence") {
  std::mt19937_64 rng(424);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = oracle::random_graph(7, rng);
    std::vector<int> p = oracle::random_permutation(7, rng);
    Graph h = relabeled(g, p);
    REQUIRE(h.edge_count() == g.edge_count());
    for (const Edge& e : g.edges()) REQUIRE(h.has_edge(p[e.u], p[e.v]));
  }
  CHECK_THROWS_AS(relabeled(Graph::path(3), {0, 0, 1}), ContractError);
  CHECK_THROWS_AS(relabeled(Graph::path(3), {0, 1}), ContractError);
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(99);
  Graph g = oracle::random_connected_graph(7, rng);
  std::string canon = canonical_form(g);
  for (int rep = 0; rep < 1000; ++rep) {
    Graph h = relabeled(g, oracle::random_permutation(7, rng));
    REQUIRE(canonical_form(h) == canon);
  }
  // The canonical string names an isomorphic graph.
  CHECK(are_isomorphic(parse_graph6(canon), g));
}

TEST_CASE("canonical form classes match brute-force classes exhaustively") {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::uint64_t, std::set<std::string>> forms_by_class;
    std::set<std::string> all_forms;
    std::set<std::uint64_t> all_codes;
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      std::uint64_t code = oracle::brute_canonical_code(g);
      forms_by_class[code].insert(canonical_form(g));
      all_codes.insert(code);
    }
    for (const auto& [code, forms] : forms_by_class) {
      REQUIRE(forms.size() == 1);  // never splits a class
      all_forms.insert(*forms.begin());
    }
    REQUIRE(all_forms.size() == all_codes.size());  // never merges classes
  }
}

TEST_CASE("are_isomorphic agrees with the permutation oracle") {
  std::mt19937_64 rng(5150);
  for (int rep = 0; rep < 300; ++rep) {
    int n = 2 + static_cast<int>(rng() % 4);
    Graph a = oracle::random_graph(n, rng);
    Graph b = oracle::random_graph(n, rng);
    CHECK(are_isomorphic(a, b) == oracle::isomorphic(a, b));
  }
  // Relabelings are always isomorphic.
  for (int rep = 0; rep < 100; ++rep) {
    Graph a = oracle::random_graph(6, rng);
    CHECK(are_isomorphic(a, relabeled(a, oracle::random_permutation(6, rng))));
  }
  // Same degree sequence, different graphs: C6 vs 2 triangles is caught by
  // connectivity inside the backtracker, so use K_{3,3} vs the prism.
  Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                    {2, 3}, {2, 4}, {2, 5}});
  Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                      {0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(are_isomorphic(k33, prism));
  CHECK(oracle::isomorphic(k33, k33));
}

TEST_CASE("family constructions") {
  CHECK(make_g_star_2().vertex_count() == 6);
  CHECK(make_g_star_2().edge_count() == 7);
  Graph g1 = make_g1();
  CHECK(g1.vertex_count() == 7);
  CHECK(g1.edge_count() == 9);
  CHECK(g1.min_degree() == 2);
  CHECK(g1.max_degree() == 6);

  for (int n = 8; n <= 20; ++n) {
    Graph gn = make_gn(n);
    CHECK(gn.vertex_count() == n);
    CHECK(gn.edge_count() == (n - 5) * (n - 6) / 2 + 7);
    CHECK(gn.min_degree() == 2);
  }
  CHECK_THROWS_AS(make_gn(7), ConstructionError);

  Graph gk = make_gk(20, 3, 2);
  CHECK(gk.vertex_count() == 20);
  CHECK(gk.min_degree() == 2);
  CHECK_THROWS_AS(make_gk(12, 3, 2), ConstructionError);  // needs (k+1)(delta+1)+1 vertices
  CHECK_THROWS_AS(make_gk(20, 0, 2), ConstructionError);
  CHECK_THROWS_AS(make_gk(20, 3, 0), ConstructionError);

  CHECK(parse_family_tag("g-star-1") == FamilyTag::g_star_1);
  CHECK(parse_family_tag("GStar1") == FamilyTag::g_star_1);
  CHECK(parse_family_tag("g_1") == FamilyTag::g_1);
  CHECK(family_tag_name(FamilyTag::g_n) == "g-n");
  CHECK_THROWS_AS(parse_family_tag("nope"), ParseError);

  GraphFamily f;
  f.tag = FamilyTag::complete;
  f.n = 4;
  CHECK(build_family(f) == Graph::complete(4));
}

TEST_CASE("basic stats") {
  BasicStats s = basic_stats(make_g1());
  CHECK(s.n == 7);
  CHECK(s.m == 9);
  CHECK(s.min_degree == 2);
  CHECK(s.max_degree == 6);
  CHECK(s.connected);
  CHECK_FALSE(s.complete);
}
