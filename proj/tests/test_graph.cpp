#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "turan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace turan;

namespace {

Graph random_graph(std::mt19937_64& rng, int order, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(order, edges);
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("graph construction validates and deduplicates") {
  const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});

  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("graph6 frozen encodings") {
  const Graph k3 = graph6_decode("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(graph6_encode(k3) == "Bw");

  const Graph path = graph6_decode("Bg");
  CHECK(path.order() == 3);
  CHECK(path.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(graph6_encode(path) == "Bg");

  const Graph empty2 = graph6_decode("A?");
  CHECK(empty2.order() == 2);
  CHECK(empty2.edge_count() == 0);
  CHECK(graph6_encode(empty2) == "A?");

  CHECK(graph6_encode(Graph(0, {})) == "?");
  CHECK(graph6_decode("?").order() == 0);
}

TEST_CASE("graph6 decode errors carry offsets") {
  CHECK_THROWS_AS(graph6_decode(""), FormatError);
  CHECK_THROWS_AS(graph6_decode("B"), FormatError);          // truncated body
  CHECK_THROWS_AS(graph6_decode("Bww"), FormatError);        // trailing garbage
  CHECK_THROWS_AS(graph6_decode("~??"), FormatError);        // multi-byte header
  CHECK_THROWS_AS(graph6_decode(std::string("B\x1f")), FormatError);  // bad body byte
  CHECK_THROWS_AS(graph6_decode("A~"), FormatError);         // nonzero padding

  try {
    graph6_decode("Bww");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
  }
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(20260815);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng() % 13);
    const Graph g = random_graph(rng, n);
    const Graph back = graph6_decode(graph6_encode(g));
    CHECK(back == g);
  }
}

TEST_CASE("edge list codec") {
  const Graph g(5, {{0, 1}, {2, 3}});
  const Graph back = edge_list_decode(edge_list_encode(g));
  CHECK(back == g);  // "# n=5" header keeps the isolated vertex 4

  const Graph inferred = edge_list_decode("0 1\n1 2\n");
  CHECK(inferred.order() == 3);
  CHECK(inferred.edge_count() == 2);

  CHECK_THROWS_AS(edge_list_decode("0 x\n"), FormatError);
  CHECK_THROWS_AS(edge_list_decode("0 1 2\n"), FormatError);
  CHECK_THROWS_AS(edge_list_decode("-1 0\n"), FormatError);
}

TEST_CASE("codegree") {
  const Graph c4 = make_cycle(4);
  CHECK(c4.codegree(0, 2) == 2);
  CHECK(c4.codegree(1, 3) == 2);
  CHECK(c4.codegree(0, 1) == 0);

  const Graph k4 = make_clique(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) CHECK(k4.codegree(u, v) == 2);
  }

  CHECK_THROWS_AS(c4.codegree(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(c4.codegree(0, 4), std::invalid_argument);
}

TEST_CASE("codegree is symmetric on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 9);
    for (int u = 0; u < 9; ++u) {
      for (int v = u + 1; v < 9; ++v) CHECK(g.codegree(u, v) == g.codegree(v, u));
    }
  }
}

TEST_CASE("complete multipartite") {
  const Graph g = complete_multipartite({3, 3, 3});
  CHECK(g.order() == 9);
  CHECK(g.edge_count() == 27);
  CHECK(g.codegree(0, 1) == 6);  // same part
  CHECK(g.codegree(0, 3) == 3);  // different parts

  const Graph k25 = complete_multipartite({2, 5});
  CHECK(k25.order() == 7);
  CHECK(k25.edge_count() == 10);
  CHECK(k25.degree(0) == 5);
  CHECK(k25.degree(2) == 2);

  CHECK_THROWS_AS(complete_multipartite({}), std::invalid_argument);
  CHECK_THROWS_AS(complete_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("disjoint union") {
  const Graph g = disjoint_union(make_clique(4), make_clique(4));
  CHECK(g.order() == 8);
  CHECK(g.edge_count() == 12);
  CHECK(g.adjacent(4, 5));
  CHECK_FALSE(g.adjacent(0, 4));
  for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("builders") {
  CHECK(make_path(1).edge_count() == 0);
  CHECK(make_path(5).edge_count() == 4);
  CHECK(make_cycle(6).edge_count() == 6);
  CHECK(make_star(4).order() == 5);
  CHECK(make_star(4).degree(0) == 4);
  CHECK(make_clique(5).edge_count() == 10);

  const Graph pet = make_petersen();
  CHECK(pet.order() == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  for (int u = 0; u < 10; ++u) {
    for (int v = u + 1; v < 10; ++v) {
      CHECK(pet.codegree(u, v) == (pet.adjacent(u, v) ? 0 : 1));  // girth 5, diameter 2
    }
  }
}

TEST_CASE("connectivity helpers") {
  CHECK(is_connected(make_path(6)));
  CHECK_FALSE(is_connected(disjoint_union(make_path(2), make_path(2))));
  CHECK(is_tree(make_star(5)));
  CHECK_FALSE(is_tree(make_cycle(4)));
  CHECK_FALSE(is_tree(disjoint_union(make_path(2), make_path(2))));
  CHECK(connected_components(disjoint_union(make_clique(3), make_path(2))).size() == 2);
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(Graph(4, {})) == 1);
  CHECK(chromatic_number(make_clique(1)) == 1);
  CHECK(chromatic_number(make_path(5)) == 2);
  CHECK(chromatic_number(make_cycle(6)) == 2);
  CHECK(chromatic_number(make_cycle(5)) == 3);
  CHECK(chromatic_number(make_clique(4)) == 4);
  CHECK(chromatic_number(make_petersen()) == 3);
  CHECK(chromatic_number(complete_multipartite({2, 2, 2})) == 3);
}

TEST_CASE("bipartite beta") {
  CHECK(bipartite_beta(make_cycle(6)) == 3);
  CHECK(bipartite_beta(complete_multipartite({2, 5})) == 2);
  CHECK(bipartite_beta(make_path(5)) == 2);
  CHECK(bipartite_beta(disjoint_union(make_path(2), make_path(2))) == 2);
  CHECK(bipartite_beta(Graph(4, {})) == 0);
  CHECK_FALSE(bipartite_beta(make_clique(3)).has_value());
  CHECK_FALSE(bipartite_beta(make_petersen()).has_value());
  CHECK_FALSE(bipartite_beta(make_cycle(5)).has_value());
}

TEST_CASE("beta and chromatic number are consistent on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(rng, n, 0.35);
    const auto beta = bipartite_beta(g);
    if (beta) {
      CHECK(*beta <= n / 2);
      if (g.edge_count() > 0) CHECK(chromatic_number(g) == 2);
    } else {
      CHECK(chromatic_number(g) >= 3);
    }
  }
}

TEST_CASE("canonical form is relabeling invariant") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = random_graph(rng, n);
    const Graph h = relabel(g, random_permutation(rng, n));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(is_isomorphic(g, h));
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  CHECK_FALSE(is_isomorphic(make_cycle(4), make_star(3)));
  CHECK_FALSE(is_isomorphic(make_path(4), make_star(3)));
  CHECK(is_isomorphic(complete_multipartite({2, 2}), make_cycle(4)));
  const Graph two_k4 = disjoint_union(make_clique(4), make_clique(4));
  const Graph c8 = make_cycle(8);
  CHECK_FALSE(is_isomorphic(two_k4, c8));
  std::mt19937_64 rng(1);
  CHECK(is_isomorphic(two_k4, relabel(two_k4, random_permutation(rng, 8))));
}
