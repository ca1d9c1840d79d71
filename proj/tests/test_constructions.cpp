#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/furedi.hpp"
#include "turan/tree_analysis.hpp"

#include <random>
#include <set>

using namespace turan;

namespace {

Graph branch_tree() {
  // one degree-4 centre, three leaves, one length-2 arm
  return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}});
}

}  // namespace

TEST_CASE("k2rpq layouts") {
  CHECK(is_isomorphic(build_k2rpq(0, 0, 2), make_cycle(4)));
  CHECK(is_isomorphic(build_k2rpq(1, 1, 1), make_path(5)));
  CHECK(is_isomorphic(build_k2rpq(0, 0, 1), make_path(3)));
  CHECK(is_isomorphic(build_k2rpq(1, 0, 0), Graph(3, {{0, 2}})));

  Graph g = build_k2rpq(3, 3, 2);
  CHECK(g.order() == 10);
  CHECK(g.edge_count() == 10);
  CHECK(g.degree(0) == 5);
  CHECK(g.degree(1) == 5);
  CHECK_FALSE(g.adjacent(0, 1));

  Graph k29 = build_k2rpq(0, 0, 9);
  CHECK(is_isomorphic(k29, complete_multipartite({2, 9})));

  CHECK_THROWS_AS(build_k2rpq(0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_k2rpq(-1, 0, 2), std::invalid_argument);
}

TEST_CASE("clique blocks") {
  Graph g = clique_blocks(8, 4);
  CHECK(g.order() == 8);
  CHECK(g.edge_count() == 12);
  CHECK(count_k2t(g, 2).value == 6);  // 3 four-cycles per K_4

  Graph h = clique_blocks(14, 9);
  CHECK(h.order() == 14);
  CHECK(h.edge_count() == 36 + 10);  // K_9 plus leftover K_5
  // every K_9 pair has codegree 7, the K_5 leftover contributes nothing
  CHECK(count_k2t(h, 7).value == 36);
  CHECK(count_k2t(clique_blocks(9, 9), 7).value == 36);
  // the two-part profile beats the clique blocks at 14 vertices
  CHECK(multipartite_k2t({7, 7}, 7) > count_k2t(h, 7).value);

  Graph iso = clique_blocks(14, 9, false);
  CHECK(iso.edge_count() == 36);
  for (int v = 9; v < 14; ++v) CHECK(iso.degree(v) == 0);

  // m divides n: every K_m contributes the same count
  for (int m : {3, 4, 5})
    for (int copies : {1, 2, 3}) {
      Graph b = clique_blocks(copies * m, m);
      CHECK(count_k2t(b, 2).value == BigInt(copies) * count_k2t(make_clique(m), 2).value);
    }

  CHECK_THROWS_AS(clique_blocks(0, 3), std::invalid_argument);
}

TEST_CASE("multipartite count closed form") {
  CHECK(multipartite_k2t({3, 3, 3}, 3) == 207);
  CHECK(multipartite_k2t({7, 7}, 7) == 42);
  CHECK(multipartite_k2t({4, 4}, 2) == 36);
  CHECK(multipartite_k2t({200}, 2) == 0);

  // closed form against the direct codegree counter
  std::mt19937_64 rng(20260815);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    std::vector<int> parts;
    int n = 0;
    for (int i = 0; i < k; ++i) {
      int p = 1 + static_cast<int>(rng() % 7);
      parts.push_back(p);
      n += p;
      if (n >= 24) break;
    }
    int t = 2 + static_cast<int>(rng() % 3);
    CHECK(multipartite_k2t(parts, t) == count_k2t(complete_multipartite(parts), t).value);
  }

  CHECK_THROWS_AS(multipartite_k2t({4, 4}, 1), std::invalid_argument);
  CHECK_THROWS_AS(multipartite_k2t({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(multipartite_k2t({3, 0}, 2), std::invalid_argument);
}

TEST_CASE("optimize multipartite") {
  MultipartiteProfile p = optimize_multipartite(8, 2, 2);
  CHECK(p.parts == std::vector<int>{4, 4});
  CHECK(p.count == 36);

  MultipartiteProfile q = optimize_multipartite(14, 2, 7);
  CHECK(q.parts == std::vector<int>{11, 3});
  CHECK(q.count == 990);

  MultipartiteProfile single = optimize_multipartite(9, 1, 3);
  CHECK(single.parts == std::vector<int>{9});
  CHECK(single.count == 0);

  // widening k never hurts
  for (int n : {6, 9, 12})
    for (int t : {2, 3}) {
      BigInt prev = 0;
      for (int k = 1; k <= n; ++k) {
        MultipartiteProfile r = optimize_multipartite(n, k, t);
        CHECK(r.count >= prev);
        prev = r.count;
      }
    }

  // brute check on a small case: all two-part splits of 10
  {
    BigInt best = 0;
    for (int a = 5; a <= 9; ++a) best = std::max(best, multipartite_k2t({a, 10 - a}, 3));
    CHECK(optimize_multipartite(10, 2, 3).count == best);
  }

  CHECK_THROWS_AS(optimize_multipartite(10, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(optimize_multipartite(201, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(optimize_multipartite(10, 11, 2), std::invalid_argument);
}

TEST_CASE("asymptotic profile") {
  FractionProfile bal = asymptotic_profile(2, 4, 0.01);
  REQUIRE(bal.fractions.size() == 2);
  CHECK(bal.fractions[0] == doctest::Approx(0.5).epsilon(0.011));
  CHECK(bal.fractions[1] == doctest::Approx(0.5).epsilon(0.011));

  FractionProfile skew = asymptotic_profile(2, 5, 0.01);
  CHECK(skew.fractions[0] > 0.51);  // optimum leaves the balanced point at t = 5
  double sum = skew.fractions[0] + skew.fractions[1];
  CHECK(sum == doctest::Approx(1.0));
  FractionProfile again = asymptotic_profile(2, 5, 0.01);
  CHECK(again.fractions == skew.fractions);
  CHECK(again.objective == skew.objective);

  FractionProfile t2 = asymptotic_profile(2, 2, 0.01);
  CHECK(t2.fractions[0] == doctest::Approx(0.5).epsilon(0.011));

  FractionProfile three = asymptotic_profile(3, 2, 0.01);
  CHECK(three.fractions.size() == 3);
  double total = 0;
  for (double f : three.fractions) total += f;
  CHECK(total == doctest::Approx(1.0));

  CHECK_THROWS_AS(asymptotic_profile(1, 2, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_profile(2, 1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_profile(2, 2, 0.02), std::invalid_argument);
}

TEST_CASE("g0 assembly") {
  // double star: no arm pieces, just the two centres and pendant stars
  Graph ds = double_star(2, 2);
  G0Info info;
  Graph g0 = construct_g0(ds, 200, 3, &info);
  CHECK(info.blocks == 0);
  CHECK(info.pendants_per_vertex == (200 - 2) / 6);
  CHECK(g0.order() == 2 + 2 * info.pendants_per_vertex);
  CHECK(count_k2t(g0, 3).value == 0);

  // branch tree: one arm piece glued through one block
  Graph bt = branch_tree();
  G0Info binfo;
  Graph b0 = construct_g0(bt, 300, 3, &binfo);
  CHECK(binfo.blocks == 1);
  CHECK(binfo.q > 0);
  CHECK(binfo.anchors.size() == 1);
  CHECK(binfo.anchors[0].size() == 1);
  CHECK(count_k2t(b0, 3).value == 0);
  CHECK(b0.order() == 1 + binfo.pendants_per_vertex + binfo.block_order - 1);
  // the centre now carries pendants, tree edges into the arm, and block edges
  CHECK(b0.degree(0) >= binfo.pendants_per_vertex);

  // deterministic under the default seed
  Graph b1 = construct_g0(bt, 300, 3);
  CHECK(b0 == b1);

  // the host still contains plenty of copies of the tree itself
  CHECK(count_embeddings(bt, b0).value > 0);

  CHECK_THROWS_AS(construct_g0(make_path(4), 200, 3), std::invalid_argument);  // nice tree
  CHECK_THROWS_AS(construct_g0(ds, 7, 3), InfeasibleError);
}

TEST_CASE("g0 larger host stays free") {
  Graph bt = branch_tree();
  G0Info info;
  Graph g = construct_g0(bt, 800, 3, &info);
  CHECK(info.pendants_per_vertex == (800 - 1) / 6);
  CHECK(count_k2t(g, 3).value == 0);
  CHECK(count_embeddings(bt, g).value > 0);
}

TEST_CASE("forbidden classification battery") {
  auto kind = [](const Graph& f, int t) { return classify_forbidden(f, t).kind; };

  for (int t : {2, 3}) {
    CHECK(kind(make_clique(2), t) == ForbiddenCase::kZero);
    CHECK(kind(make_cycle(4), t) == ForbiddenCase::kZero);
    CHECK(kind(complete_multipartite({2, 9}), t) == ForbiddenCase::kFurediQuadratic);
    CHECK(kind(make_clique(3), t) == ForbiddenCase::kChromatic);
    CHECK(kind(make_clique(4), t) == ForbiddenCase::kChromatic);
    CHECK(kind(make_petersen(), t) == ForbiddenCase::kChromatic);
    CHECK(kind(make_cycle(6), t) == ForbiddenCase::kBipartiteOther);
  }
  CHECK(kind(make_path(5), 2) == ForbiddenCase::kCliqueBlocks);
  CHECK(kind(make_path(5), 3) == ForbiddenCase::kZero);  // P_5 threads K_{2,3}

  Classification p5 = classify_forbidden(make_path(5), 2);
  REQUIRE(p5.shape.has_value());
  CHECK(p5.shape->p == 1);
  CHECK(p5.shape->q == 1);
  CHECK(p5.shape->r == 1);

  Classification k29 = classify_forbidden(complete_multipartite({2, 9}), 3);
  REQUIRE(k29.shape.has_value());
  CHECK(k29.shape->r == 9);
  CHECK(k29.shape->p == 0);

  Classification c6 = classify_forbidden(make_cycle(6), 2);
  REQUIRE(c6.beta.has_value());
  CHECK(*c6.beta == 3);
  CHECK_FALSE(c6.beta_at_most_t);
  CHECK(classify_forbidden(make_cycle(6), 3).beta_at_most_t);

  CHECK(classify_forbidden(make_clique(4), 2).chi == 4);
  CHECK(classify_forbidden(make_petersen(), 2).chi == 3);

  // two disjoint edges sit inside C_4 = K_{2,2} already
  Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK(classify_forbidden(two_edges, 2).kind == ForbiddenCase::kZero);

  // three disjoint edges do not fit in K_{2,2}: hub pattern with r = 0
  Graph three_edges(6, {{0, 1}, {2, 3}, {4, 5}});
  Classification te = classify_forbidden(three_edges, 2);
  CHECK(te.kind == ForbiddenCase::kBipartiteOther);  // no hub pair covers all six
}

TEST_CASE("classification is total and exclusive") {
  // every graph lands in exactly one case; the enum forces exclusivity, so
  // the real check is that classify never throws and cases look consistent
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.push_back({u, v});
    Graph f(n, edges);
    for (int t : {2, 3}) {
      Classification c = classify_forbidden(f, t);
      switch (c.kind) {
        case ForbiddenCase::kZero:
          CHECK(embeds(f, complete_multipartite({2, t})));
          break;
        case ForbiddenCase::kCliqueBlocks:
          REQUIRE(c.shape.has_value());
          CHECK(c.shape->r <= t);
          CHECK(c.shape->p + c.shape->q + c.shape->r > t);
          break;
        case ForbiddenCase::kFurediQuadratic:
          REQUIRE(c.shape.has_value());
          CHECK(c.shape->r > t);
          break;
        case ForbiddenCase::kBipartiteOther:
          REQUIRE(c.beta.has_value());
          CHECK(c.chi <= 2);
          break;
        case ForbiddenCase::kChromatic:
          CHECK(c.chi >= 3);
          break;
      }
    }
  }
  CHECK_THROWS_AS(classify_forbidden(Graph(0, {}), 2), std::invalid_argument);
  CHECK_THROWS_AS(classify_forbidden(make_path(3), 1), std::invalid_argument);
}

TEST_CASE("builtin names") {
  CHECK(graph_from_name("path_5") == make_path(5));
  CHECK(graph_from_name("star_4") == make_star(4));
  CHECK(graph_from_name("cycle_6") == make_cycle(6));
  CHECK(graph_from_name("clique_4") == make_clique(4));
  CHECK(graph_from_name("k2t_3") == complete_multipartite({2, 3}));
  CHECK(graph_from_name("k2rpq_1_1_1") == build_k2rpq(1, 1, 1));
  CHECK(graph_from_name("spider_3_2") == spider(3, 2));
  CHECK(graph_from_name("doublestar_2_3") == double_star(2, 3));
  CHECK(graph_from_name("petersen") == make_petersen());
  CHECK(graph_from_name("multipartite_3_3_3") == complete_multipartite({3, 3, 3}));
  CHECK(graph_from_name("cliqueblocks_8_4") == clique_blocks(8, 4));
  CHECK(graph_from_name("furedi_7_3").order() == 24);
  CHECK_THROWS_AS(graph_from_name("blob"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_name("path_"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_name("spider_3"), std::invalid_argument);
}

TEST_CASE("spider and double star builders") {
  Graph sp = spider(3, 2);
  CHECK(sp.order() == 7);
  CHECK(sp.degree(0) == 3);
  CHECK(is_tree(sp));
  Graph ds = double_star(2, 3);
  CHECK(ds.order() == 7);
  CHECK(ds.degree(0) == 3);
  CHECK(ds.degree(1) == 4);
  CHECK(is_tree(ds));
  CHECK_THROWS_AS(spider(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(double_star(0, 1), std::invalid_argument);
}
