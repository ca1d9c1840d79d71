#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "turan/furedi.hpp"

#include "turan/counting.hpp"

#include <cmath>
#include <set>
#include <vector>

using namespace turan;

namespace {

// Exhaustive maximum over all q, for cross-checking the descending scan.
long long brute_select_q(long long n, int t) {
  long long best = 0;
  for (long long q = 2; (q * q - 1) / (t - 1) <= n; ++q) {
    int p = 0, k = 0;
    if ((q - 1) % (t - 1) == 0 &&
        prime_power_decompose(static_cast<int>(q), p, k))
      best = q;
  }
  return best;
}

}  // namespace

TEST_CASE("q selection on the landmark inputs") {
  CHECK(select_q(24, 3).q == 7);
  CHECK(select_q(8, 2).q == 3);
  CHECK(select_q(48, 2).q == 7);
  CHECK(select_q(3, 2).q == 2);
  CHECK(select_q(24, 3).gap_value ==
        doctest::Approx(std::sqrt(72.0) - std::cbrt(24.0)));
}

TEST_CASE("q selection matches the exhaustive scan") {
  for (int t : {2, 3, 4, 5, 8}) {
    for (long long n = 3; n <= 200; ++n) {
      long long brute = brute_select_q(n, t);
      if (brute == 0) {
        CHECK_THROWS_AS(select_q(n, t), InfeasibleError);
      } else {
        CHECK(select_q(n, t).q == brute);
      }
    }
  }
}

TEST_CASE("infeasible inputs name the threshold") {
  CHECK(smallest_feasible_order(2) == 3);
  CHECK(smallest_feasible_order(3) == 4);
  CHECK(smallest_feasible_order(4) == 5);
  CHECK(smallest_feasible_order(5) == 6);
  CHECK(smallest_feasible_order(6) == 24);
  CHECK(smallest_feasible_order(7) == 8);

  CHECK_THROWS_WITH_AS(select_q(3, 3),
                       doctest::Contains("smallest feasible n is 4"),
                       InfeasibleError);
  CHECK_THROWS_AS(select_q(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(select_q(10, 1), std::invalid_argument);
}

TEST_CASE("smallest fields give fully checkable graphs") {
  // q=2, t=2: three classes, a path; the two self-orthogonal classes are
  // special.
  FurediGraph f22 = build_furedi(2, 2);
  CHECK(f22.graph == Graph(3, {{0, 2}, {1, 2}}));
  CHECK(f22.special == std::vector<int>{0, 1});
  CHECK(f22.reps ==
        std::vector<std::pair<GaloisField::Elem, GaloisField::Elem>>{
            {0, 1}, {1, 0}, {1, 1}});

  // q=3, t=3: the whole multiplicative group is the subgroup, pairs mod
  // sign; the result is the 4-cycle with parts {(0,1),(1,0)} and
  // {(1,1),(1,2)}.
  FurediGraph f33 = build_furedi(3, 3);
  CHECK(f33.graph ==
        Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK(f33.special == std::vector<int>{0, 1, 2, 3});
  CHECK(is_isomorphic(f33.graph, make_cycle(4)));

  // q=4, t=4: K_5 minus the two non-orthogonal pairs.
  FurediGraph f44 = build_furedi(4, 4);
  CHECK(f44.graph == Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                               {1, 4}, {2, 3}, {2, 4}}));
  CHECK(f44.special == std::vector<int>{0, 1, 3, 4});
}

TEST_CASE("construction matches the published structure") {
  FurediGraph fg = build_furedi(7, 3);
  CHECK(fg.graph.order() == 24);
  for (int v = 0; v < 24; ++v) {
    int d = fg.graph.degree(v);
    CHECK((d == 6 || d == 7));
  }
  CHECK(count_k2t(fg.graph, 3).value == 0);

  FurediGraph f52 = build_furedi(5, 2);
  CHECK(f52.graph.order() == 24);
  CHECK(f52.special.size() == 4);
  for (int v : f52.special) CHECK(f52.graph.degree(v) == 4);
  CHECK(count_k2t(f52.graph, 2).value == 0);

  FurediGraph f74 = build_furedi(7, 4);
  CHECK(f74.graph.order() == 16);
  for (int v = 0; v < 16; ++v) {
    int d = f74.graph.degree(v);
    CHECK((d == 6 || d == 7));
  }
  CHECK(count_k2t(f74.graph, 4).value == 0);
}

TEST_CASE("verification reports") {
  FurediReport r73 = verify_furedi(build_furedi(7, 3));
  CHECK(r73.all_ok);
  CHECK(r73.vertex_count_ok);
  CHECK(r73.degree_dichotomy_ok);
  CHECK(r73.max_codegree == 2);
  CHECK(r73.k2t_free);
  CHECK(r73.representatives_ok);
  CHECK(r73.pairs_at_t_minus_1 > 0);

  FurediReport r52 = verify_furedi(build_furedi(5, 2));
  CHECK(r52.all_ok);
  CHECK(r52.max_codegree == 1);

  FurediReport r44 = verify_furedi(build_furedi(4, 4));
  CHECK(r44.all_ok);
  CHECK(r44.max_codegree == 3);

  FurediReport r133 = verify_furedi(build_furedi(13, 3));
  CHECK(r133.all_ok);
  CHECK(r133.degree_histogram.size() <= 2);

  // Edge totals stay inside [N(q-1)/2, Nq/2].
  for (auto [q, t] : std::vector<std::pair<long long, int>>{
           {7, 3}, {5, 2}, {7, 4}, {13, 3}}) {
    FurediGraph fg = build_furedi(q, t);
    long long n = fg.graph.order();
    long long e2 = 2LL * fg.graph.edge_count();
    CHECK(e2 >= n * (q - 1));
    CHECK(e2 <= n * q);
  }
}

TEST_CASE("a corrupted graph fails verification") {
  FurediGraph fg = build_furedi(7, 3);
  std::vector<std::pair<int, int>> edges = fg.graph.edges();
  bool added = false;
  for (int u = 0; u < fg.graph.order() && !added; ++u)
    for (int v = u + 1; v < fg.graph.order() && !added; ++v)
      if (!fg.graph.adjacent(u, v)) {
        edges.emplace_back(u, v);
        added = true;
      }
  REQUIRE(added);
  fg.graph = Graph(fg.graph.order(), edges);
  FurediReport r = verify_furedi(fg);
  CHECK_FALSE(r.all_ok);
}

TEST_CASE("divisibility and primality are enforced") {
  CHECK_THROWS_AS(build_furedi(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_furedi(8, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_furedi(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_furedi(7, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_furedi(1, 2), std::invalid_argument);
}

TEST_CASE("tree embedding counts track the expected growth rate") {
  Graph p4 = make_path(4);
  auto ratio = [&](long long q, int t) {
    FurediGraph fg = build_furedi(q, t);
    double n = fg.graph.order();
    double bound = std::pow(t - 1, (4 - 1) / 2.0) * std::pow(n, (4 + 1) / 2.0);
    BigInt emb = count_embeddings(p4, fg.graph).value;
    return emb.convert_to<double>() / bound;
  };
  double r7 = ratio(7, 3);
  double r13 = ratio(13, 3);
  CHECK(r7 >= 0.5);
  CHECK(r7 <= 1.5);
  CHECK(r13 >= 0.5);
  CHECK(r13 <= 1.5);
  CHECK(std::abs(r13 - 1.0) <= std::abs(r7 - 1.0));
}
