#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/oracle.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

using namespace turan;

namespace {

OracleOptions no_cache() {
  OracleOptions o;
  o.use_cache = false;
  return o;
}

// reference: scan every labeled graph on n vertices
BigInt sweep_max(int n, const Graph& h, const Graph& f) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  BigInt best = -1;
  for (std::uint32_t m = 0; m < (1u << slots.size()); ++m) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (m >> i & 1u) edges.push_back(slots[i]);
    Graph g(n, edges);
    if (embeds(f, g)) continue;
    best = std::max(best, count_copies(h, g).value);
  }
  return best;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("turan-oracle-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("frozen small extremal values") {
  Graph p3 = make_path(3), p5 = make_path(5);
  Graph c4 = make_cycle(4), k3 = make_clique(3);

  ExtremalResult a = exact_ex(4, c4, p5, no_cache());
  CHECK(a.value == 3);
  CHECK(a.witness_g6 == canonical_g6(make_clique(4)));
  CHECK(a.complete);

  ExtremalResult b = exact_ex(4, p3, c4, no_cache());
  CHECK(b.value == 5);
  CHECK(b.complete);

  // forbidding a graph larger than the host leaves only the complete graph
  ExtremalResult c = exact_ex(4, c4, complete_multipartite({2, 3}), no_cache());
  CHECK(c.value == count_k2t(make_clique(4), 2).value);
  CHECK(c.witness_g6 == canonical_g6(make_clique(4)));

  ExtremalResult d = exact_ex(3, p3, k3, no_cache());
  CHECK(d.value == sweep_max(3, p3, k3));
}

TEST_CASE("full sweep agreement at n <= 5") {
  Graph p3 = make_path(3);
  Graph c4 = make_cycle(4);
  Graph k3 = make_clique(3);
  for (int n = 3; n <= 5; ++n) {
    CHECK(exact_ex(n, p3, c4, no_cache()).value == sweep_max(n, p3, c4));
    CHECK(exact_ex(n, c4, k3, no_cache()).value == sweep_max(n, c4, k3));
  }
}

TEST_CASE("witness invariants") {
  Graph h = make_cycle(4), f = make_path(5);
  for (int n = 4; n <= 7; ++n) {
    ExtremalResult r = exact_ex(n, h, f, no_cache());
    Graph w = graph6_decode(r.witness_g6);
    CHECK(w.order() == n);
    CHECK_FALSE(embeds(f, w));
    CHECK(count_copies(h, w).value == r.value);
    CHECK(r.witness_g6 == canonical_g6(w));  // stored in canonical form
    CHECK(r.stats.maximal > 0);
    CHECK(r.stats.nodes >= r.stats.maximal);
  }
}

TEST_CASE("construction dominance") {
  Graph c4 = make_cycle(4);
  // K_4 blocks are P_5-free, so their count is a lower bound
  for (int n : {4, 5, 6, 7}) {
    ExtremalResult r = exact_ex(n, c4, make_path(5), no_cache());
    CHECK(r.value >= count_k2t(clique_blocks(n, 4), 2).value);
  }
  // complete bipartite hosts are K_3-free
  for (int n : {4, 5, 6}) {
    ExtremalResult r = exact_ex(n, c4, make_clique(3), no_cache());
    CHECK(r.value >= multipartite_k2t({(n + 1) / 2, n / 2}, 2));
  }
}

TEST_CASE("determinism and parallel agreement") {
  Graph h = make_cycle(4), f = make_path(5);
  ExtremalResult serial = exact_ex(6, h, f, no_cache());
  ExtremalResult again = exact_ex(6, h, f, no_cache());
  CHECK(serial.value == again.value);
  CHECK(serial.witness_g6 == again.witness_g6);

  OracleOptions par = no_cache();
  par.jobs = 4;
  ExtremalResult parallel = exact_ex(6, h, f, par);
  CHECK(parallel.value == serial.value);
  CHECK(parallel.witness_g6 == serial.witness_g6);
}

TEST_CASE("maximal stream") {
  // forbidding the triangle on 3 vertices leaves one branch class: the path
  std::vector<Graph> out;
  enumerate_maximal_free(3, make_clique(3), [&](const Graph& g) { out.push_back(g); });
  REQUIRE(out.size() == 1);
  CHECK(is_isomorphic(out[0], make_path(3)));

  // forbidding an edge: only the empty graph survives, and it is maximal
  out.clear();
  enumerate_maximal_free(5, make_clique(2), [&](const Graph& g) { out.push_back(g); });
  REQUIRE(out.size() == 1);
  CHECK(out[0].order() == 5);
  CHECK(out[0].edge_count() == 0);

  // every yielded graph is C_4-free and saturated: one more edge makes a C_4
  Graph c4 = make_cycle(4);
  bool saw_paw = false;
  Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  enumerate_maximal_free(4, c4, [&](const Graph& g) {
    CHECK_FALSE(embeds(c4, g));
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) {
        if (g.adjacent(u, v)) continue;
        auto edges = g.edges();
        edges.push_back({u, v});
        CHECK(embeds(c4, Graph(4, edges)));
      }
    saw_paw = saw_paw || is_isomorphic(g, paw);
  });
  CHECK(saw_paw);
}

TEST_CASE("cache round trip") {
  TempDir tmp;
  OracleOptions o;
  o.cache_dir = tmp.path.string();
  Graph h = make_path(3), f = make_cycle(4);

  ExtremalResult first = exact_ex(5, h, f, o);
  CHECK_FALSE(first.stats.from_cache);
  CHECK(first.value == 10);

  ExtremalResult second = exact_ex(5, h, f, o);
  CHECK(second.stats.from_cache);
  CHECK(second.value == first.value);
  CHECK(second.witness_g6 == first.witness_g6);

  // corrupt the entry: the oracle must fall back to a fresh search
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(tmp.path)) {
    std::ofstream(e.path()) << "{ not json";
    ++files;
  }
  CHECK(files == 1);
  ExtremalResult third = exact_ex(5, h, f, o);
  CHECK_FALSE(third.stats.from_cache);
  CHECK(third.value == first.value);

  // tampered value: well-formed JSON that fails witness re-verification
  for (const auto& e : std::filesystem::directory_iterator(tmp.path)) {
    std::ifstream in(e.path());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("\"10\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 4, "\"11\"");
    std::ofstream(e.path()) << text;
  }
  ExtremalResult fourth = exact_ex(5, h, f, o);
  CHECK_FALSE(fourth.stats.from_cache);
  CHECK(fourth.value == 10);
}

TEST_CASE("cache honors the environment variable") {
  TempDir tmp;
  ::setenv("TURAN_CACHE_DIR", tmp.path.c_str(), 1);
  ExtremalResult r = exact_ex(4, make_path(3), make_cycle(4), OracleOptions{});
  ::unsetenv("TURAN_CACHE_DIR");
  CHECK(r.value == 5);
  int files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(tmp.path)) ++files;
  CHECK(files == 1);
}

TEST_CASE("timeout truncation") {
  // triangle-free hosts on 8 vertices are far too many to sweep in 30ms
  OracleOptions o = no_cache();
  o.timeout_seconds = 0.03;
  ExtremalResult r = exact_ex(8, make_cycle(4), make_clique(3), o);
  CHECK_FALSE(r.complete);
  CHECK(r.value >= 0);
  Graph w = graph6_decode(r.witness_g6);
  CHECK_FALSE(embeds(make_clique(3), w));
}

TEST_CASE("precondition errors") {
  Graph h = make_path(3), f = make_cycle(4);
  CHECK_THROWS_AS(exact_ex(10, h, f, no_cache()), std::invalid_argument);
  CHECK_THROWS_AS(exact_ex(0, h, f, no_cache()), std::invalid_argument);
  CHECK_THROWS_AS(exact_ex(4, h, Graph(1, {}), no_cache()), std::invalid_argument);
  CHECK_THROWS_AS(exact_ex(4, h, Graph(3, {}), no_cache()), std::invalid_argument);
  CHECK_THROWS_AS(exact_ex(4, Graph(0, {}), f, no_cache()), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_maximal_free(10, f, [](const Graph&) {}), std::invalid_argument);
}
