#include "turan/suite.hpp"

#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/furedi.hpp"
#include "turan/oracle.hpp"
#include "turan/tree_analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace turan {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20260815;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

struct Battery {
  SuiteReport& rep;
  Clock::time_point mark = Clock::now();

  void tick() { mark = Clock::now(); }

  void add(int criterion, const std::string& id, bool hard, bool pass,
           const std::string& observed, const std::string& expected) {
    SuiteItem it;
    it.criterion = criterion;
    it.id = id;
    it.hard = hard;
    it.pass = pass;
    it.observed = observed;
    it.expected = expected;
    it.seconds = std::chrono::duration<double>(Clock::now() - mark).count();
    if (hard && !pass) rep.all_hard_pass = false;
    rep.items.push_back(std::move(it));
    tick();
  }

  // failures are data: a thrown exception becomes a failing hard item
  template <class Fn>
  void guard(int criterion, const std::string& id, Fn&& fn) {
    tick();
    try {
      fn();
    } catch (const std::exception& e) {
      add(criterion, id + "-exception", true, false, e.what(), "no exception");
    }
  }
};

Graph random_graph(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) edges.push_back({u, v});
  return Graph(n, edges);
}

long long naive_embeddings(const Graph& p, const Graph& g, std::vector<int>& img,
                           std::vector<char>& used, int pv) {
  if (pv == p.order()) return 1;
  long long total = 0;
  for (int w = 0; w < g.order(); ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int u : p.neighbors(pv))
      if (u < pv && !g.adjacent(img[u], w)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    img[pv] = w;
    used[w] = 1;
    total += naive_embeddings(p, g, img, used, pv + 1);
    used[w] = 0;
  }
  return total;
}

long long naive_embeddings(const Graph& p, const Graph& g) {
  std::vector<int> img(p.order(), -1);
  std::vector<char> used(g.order(), 0);
  return naive_embeddings(p, g, img, used, 0);
}

Graph branch6() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}}); }
Graph branch7() { return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {5, 6}}); }

// the growth-rate hosts carry ~10^9 tree copies, far beyond per-embedding
// enumeration; these shapes admit exact counts from degree statistics
struct TreeShape {
  int kind;  // 0 star, 1 double star, 2 star with one subdivided edge
  int a;
  int b;
};

BigInt falling(long long x, int k) {
  if (x < k) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

BigInt fast_tree_embeddings(const TreeShape& s, const Graph& g) {
  const int n = g.order();
  BigInt total = 0;
  if (s.kind == 0) {
    for (int v = 0; v < n; ++v) total += falling(g.degree(v), s.a);
  } else if (s.kind == 1) {
    const BigInt perms = falling(s.a, s.a) * falling(s.b, s.b);
    for (int u = 0; u < n; ++u)
      for (int v : g.neighbors(u)) {
        // leaf pools N(u)\{v} and N(v)\{u} overlap in the common neighbours
        const long long da = g.degree(u) - 1, db = g.degree(v) - 1;
        const long long x = g.codegree(u, v);
        BigInt ways = 0;
        for (long long i = 0; i <= std::min<long long>(s.a, x); ++i)
          ways += binomial(x, i) * binomial(da - x, s.a - i) * binomial(db - i, s.b);
        total += ways * perms;
      }
  } else {
    for (int c = 0; c < n; ++c)
      for (int m : g.neighbors(c))
        for (int e : g.neighbors(m)) {
          if (e == c) continue;
          total += falling(g.degree(c) - 1 - (g.adjacent(c, e) ? 1 : 0), s.a);
        }
  }
  return total;
}

void criterion_furedi_structure(Battery& bat, SuiteLevel level) {
  const std::pair<int, int> cases[] = {{5, 2}, {7, 3}, {7, 4}, {9, 3}, {13, 3}};
  for (auto [q, t] : cases) {
    // quick level skips the q >= 11 builds
    if (level == SuiteLevel::kQuick && q >= 11) continue;
    std::string id = "c1-furedi-" + std::to_string(q) + "-" + std::to_string(t);
    bat.guard(1, id, [&, q, t] {
      FurediGraph fg = build_furedi(q, t);
      FurediReport r = verify_furedi(fg);
      std::ostringstream obs;
      obs << "N=" << fg.graph.order() << " dichotomy=" << r.degree_dichotomy_ok
          << " maxcodeg=" << r.max_codegree << " k2tfree=" << r.k2t_free;
      bat.add(1, id, true, r.all_ok,
              obs.str(), "N=(q^2-1)/(t-1), degrees {q-1,q}, codeg<=t-1, no K_{2,t}");
    });
  }
}

void criterion_paper_numbers(Battery& bat) {
  bat.guard(2, "c2", [&] {
    BigInt blocks = count_k2t(clique_blocks(14, 9), 7).value;
    bat.add(2, "c2-clique-blocks-36", true, blocks == 36, blocks.str(), "36");
    BigInt bip = count_k2t(complete_multipartite({7, 7}), 7).value;
    bat.add(2, "c2-bipartite-42", true, bip == 42, bip.str(), "42");
    MultipartiteProfile best = optimize_multipartite(14, 2, 7);
    std::ostringstream obs;
    obs << "(" << best.parts[0] << "," << best.parts[1] << ")/" << best.count.str();
    bat.add(2, "c2-optimized-990", false, best.count == 990 && best.count >= 42,
            obs.str(), "990 >= 42, far above the balanced 42");
  });
}

void criterion_equality_case(Battery& bat, SuiteLevel level, int jobs) {
  OracleOptions o;
  o.jobs = jobs;
  Graph c4 = make_cycle(4), p5 = make_path(5);
  bat.guard(3, "c3-n4", [&] {
    ExtremalResult r = exact_ex(4, c4, p5, o);
    bat.add(3, "c3-n4", true, r.value == 3 && r.complete, r.value.str(),
            "3 = floor(4/4) * 3");
  });
  if (level == SuiteLevel::kFull) {
    bat.guard(3, "c3-n8", [&] {
      ExtremalResult r = exact_ex(8, c4, p5, o);
      bool iso = is_isomorphic(graph6_decode(r.witness_g6), clique_blocks(8, 4));
      bat.add(3, "c3-n8", true, r.value == 6 && iso && r.complete,
              r.value.str() + " witness " + r.witness_g6, "6 with witness 2K_4");
    });
  }
}

void criterion_quadratic_case(Battery& bat, int jobs) {
  OracleOptions o;
  o.jobs = jobs;
  Graph c4 = make_cycle(4), k23 = complete_multipartite({2, 3});
  for (int n = 5; n <= 7; ++n) {
    std::string id = "c4-n" + std::to_string(n);
    bat.guard(4, id, [&, n] {
      ExtremalResult r = exact_ex(n, c4, k23, o);
      BigInt best = count_k2t(clique_blocks(n, 4), 2).value;
      try {
        long long q = select_q(n, 3).q;
        best = std::max(best, count_k2t(build_furedi(q, 3).graph, 2).value);
      } catch (const InfeasibleError&) {
      }
      bat.add(4, id, true, r.value >= best,
              r.value.str() + " vs best construction " + best.str(),
              "oracle >= best of clique blocks / quadratic hosts");
      double ratio = r.value.convert_to<double>() /
                     binomial(n, 2).convert_to<double>();  // C(r-1,t)=C(2,2)=1
      bat.add(4, id + "-ratio", false, true, fmt(ratio),
              "ratio to C(n,2)*C(r-1,t), reported only");
    });
  }
}

void criterion_counting_equivalence(Battery& bat, int jobs) {
  bat.guard(5, "c5-k2t", [&] {
    std::mt19937_64 rng(kSeed);
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
      int n = 2 + static_cast<int>(rng() % 9);
      Graph g = random_graph(rng, n);
      for (int t : {2, 3, 4})
        if (count_k2t(g, t).value != count_copies(complete_multipartite({2, t}), g, jobs).value)
          ++failures;
    }
    bat.add(5, "c5-k2t", true, failures == 0,
            std::to_string(failures) + " mismatches in 300 comparisons",
            "count_k2t == count_copies(K_{2,t}) on 100 random graphs");
  });
  bat.guard(5, "c5-brute", [&] {
    std::mt19937_64 rng(kSeed + 1);
    int failures = 0;
    for (int trial = 0; trial < 30; ++trial) {
      int pn = 2 + static_cast<int>(rng() % 4);
      int hn = 2 + static_cast<int>(rng() % 7);
      Graph p = random_graph(rng, pn), h = random_graph(rng, hn);
      if (count_embeddings(p, h).value != naive_embeddings(p, h)) ++failures;
    }
    bat.add(5, "c5-brute", true, failures == 0,
            std::to_string(failures) + " mismatches in 30 instances",
            "engine == naive all-injections count");
  });
}

void criterion_tree_machinery(Battery& bat) {
  bat.guard(6, "c6", [&] {
    const int census[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    std::vector<std::vector<Graph>> trees(11);
    bool census_ok = true;
    for (int n = 1; n <= 10; ++n) {
      trees[n] = enumerate_trees(n);
      census_ok = census_ok && static_cast<int>(trees[n].size()) == census[n];
    }
    bat.add(6, "c6-census", true, census_ok,
            std::to_string(trees[10].size()) + " trees at n=10", "1,1,1,2,3,6,11,23,47,106");

    std::mt19937_64 rng(kSeed + 2);
    bool indep_ok = true, nice_iff_ok = true, proof_nice_ok = true;
    bool proof_nonnice_ok = true, literal_ok = true;
    std::vector<Graph> disagreement;
    for (int n = 2; n <= 10; ++n) {
      for (const Graph& t : trees[n]) {
        TreeDecomposition d = decompose_tree(t);
        std::set<int> a0(d.a.begin(), d.a.end());
        for (int rep = 0; rep < 20; ++rep) {
          std::vector<int> perm(n);
          std::iota(perm.begin(), perm.end(), 0);
          std::shuffle(perm.begin(), perm.end(), rng);
          TreeDecomposition dr = partition_ab(relabel(t, perm));
          std::set<int> expect;
          for (int v : a0) expect.insert(perm[v]);
          indep_ok = indep_ok && std::set<int>(dr.a.begin(), dr.a.end()) == expect;
        }
        if (n < 3) continue;
        std::set<int> lset(d.leaves.begin(), d.leaves.end());
        bool all_b_leaves = true;
        for (int v : d.b) all_b_leaves = all_b_leaves && lset.count(v);
        nice_iff_ok = nice_iff_ok && (d.nice == all_b_leaves);
        HalfInt prf = proof_exponent(d);
        if (d.nice) {
          proof_nice_ok = proof_nice_ok && prf == half(n + 1);
        } else {
          proof_nonnice_ok = proof_nonnice_ok && prf > half(n + 1);
          HalfInt lit = literal_exponent(d);
          literal_ok = literal_ok && lit >= prf;
          if (lit > prf) disagreement.push_back(t);
        }
      }
    }
    bat.add(6, "c6-ab-independence", true, indep_ok, indep_ok ? "stable" : "unstable",
            "A/B identical under 20 random relabelings per tree");
    bat.add(6, "c6-nice-iff", true, nice_iff_ok, nice_iff_ok ? "ok" : "mismatch",
            "nice iff every B-vertex is a leaf (n >= 3)");
    bat.add(6, "c6-proof-nice", true, proof_nice_ok, proof_nice_ok ? "ok" : "mismatch",
            "nice => proof exponent (|V|+1)/2");
    bat.add(6, "c6-proof-nonnice", true, proof_nonnice_ok, proof_nonnice_ok ? "ok" : "mismatch",
            "non-nice => proof exponent > (|V|+1)/2");
    bool has_branch = false;
    for (const Graph& t : disagreement)
      has_branch = has_branch || (t.order() == 6 && is_isomorphic(t, branch6()));
    bat.add(6, "c6-literal-vs-proof", true, literal_ok && has_branch,
            std::to_string(disagreement.size()) + " trees with literal > proof",
            "literal >= proof always; strict set non-empty, contains the 6-vertex branch tree");
    bat.add(0, "oq-literal-proof-set", false, true,
            std::to_string(disagreement.size()) +
                " non-nice trees up to 10 vertices where the literal exponent exceeds the "
                "proved one (smallest: the degree-4 centre with one length-2 arm, 5 vs 4)",
            "reported: the statement's formula and its proof disagree on these");
  });
}

void criterion_embedding_trend(Battery& bat, SuiteLevel level, int jobs) {
  struct Probe {
    const char* name;
    Graph tree;
  };
  const Probe probes[] = {{"p4", make_path(4)}, {"spider", spider(3, 2)}};
  std::vector<int> qs = {7, 9};
  if (level == SuiteLevel::kFull) qs.push_back(13);
  for (const auto& pr : probes) {
    bat.guard(7, std::string("c7-") + pr.name, [&] {
      const int v = pr.tree.order();
      std::vector<double> ratios;
      for (int q : qs) {
        FurediGraph fg = build_furedi(q, 3);
        double denom = std::pow(2.0, (v - 1) / 2.0) *
                       std::pow(static_cast<double>(fg.graph.order()), (v + 1) / 2.0);
        double r = count_embeddings(pr.tree, fg.graph, false, jobs).value.convert_to<double>() / denom;
        ratios.push_back(r);
        bat.add(7, std::string("c7-") + pr.name + "-q" + std::to_string(q), true,
                r >= 0.5 && r <= 1.5, fmt(r), "embeddings / (t-1)^{(v-1)/2} N^{(v+1)/2} in [0.5,1.5]");
      }
      bool monotone = true;
      for (std::size_t i = 1; i < ratios.size(); ++i)
        monotone = monotone && std::abs(ratios[i] - 1) <= std::abs(ratios[i - 1] - 1) + 1e-9;
      bat.add(7, std::string("c7-") + pr.name + "-monotone", true, monotone,
              fmt(std::abs(ratios.front() - 1)) + " -> " + fmt(std::abs(ratios.back() - 1)),
              "|ratio - 1| non-increasing in q");
      double last = ratios.back();
      bat.add(7, std::string("c7-") + pr.name + "-final", false, last >= 0.8 && last <= 1.25,
              fmt(last), "final ratio within [0.8,1.25] (soft)");
    });
  }
}

void criterion_g0(Battery& bat, int jobs) {
  struct Tc {
    const char* name;
    TreeShape shape;
    Graph tree;
  };
  const Tc cases[] = {
      {"star3", {0, 3, 0}, make_star(3)},
      {"star4", {0, 4, 0}, make_star(4)},
      {"doublestar22", {1, 2, 2}, double_star(2, 2)},
      {"branch6", {2, 3, 0}, branch6()},
      {"branch7", {2, 4, 0}, branch7()},
  };
  bat.guard(8, "c8-counter-validation", [&] {
    std::mt19937_64 rng(kSeed + 3);
    int failures = 0;
    for (int trial = 0; trial < 25; ++trial) {
      Graph g = random_graph(rng, 8 + static_cast<int>(rng() % 11));
      for (const auto& tc : cases)
        if (fast_tree_embeddings(tc.shape, g) != count_embeddings(tc.tree, g).value)
          ++failures;
    }
    bat.add(8, "c8-counter-validation", true, failures == 0,
            std::to_string(failures) + " mismatches in 125 instances",
            "degree-statistics counter == generic engine on random graphs");
  });
  for (const auto& tc : cases) {
    bat.guard(8, std::string("c8-") + tc.name, [&] {
      double proof = proof_exponent(decompose_tree(tc.tree)).value();
      BigInt aut = automorphism_count(tc.tree);
      BigInt e200, e800;
      for (long long n : {200LL, 800LL}) {
        Graph g0 = construct_g0(tc.tree, n, 3);
        BigInt free_check = count_k2t(g0, 3).value;
        bat.add(8, std::string("c8-") + tc.name + "-free-n" + std::to_string(n), true,
                free_check == 0, "K_{2,3} count " + free_check.str(), "0 (hard)");
        BigInt emb = fast_tree_embeddings(tc.shape, g0);
        if (n == 200) {
          // the smaller host is still enumerable, pin the counter against it
          BigInt engine = count_embeddings(tc.tree, g0, false, jobs).value;
          bat.add(8, std::string("c8-") + tc.name + "-xcheck", true, emb == engine,
                  emb.str() + " vs engine " + engine.str(),
                  "counter agrees with enumeration at n=200");
        }
        (n == 200 ? e200 : e800) = emb;
      }
      double slope = (std::log(e800.convert_to<double>()) - std::log(e200.convert_to<double>())) /
                     std::log(800.0 / 200.0);
      bat.add(8, std::string("c8-") + tc.name + "-slope", false,
              std::abs(slope - proof) <= 0.5,
              BigInt(e200 / aut).str() + " -> " + BigInt(e800 / aut).str() + " copies, slope " + fmt(slope) +
                  " vs proved exponent " + fmt(proof),
              "two-point slope within +-0.5 of the proved exponent (soft)");
    });
  }
}

void criterion_optimizers(Battery& bat) {
  bat.guard(9, "c9", [&] {
    MultipartiteProfile p = optimize_multipartite(8, 2, 2);
    bool ok = p.parts == std::vector<int>{4, 4} && p.count == 36;
    bat.add(9, "c9-multipartite-8-2-2", true, ok,
            "(" + std::to_string(p.parts[0]) + "," + std::to_string(p.parts[1]) + ")/" +
                p.count.str(),
            "(4,4)/36");
    FractionProfile bal = asymptotic_profile(2, 4, 0.01);
    bat.add(9, "c9-profile-2-4", true, std::abs(bal.fractions[0] - 0.5) <= 0.01,
            fmt(bal.fractions[0]), "balanced within 0.01 at t=4");
    FractionProfile skew = asymptotic_profile(2, 5, 0.01);
    bat.add(9, "c9-profile-2-5", true,
            skew.fractions[0] < 0.49 || skew.fractions[0] > 0.51, fmt(skew.fractions[0]),
            "max fraction outside [0.49,0.51] at t=5");
  });
}

void criterion_classification(Battery& bat) {
  struct Case {
    const char* name;
    Graph f;
    ForbiddenCase expect2;
    ForbiddenCase expect3;
  };
  const Case cases[] = {
      {"k2", make_clique(2), ForbiddenCase::kZero, ForbiddenCase::kZero},
      {"p5", make_path(5), ForbiddenCase::kCliqueBlocks, ForbiddenCase::kZero},
      {"c4", make_cycle(4), ForbiddenCase::kZero, ForbiddenCase::kZero},
      {"c6", make_cycle(6), ForbiddenCase::kBipartiteOther, ForbiddenCase::kBipartiteOther},
      {"k29", complete_multipartite({2, 9}), ForbiddenCase::kFurediQuadratic,
       ForbiddenCase::kFurediQuadratic},
      {"k3", make_clique(3), ForbiddenCase::kChromatic, ForbiddenCase::kChromatic},
      {"k4", make_clique(4), ForbiddenCase::kChromatic, ForbiddenCase::kChromatic},
      {"petersen", make_petersen(), ForbiddenCase::kChromatic, ForbiddenCase::kChromatic},
  };
  auto kind_name = [](ForbiddenCase k) {
    switch (k) {
      case ForbiddenCase::kZero: return "ZERO";
      case ForbiddenCase::kCliqueBlocks: return "CLIQUE_BLOCKS";
      case ForbiddenCase::kFurediQuadratic: return "FUREDI_QUADRATIC";
      case ForbiddenCase::kBipartiteOther: return "BIPARTITE_OTHER";
      case ForbiddenCase::kChromatic: return "CHROMATIC";
    }
    return "?";
  };
  for (const auto& c : cases) {
    for (int t : {2, 3}) {
      std::string id = std::string("c10-") + c.name + "-t" + std::to_string(t);
      bat.guard(10, id, [&] {
        ForbiddenCase got = classify_forbidden(c.f, t).kind;
        ForbiddenCase want = t == 2 ? c.expect2 : c.expect3;
        bat.add(10, id, true, got == want, kind_name(got), kind_name(want));
      });
    }
  }
}

void criterion_oracle_selfcheck(Battery& bat, int jobs) {
  OracleOptions o;
  o.jobs = jobs;
  struct Pair {
    const char* name;
    Graph h;
    Graph f;
  };
  const Pair pairs[] = {{"p3-c4", make_path(3), make_cycle(4)},
                        {"c4-k3", make_cycle(4), make_clique(3)}};
  std::vector<std::pair<int, int>> slots;
  for (const auto& pr : pairs) {
    for (int n = 3; n <= 5; ++n) {
      std::string id = std::string("c11-") + pr.name + "-n" + std::to_string(n);
      bat.guard(11, id, [&, n] {
        slots.clear();
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
        BigInt best = -1;
        for (std::uint32_t m = 0; m < (1u << slots.size()); ++m) {
          std::vector<std::pair<int, int>> edges;
          for (std::size_t i = 0; i < slots.size(); ++i)
            if (m >> i & 1u) edges.push_back(slots[i]);
          Graph g(n, edges);
          if (embeds(pr.f, g)) continue;
          best = std::max(best, count_copies(pr.h, g).value);
        }
        ExtremalResult r = exact_ex(n, pr.h, pr.f, o);
        bat.add(11, id, true, r.value == best,
                r.value.str() + " vs sweep " + best.str(), "maximal search == full sweep");
      });
    }
  }
}

void open_question_reports(Battery& bat, int jobs) {
  OracleOptions o;
  o.jobs = jobs;
  Graph c4 = make_cycle(4);
  bat.guard(0, "oq-p3-parity", [&] {
    // the source text pins C(n,2) to even n and C(n,2)-1 to odd n in one
    // breath while describing a single construction; report what the oracle
    // actually finds at n = 4..7
    for (int n = 4; n <= 7; ++n) {
      ExtremalResult r = exact_ex(n, make_path(3), c4, o);
      BigInt full = binomial(n, 2);
      std::string tag = r.value == full ? "C(n,2)" :
                        r.value == full - 1 ? "C(n,2)-1" : "neither";
      bat.add(0, "oq-p3-parity-n" + std::to_string(n), false, true,
              r.value.str() + " = " + tag, "reported: which parity attains C(n,2)");
    }
  });
  bat.guard(0, "oq-star-reading", [&] {
    // "S_r" with r = 4 against C(n-1, r-1) at n = 6: star on r vertices vs
    // star with r leaves
    ExtremalResult vertices_reading = exact_ex(6, make_star(3), c4, o);
    ExtremalResult leaves_reading = exact_ex(6, make_star(4), c4, o);
    BigInt target = binomial(5, 3);
    std::ostringstream obs;
    obs << "r-vertices: " << vertices_reading.value.str() << ", r-leaves: "
        << leaves_reading.value.str() << ", C(n-1,r-1)=" << target.str();
    bat.add(0, "oq-star-reading", false, true, obs.str(),
            "reported: which reading of S_r matches C(n-1,r-1)");
  });
}

}  // namespace

SuiteReport run_suite(SuiteLevel level, int jobs) {
  SuiteReport rep;
  rep.level = level;
  const auto start = Clock::now();
  Battery bat{rep};

  criterion_furedi_structure(bat, level);
  criterion_paper_numbers(bat);
  criterion_equality_case(bat, level, jobs);
  criterion_quadratic_case(bat, jobs);
  criterion_counting_equivalence(bat, jobs);
  criterion_tree_machinery(bat);
  criterion_embedding_trend(bat, level, jobs);
  criterion_g0(bat, jobs);
  criterion_optimizers(bat);
  criterion_classification(bat);
  criterion_oracle_selfcheck(bat, jobs);
  open_question_reports(bat, jobs);

  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

}  // namespace turan
