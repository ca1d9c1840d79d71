#include "turan/constructions.hpp"

#include "turan/counting.hpp"
#include "turan/furedi.hpp"
#include "turan/tree_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace turan {

Graph build_k2rpq(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("build_k2rpq: negative count");
  if (p + q + r == 0) throw std::invalid_argument("build_k2rpq: p + q + r must be at least 1");
  std::vector<std::pair<int, int>> edges;
  const int u = 0, v = 1;
  for (int i = 0; i < r; ++i) {
    edges.push_back({u, 2 + i});
    edges.push_back({v, 2 + i});
  }
  int next = 2 + r;
  for (int i = 0; i < p; ++i) edges.push_back({u, next++});
  for (int i = 0; i < q; ++i) edges.push_back({v, next++});
  return Graph(next, edges);
}

Graph clique_blocks(int n, int m, bool include_leftover) {
  if (n < 1 || m < 1) throw std::invalid_argument("clique_blocks: n and m must be positive");
  std::vector<std::pair<int, int>> edges;
  int start = 0;
  while (start + m <= n) {
    for (int i = start; i < start + m; ++i)
      for (int j = i + 1; j < start + m; ++j) edges.push_back({i, j});
    start += m;
  }
  if (include_leftover) {
    for (int i = start; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

BigInt multipartite_k2t(const std::vector<int>& parts, int t) {
  if (t < 2) throw std::invalid_argument("multipartite_k2t: t must be at least 2");
  if (parts.empty()) throw std::invalid_argument("multipartite_k2t: empty part list");
  long long n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("multipartite_k2t: parts must be positive");
    n += p;
  }
  BigInt total = 0;
  for (size_t i = 0; i < parts.size(); ++i)
    total += binomial(parts[i], 2) * binomial(n - parts[i], t);
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      total += BigInt(parts[i]) * parts[j] * binomial(n - parts[i] - parts[j], t);
  if (t == 2) total /= 2;  // hub pairs unordered; every term above is even-summed
  return total;
}

namespace {

void scan_partitions(int remain, int max_part, int parts_left, std::vector<int>& cur,
                     int t, MultipartiteProfile& best) {
  if (remain == 0) {
    BigInt c = multipartite_k2t(cur, t);
    if (best.parts.empty() || c > best.count ||
        (c == best.count && cur > best.parts)) {
      best.parts = cur;
      best.count = c;
    }
    return;
  }
  if (parts_left == 0) return;
  // parts stay non-increasing; each recursion level fixes one part
  int hi = std::min(remain, max_part);
  // the remaining parts_left parts must be able to cover remain
  for (int p = hi; p >= 1; --p) {
    if (static_cast<long long>(p) * parts_left < remain) break;
    cur.push_back(p);
    scan_partitions(remain - p, p, parts_left - 1, cur, t, best);
    cur.pop_back();
  }
}

}  // namespace

MultipartiteProfile optimize_multipartite(int n, int k, int t) {
  if (k < 1 || n < k || n > 200) throw std::invalid_argument("optimize_multipartite: need 1 <= k <= n <= 200");
  if (t < 2) throw std::invalid_argument("optimize_multipartite: t must be at least 2");
  MultipartiteProfile best;
  best.t = t;
  std::vector<int> cur;
  scan_partitions(n, n, k, cur, t, best);
  return best;
}

namespace {

double profile_objective(const std::vector<double>& x, int t) {
  double total = 0.0;
  const int k = static_cast<int>(x.size());
  for (int i = 0; i < k; ++i)
    total += 0.5 * x[i] * x[i] * std::pow(std::max(0.0, 1.0 - x[i]), t);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      total += x[i] * x[j] * std::pow(std::max(0.0, 1.0 - x[i] - x[j]), t);
  if (t == 2) total *= 0.5;
  return total;
}

void scan_grid(int slot, int remain, int m, std::vector<int>& cur, int t,
               std::vector<int>& best_units, double& best_val) {
  const int k = static_cast<int>(cur.size());
  if (slot == k - 1) {
    cur[slot] = remain;
    std::vector<double> x(k);
    for (int i = 0; i < k; ++i) x[i] = static_cast<double>(cur[i]) / m;
    double v = profile_objective(x, t);
    if (v > best_val) {
      best_val = v;
      best_units = cur;
    }
    return;
  }
  for (int u = remain; u >= 0; --u) {
    cur[slot] = u;
    scan_grid(slot + 1, remain - u, m, cur, t, best_units, best_val);
  }
}

}  // namespace

FractionProfile asymptotic_profile(int k, int t, double resolution) {
  if (k < 2 || t < 2) throw std::invalid_argument("asymptotic_profile: need k >= 2 and t >= 2");
  if (!(resolution > 0.0) || resolution > 0.01)
    throw std::invalid_argument("asymptotic_profile: resolution must be in (0, 0.01]");
  const int m = static_cast<int>(std::llround(1.0 / resolution));
  std::vector<int> cur(k, 0), best_units;
  double best_val = -1.0;
  scan_grid(0, m, m, cur, t, best_units, best_val);

  std::vector<double> x(k);
  for (int i = 0; i < k; ++i) x[i] = static_cast<double>(best_units[i]) / m;

  // pairwise mass transfers at shrinking steps; deterministic scan order
  for (double step = resolution / 2; step > 1e-7; step /= 2) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          if (i == j || x[i] < step) continue;
          std::vector<double> y = x;
          y[i] -= step;
          y[j] += step;
          if (profile_objective(y, t) > best_val + 1e-15) {
            x = y;
            best_val = profile_objective(y, t);
            moved = true;
          }
        }
    }
  }

  FractionProfile out;
  out.fractions = x;
  std::sort(out.fractions.begin(), out.fractions.end(), std::greater<double>());
  out.objective = profile_objective(out.fractions, t);
  out.resolution = resolution;

  // sanity floor: the balanced point is always feasible
  std::vector<double> bal(k, 1.0 / k);
  if (out.objective + 1e-12 < profile_objective(bal, t))
    throw ConsistencyError("asymptotic_profile: search fell below the balanced point");
  return out;
}

Graph construct_g0(const Graph& tree, long long n, int t, G0Info* info, std::uint64_t seed) {
  if (t < 2) throw std::invalid_argument("construct_g0: t must be at least 2");
  if (n > 2'000'000'000LL) throw std::invalid_argument("construct_g0: n exceeds explicit-assembly range");
  TreeDecomposition d = decompose_tree(tree);
  if (d.nice) throw std::invalid_argument("construct_g0: tree is nice, no gluing construction applies");

  const long long n_prime = (n - static_cast<long long>(d.q_prime.size())) / tree.order();
  if (n_prime < 1) throw InfeasibleError("construct_g0: n too small for even one pendant per vertex");

  long long q = 0;
  FurediGraph block;
  if (!d.t_components.empty()) {
    q = select_q(n_prime, t).q;  // throws InfeasibleError when no block fits
    block = build_furedi(q, t);
  }

  // tree vertex -> position in the Q' copy
  std::vector<int> qpos(tree.order(), -1);
  for (size_t i = 0; i < d.q_prime.size(); ++i) qpos[d.q_prime[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : tree.edges())
    if (qpos[u] >= 0 && qpos[v] >= 0) edges.push_back({qpos[u], qpos[v]});

  int next = static_cast<int>(d.q_prime.size());
  std::vector<char> leafset(tree.order(), 0);
  for (int v : d.leaves) leafset[v] = 1;
  for (int v : d.q_prime) {
    bool touches_leaf = false;
    for (int w : tree.neighbors(v)) touches_leaf = touches_leaf || leafset[w];
    if (!touches_leaf) continue;
    for (long long i = 0; i < n_prime; ++i) edges.push_back({qpos[v], next++});
  }

  if (info) {
    info->pendants_per_vertex = n_prime;
    info->q = q;
    info->blocks = static_cast<int>(d.t_components.size());
    info->block_order = q ? block.graph.order() : 0;
    info->anchors.clear();
  }

  std::mt19937_64 rng(seed);
  const Graph& bg = block.graph;
  std::vector<char> special(q ? bg.order() : 0, 0);
  for (int v : block.special) special[v] = 1;

  for (const auto& tc : d.t_components) {
    const int ell = tc.ell;
    // pattern: the piece plus its attachment vertices, attachments first
    std::vector<int> pat_vertices = tc.attachments;
    pat_vertices.insert(pat_vertices.end(), tc.vertices.begin(), tc.vertices.end());
    std::vector<int> pat_index(tree.order(), -1);
    for (size_t i = 0; i < pat_vertices.size(); ++i) pat_index[pat_vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pat_edges;
    for (auto [u, v] : tree.edges())
      if (pat_index[u] >= 0 && pat_index[v] >= 0 &&
          (pat_index[u] >= ell || pat_index[v] >= ell))
        pat_edges.push_back({pat_index[u], pat_index[v]});
    Graph piece(static_cast<int>(pat_vertices.size()), pat_edges);
    std::vector<int> pat_anchors(ell);
    for (int i = 0; i < ell; ++i) pat_anchors[i] = i;

    // sample independent anchor tuples, preferring non-special vertices
    std::vector<int> nonspecial, specials;
    for (int v = 0; v < bg.order(); ++v) (special[v] ? specials : nonspecial).push_back(v);
    std::vector<int> best_tuple;
    BigInt best_count = -1;
    for (int trial = 0; trial < 200; ++trial) {
      std::shuffle(nonspecial.begin(), nonspecial.end(), rng);
      std::shuffle(specials.begin(), specials.end(), rng);
      std::vector<int> order = nonspecial;
      order.insert(order.end(), specials.begin(), specials.end());
      std::vector<int> tuple;
      for (int v : order) {
        bool clash = false;
        for (int u : tuple) clash = clash || bg.adjacent(u, v);
        if (!clash) tuple.push_back(v);
        if (static_cast<int>(tuple.size()) == ell) break;
      }
      if (static_cast<int>(tuple.size()) != ell) continue;
      BigInt c = count_embeddings_fixed(piece, pat_anchors, bg, tuple, t).count.value;
      if (c > best_count) {
        best_count = c;
        best_tuple = tuple;
      }
    }
    if (static_cast<int>(best_tuple.size()) != ell)
      throw ConsistencyError("construct_g0: no independent anchor tuple found");

    // glue: anchor i becomes the Q' copy of attachment i, the rest are fresh
    std::vector<int> bmap(bg.order(), -1);
    for (int i = 0; i < ell; ++i) bmap[best_tuple[i]] = qpos[tc.attachments[i]];
    for (int v = 0; v < bg.order(); ++v)
      if (bmap[v] < 0) bmap[v] = next++;
    for (auto [u, v] : bg.edges()) edges.push_back({bmap[u], bmap[v]});
    if (info) info->anchors.push_back(best_tuple);
  }

  Graph g0(next, edges);
  if (count_k2t(g0, t).value != 0)
    throw ConsistencyError("construct_g0: assembled host is not K_{2,t}-free");
  return g0;
}

namespace {

// f = K_{2,r}^{p,q} iff some non-adjacent vertex pair covers everything else
// with degree-2 common neighbours and degree-1 private ones.
std::optional<K2rpqShape> match_k2rpq(const Graph& f) {
  const int n = f.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (f.adjacent(u, v)) continue;
      int r = 0, p = 0, q = 0;
      bool ok = true;
      for (int w = 0; w < n && ok; ++w) {
        if (w == u || w == v) continue;
        const bool au = f.adjacent(w, u), av = f.adjacent(w, v);
        const int deg = f.degree(w);
        if (au && av) ok = (deg == 2), r += ok;
        else if (au) ok = (deg == 1), p += ok;
        else if (av) ok = (deg == 1), q += ok;
        else ok = false;
      }
      if (ok && p + q + r >= 1) {
        if (p < q) std::swap(p, q);
        return K2rpqShape{p, q, r};
      }
    }
  return std::nullopt;
}

}  // namespace

Classification classify_forbidden(const Graph& f, int t) {
  if (t < 2) throw std::invalid_argument("classify_forbidden: t must be at least 2");
  if (f.order() < 1) throw std::invalid_argument("classify_forbidden: empty forbidden graph");
  Classification out;
  out.chi = chromatic_number(f);
  if (embeds(f, complete_multipartite({2, t}))) {
    out.kind = ForbiddenCase::kZero;
    return out;
  }
  if (auto shape = match_k2rpq(f)) {
    out.shape = shape;
    if (shape->r > t) {
      out.kind = ForbiddenCase::kFurediQuadratic;
      return out;
    }
    if (shape->p + shape->q + shape->r > t) {
      out.kind = ForbiddenCase::kCliqueBlocks;
      return out;
    }
    // r <= t and p+q+r <= t would embed in K_{2,t}, already handled
  }
  if (auto beta = bipartite_beta(f)) {
    out.kind = ForbiddenCase::kBipartiteOther;
    out.beta = *beta;
    out.beta_at_most_t = *beta <= t;
    return out;
  }
  out.kind = ForbiddenCase::kChromatic;
  return out;
}

Graph spider(int legs, int len) {
  if (legs < 1 || len < 1) throw std::invalid_argument("spider: legs and len must be positive");
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Graph(next, edges);
}

Graph double_star(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("double_star: both sides need a leaf");
  std::vector<std::pair<int, int>> edges{{0, 1}};
  int next = 2;
  for (int i = 0; i < p; ++i) edges.push_back({0, next++});
  for (int i = 0; i < q; ++i) edges.push_back({1, next++});
  return Graph(next, edges);
}

namespace {

std::vector<int> name_args(const std::string& name, size_t prefix_len) {
  std::vector<int> out;
  std::stringstream ss(name.substr(prefix_len));
  std::string tok;
  while (std::getline(ss, tok, '_')) {
    if (tok.empty()) throw std::invalid_argument("graph_from_name: malformed name " + name);
    out.push_back(std::stoi(tok));
  }
  return out;
}

bool has_prefix(const std::string& name, const std::string& prefix) {
  return name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

Graph graph_from_name(const std::string& name) {
  if (name == "petersen") return make_petersen();
  struct Entry {
    const char* prefix;
    int arity;  // -1: any positive count
  };
  static const Entry entries[] = {
      {"path_", 1},       {"star_", 1},    {"cycle_", 1},        {"clique_", 1},
      {"k2t_", 1},        {"k2rpq_", 3},   {"spider_", 2},       {"doublestar_", 2},
      {"multipartite_", -1}, {"cliqueblocks_", 2}, {"furedi_", 2},
  };
  for (const auto& e : entries) {
    if (!has_prefix(name, e.prefix)) continue;
    std::vector<int> a = name_args(name, std::string(e.prefix).size());
    if (e.arity >= 0 && static_cast<int>(a.size()) != e.arity)
      throw std::invalid_argument("graph_from_name: wrong argument count in " + name);
    if (a.empty()) throw std::invalid_argument("graph_from_name: missing arguments in " + name);
    const std::string p = e.prefix;
    if (p == "path_") return make_path(a[0]);
    if (p == "star_") return make_star(a[0]);
    if (p == "cycle_") return make_cycle(a[0]);
    if (p == "clique_") return make_clique(a[0]);
    if (p == "k2t_") return complete_multipartite({2, a[0]});
    if (p == "k2rpq_") return build_k2rpq(a[0], a[1], a[2]);
    if (p == "spider_") return spider(a[0], a[1]);
    if (p == "doublestar_") return double_star(a[0], a[1]);
    if (p == "multipartite_") return complete_multipartite(a);
    if (p == "cliqueblocks_") return clique_blocks(a[0], a[1]);
    if (p == "furedi_") return build_furedi(a[0], a[1]).graph;
  }
  throw std::invalid_argument("graph_from_name: unknown builtin " + name);
}

}  // namespace turan
