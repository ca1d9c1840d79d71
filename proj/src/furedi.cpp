#include "turan/furedi.hpp"

#include "turan/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace turan {

namespace {

long long isqrt_floor(long long x) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool valid_q(long long q, int t) {
  if (q < 2 || q > std::numeric_limits<int>::max()) return false;
  if ((q - 1) % (t - 1) != 0) return false;
  int p = 0, k = 0;
  return prime_power_decompose(static_cast<int>(q), p, k);
}

}  // namespace

long long smallest_feasible_order(int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  for (long long q = 2;; ++q)
    if (valid_q(q, t)) return (q * q - 1) / (t - 1);
}

SelectQ select_q(long long n, int t) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (n > 4'000'000'000'000'000LL)
    throw std::invalid_argument("n out of supported range");

  SelectQ out;
  out.gap_value = std::sqrt(static_cast<double>(n) * t) -
                  std::cbrt(static_cast<double>(n));
  // (q^2-1)/(t-1) <= n is exactly q <= sqrt(n(t-1)+1).
  for (long long q = isqrt_floor(n * (t - 1) + 1); q >= 2; --q) {
    if (valid_q(q, t)) {
      out.q = q;
      return out;
    }
  }
  throw InfeasibleError("no prime power q with (t-1) | (q-1) fits n=" +
                        std::to_string(n) + ", t=" + std::to_string(t) +
                        "; smallest feasible n is " +
                        std::to_string(smallest_feasible_order(t)));
}

FurediGraph build_furedi(long long q, int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  int p = 0, k = 0;
  if (q < 2 || q > std::numeric_limits<int>::max() ||
      !prime_power_decompose(static_cast<int>(q), p, k))
    throw std::invalid_argument("q must be a prime power");
  if ((q - 1) % (t - 1) != 0)
    throw std::invalid_argument("t-1 must divide q-1");

  GaloisField f(p, k);
  using Elem = GaloisField::Elem;
  const Elem h = f.element_of_order(t - 1);
  std::vector<char> in_s(q, 0);
  {
    Elem x = h;
    for (int j = 1; j < t; ++j) {
      in_s[x] = 1;
      x = f.mul(x, h);
    }
  }

  FurediGraph fg;
  fg.q = q;
  fg.t = t;
  fg.h_code = h;

  // Sweep pairs lexicographically; the first pair met in each scaling class
  // is its minimum, hence the canonical representative.
  const long long qq = q * q;
  std::vector<int> class_of(qq, -1);
  for (Elem a = 0; a < q; ++a) {
    for (Elem b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      if (class_of[a * q + b] >= 0) continue;
      int idx = static_cast<int>(fg.reps.size());
      fg.reps.emplace_back(a, b);
      Elem xa = a, xb = b;
      for (int j = 0; j < t - 1; ++j) {
        class_of[static_cast<long long>(xa) * q + xb] = idx;
        xa = f.mul(xa, h);
        xb = f.mul(xb, h);
      }
      if (xa != a || xb != b)
        throw ConsistencyError("scaling orbit failed to close");
    }
  }
  const long long n = static_cast<long long>(fg.reps.size());
  if (n != (qq - 1) / (t - 1))
    throw ConsistencyError("class count mismatch");

  // Neighbours of class (a,b): solutions of a*c + b*d = s over s in S, which
  // is q field pairs per s, closed under scaling, so exactly q classes
  // (possibly including the class itself; that loop marks it special).
  std::vector<std::pair<int, int>> edges;
  std::vector<int> nbr;
  for (int u = 0; u < n; ++u) {
    const auto [a, b] = fg.reps[u];
    nbr.clear();
    if (a != 0) {
      const Elem ai = f.inv(a);
      for (Elem s = 1; s < q; ++s) {
        if (!in_s[s]) continue;
        for (Elem d = 0; d < q; ++d) {
          Elem c = f.mul(ai, f.add(s, f.neg(f.mul(b, d))));
          nbr.push_back(class_of[static_cast<long long>(c) * q + d]);
        }
      }
    } else {
      const Elem bi = f.inv(b);
      for (Elem s = 1; s < q; ++s) {
        if (!in_s[s]) continue;
        for (Elem c = 0; c < q; ++c) {
          Elem d = f.mul(bi, s);
          nbr.push_back(class_of[static_cast<long long>(c) * q + d]);
        }
      }
    }
    std::sort(nbr.begin(), nbr.end());
    nbr.erase(std::unique(nbr.begin(), nbr.end()), nbr.end());
    if (static_cast<long long>(nbr.size()) != q)
      throw ConsistencyError("neighbourhood class count is not q");
    for (int v : nbr) {
      if (v == u)
        fg.special.push_back(u);
      else if (v > u)
        edges.emplace_back(u, v);
    }
  }
  fg.graph = Graph(static_cast<int>(n), edges);
  return fg;
}

FurediReport verify_furedi(const FurediGraph& fg, std::uint64_t seed) {
  FurediReport r;
  const Graph& g = fg.graph;
  const long long q = fg.q;
  const int t = fg.t;
  const int n = g.order();

  r.vertex_count_ok = n == (q * q - 1) / (t - 1);

  std::vector<char> is_special(n, 0);
  for (int v : fg.special) is_special[v] = 1;
  r.degree_dichotomy_ok = true;
  for (int v = 0; v < n; ++v) {
    ++r.degree_histogram[g.degree(v)];
    long long want = is_special[v] ? q - 1 : q;
    if (g.degree(v) != want) r.degree_dichotomy_ok = false;
  }

  r.max_codegree = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int c = g.codegree(u, v);
      r.max_codegree = std::max(r.max_codegree, c);
      if (c == t - 1) ++r.pairs_at_t_minus_1;
      if (!g.adjacent(u, v))
        ++r.nonadjacent_codegree_histogram[c];
      else if (is_special[u] || is_special[v])
        ++r.adjacent_special_codegree_histogram[c];
      else
        ++r.adjacent_nonspecial_codegree_histogram[c];
    }
  }
  r.max_codegree_ok = r.max_codegree <= t - 1;

  r.k2t_free = count_k2t(g, t).value == 0;

  r.adjacent_special_at_most_t_minus_2 = true;
  for (const auto& [c, cnt] : r.adjacent_special_codegree_histogram)
    if (c > t - 2) r.adjacent_special_at_most_t_minus_2 = false;

  long long nonadj_below = 0;
  for (const auto& [c, cnt] : r.nonadjacent_codegree_histogram)
    if (c != t - 1) nonadj_below += cnt;
  if (nonadj_below > 0)
    r.notes.push_back(std::to_string(nonadj_below) +
                      " non-adjacent pairs have codegree below t-1");
  if (!r.adjacent_special_at_most_t_minus_2)
    r.notes.push_back(
        "some adjacent pair with a special endpoint exceeds codegree t-2");

  // Re-represent every class by a random scaling and rebuild the adjacency;
  // the defining relation multiplies dot products by a subgroup element, so
  // the edge set must not move.
  int p = 0, k = 0;
  prime_power_decompose(static_cast<int>(q), p, k);
  GaloisField f(p, k);
  using Elem = GaloisField::Elem;
  std::vector<char> in_s(q, 0);
  {
    Elem x = fg.h_code;
    for (int j = 1; j < t; ++j) {
      in_s[x] = 1;
      x = f.mul(x, fg.h_code);
    }
  }
  std::mt19937_64 rng(seed);
  r.representatives_ok = true;
  for (int round = 0; round < 20 && r.representatives_ok; ++round) {
    std::vector<std::pair<Elem, Elem>> alt(fg.reps);
    for (auto& [a, b] : alt) {
      Elem scale = f.pow(fg.h_code, static_cast<long long>(rng() % (t - 1)));
      a = f.mul(a, scale);
      b = f.mul(b, scale);
    }
    for (int u = 0; u < n && r.representatives_ok; ++u) {
      for (int v = u + 1; v < n; ++v) {
        Elem ip = f.add(f.mul(alt[u].first, alt[v].first),
                        f.mul(alt[u].second, alt[v].second));
        if (static_cast<bool>(in_s[ip]) != g.adjacent(u, v)) {
          r.representatives_ok = false;
          r.notes.push_back("re-representation changed adjacency at pair " +
                            std::to_string(u) + "," + std::to_string(v));
          break;
        }
      }
    }
  }

  r.all_ok = r.vertex_count_ok && r.degree_dichotomy_ok && r.max_codegree_ok &&
             r.k2t_free && r.representatives_ok;
  return r;
}

}  // namespace turan
