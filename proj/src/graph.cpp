#include "turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace turan {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

void Graph::check_vertex(int v, const char* role) const {
  if (v < 0 || v >= order_) {
    throw std::invalid_argument(std::string(role) + " vertex " + std::to_string(v) +
                                " out of range [0, " + std::to_string(order_) + ")");
  }
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edge_list) {
  if (order < 0) throw std::invalid_argument("negative order " + std::to_string(order));
  order_ = order;
  words_ = (order + 63) / 64;
  bits_.assign(static_cast<std::size_t>(order_) * words_, 0);
  neighbors_.assign(order_, {});
  edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= order_ || v < 0 || v >= order_) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range [0, " + std::to_string(order_) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(u) + " rejected");
    }
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto& ns : neighbors_) std::sort(ns.begin(), ns.end());
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u, "first");
  check_vertex(v, "second");
  return (row(u)[v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
  check_vertex(v, "degree");
  return static_cast<int>(neighbors_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v, "neighbors");
  return neighbors_[v];
}

int Graph::codegree(int u, int v) const {
  check_vertex(u, "first");
  check_vertex(v, "second");
  if (u == v) throw std::invalid_argument("codegree requires distinct vertices");
  const std::uint64_t* a = row(u);
  const std::uint64_t* b = row(v);
  int c = 0;
  for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

namespace {

constexpr int kG6Base = 63;
constexpr int kG6MaxOrder = 62;

}  // namespace

Graph graph6_decode(const std::string& text) {
  if (text.empty()) throw FormatError("graph6: empty input");
  const unsigned char b0 = static_cast<unsigned char>(text[0]);
  if (b0 == 126) throw FormatError("graph6: multi-byte order header at offset 0 not supported (order > 62)");
  if (b0 < kG6Base || b0 > kG6Base + kG6MaxOrder) {
    throw FormatError("graph6: invalid order byte at offset 0");
  }
  const int n = b0 - kG6Base;
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < 1 + body) {
    throw FormatError("graph6: truncated at offset " + std::to_string(text.size()) +
                      " (expected " + std::to_string(1 + body) + " bytes)");
  }
  if (text.size() > 1 + body) {
    throw FormatError("graph6: trailing garbage at offset " + std::to_string(1 + body));
  }
  std::vector<std::pair<int, int>> edges;
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const std::size_t byte = 1 + static_cast<std::size_t>(k / 6);
      const unsigned char c = static_cast<unsigned char>(text[byte]);
      if (c < kG6Base || c > 126) {
        throw FormatError("graph6: invalid body byte at offset " + std::to_string(byte));
      }
      if ((c - kG6Base) >> (5 - k % 6) & 1) edges.emplace_back(u, v);
    }
  }
  for (long long pad = bits; pad < static_cast<long long>(body) * 6; ++pad) {
    const std::size_t byte = 1 + static_cast<std::size_t>(pad / 6);
    const unsigned char c = static_cast<unsigned char>(text[byte]);
    if (c < kG6Base || c > 126) {
      throw FormatError("graph6: invalid body byte at offset " + std::to_string(byte));
    }
    if ((c - kG6Base) >> (5 - pad % 6) & 1) {
      throw FormatError("graph6: nonzero padding bit at offset " + std::to_string(byte));
    }
  }
  return Graph(n, edges);
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kG6MaxOrder) {
    throw std::invalid_argument("graph6 encoding supports order <= 62, got " + std::to_string(n));
  }
  std::string out(1 + static_cast<std::size_t>((static_cast<long long>(n) * (n - 1) / 2 + 5) / 6),
                  static_cast<char>(kG6Base));
  out[0] = static_cast<char>(kG6Base + n);
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (g.adjacent(u, v)) out[1 + k / 6] += 1 << (5 - k % 6);
    }
  }
  return out;
}

Graph edge_list_decode(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int order = -1;
  int max_seen = -1;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') {
      const std::size_t eq = line.find("n=", pos);
      if (eq != std::string::npos) order = std::stoi(line.substr(eq + 2));
      continue;
    }
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v)) {
      throw FormatError("edge list: malformed line " + std::to_string(line_no));
    }
    std::string rest;
    if (ls >> rest) {
      throw FormatError("edge list: trailing tokens on line " + std::to_string(line_no));
    }
    if (u < 0 || v < 0) {
      throw FormatError("edge list: negative vertex on line " + std::to_string(line_no));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_seen = std::max<long long>(max_seen, std::max(u, v));
  }
  if (order < 0) order = max_seen + 1;
  return Graph(order, edges);
}

std::string edge_list_encode(const Graph& g) {
  std::string out = "# n=" + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("complete_multipartite: empty part list");
  int n = 0;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("complete_multipartite: part size " + std::to_string(p));
    n += p;
  }
  std::vector<int> part_of(n);
  int base = 0, id = 0;
  for (int p : parts) {
    for (int v = base; v < base + p; ++v) part_of[v] = id;
    base += p;
    ++id;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

Graph make_path(int order) {
  if (order < 1) throw std::invalid_argument("path order must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < order; ++i) edges.emplace_back(i, i + 1);
  return Graph(order, edges);
}

Graph make_cycle(int order) {
  if (order < 3) throw std::invalid_argument("cycle order must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < order; ++i) edges.emplace_back(i, (i + 1) % order);
  return Graph(order, edges);
}

Graph make_star(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star needs >= 0 leaves");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph make_clique(int order) {
  if (order < 1) throw std::invalid_argument("clique order must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  }
  return Graph(order, edges);
}

Graph make_petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

namespace {

int greedy_clique_size(const Graph& g) {
  std::vector<int> by_degree(g.order());
  for (int v = 0; v < g.order(); ++v) by_degree[v] = v;
  std::sort(by_degree.begin(), by_degree.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> clique;
  for (int v : by_degree) {
    bool ok = true;
    for (int c : clique) {
      if (!g.adjacent(v, c)) {
        ok = false;
        break;
      }
    }
    if (ok) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

struct ChromaticSearch {
  const Graph& g;
  int best;
  std::vector<int> color;

  explicit ChromaticSearch(const Graph& graph, int upper)
      : g(graph), best(upper), color(graph.order(), -1) {}

  // DSATUR order: branch on the uncolored vertex seeing the most distinct
  // colors; ties to higher degree.
  int pick() const {
    int pick = -1, pick_sat = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (color[v] >= 0) continue;
      std::uint64_t mask = 0;
      for (int w : g.neighbors(v)) {
        if (color[w] >= 0) mask |= 1ull << color[w];
      }
      const int sat = std::popcount(mask);
      if (sat > pick_sat ||
          (sat == pick_sat && (pick < 0 || g.degree(v) > g.degree(pick)))) {
        pick = v;
        pick_sat = sat;
      }
    }
    return pick;
  }

  void run(int colored, int used) {
    if (used >= best) return;
    if (colored == g.order()) {
      best = used;
      return;
    }
    const int v = pick();
    std::uint64_t banned = 0;
    for (int w : g.neighbors(v)) {
      if (color[w] >= 0) banned |= 1ull << color[w];
    }
    const int limit = std::min(used + 1, best - 1);
    for (int c = 0; c < limit; ++c) {
      if (banned >> c & 1) continue;
      color[v] = c;
      run(colored + 1, std::max(used, c + 1));
      color[v] = -1;
    }
  }
};

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  const int lb = greedy_clique_size(g);
  ChromaticSearch search(g, g.order() + 1);
  search.run(0, 0);
  if (search.best < lb) throw ConsistencyError("chromatic number below clique bound");
  return search.best;
}

std::optional<int> bipartite_beta(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  int beta = 0;
  for (const auto& comp : connected_components(g)) {
    side[comp[0]] = 0;
    std::vector<int> queue{comp[0]};
    int counts[2] = {0, 0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int v = queue[i];
      ++counts[side[v]];
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = side[v] ^ 1;
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
    beta += std::min(counts[0], counts[1]);
  }
  return beta;
}

namespace {

// Iterated equitable refinement.  Colors are dense and ordered by an
// isomorphism-invariant signature, so cell order is canonical.
std::vector<int> refine_colors(const Graph& g) {
  std::vector<int> color(g.order());
  for (int v = 0; v < g.order(); ++v) color[v] = g.degree(v);
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig_of(g.order());
    for (int v = 0; v < g.order(); ++v) {
      std::vector<int> sig{color[v]};
      for (int w : g.neighbors(v)) sig.push_back(color[w]);
      std::sort(sig.begin() + 1, sig.end());
      sig_of[v] = {std::move(sig), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sig_of;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(g.order());
    int c = -1;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i == 0 || sorted[i].first != sorted[i - 1].first) ++c;
      next[sorted[i].second] = c;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

struct CanonicalSearch {
  // Relation of the current prefix to the best prefix of equal length.
  enum class Rel { NoBest, Equal, Less };

  const Graph& g;
  std::vector<int> cell_of;            // canonical cell index per vertex
  std::vector<int> old_of_new;         // current prefix
  std::vector<char> assigned;
  std::vector<char> best_bits;         // upper-triangle bits, column-major
  std::vector<int> best_old_of_new;
  std::vector<char> bits;

  explicit CanonicalSearch(const Graph& graph) : g(graph) {
    cell_of = refine_colors(g);
    assigned.assign(g.order(), 0);
    bits.reserve(static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2);
  }

  // Returns true when some leaf below replaced the best labeling; the new
  // best then runs through the caller's prefix, so the caller's relation
  // flips to Equal.
  bool extend(int k, Rel rel) {
    const int n = g.order();
    if (k == n) {
      if (rel == Rel::Equal) return false;
      best_bits = bits;
      best_old_of_new = old_of_new;
      return true;
    }
    // Labels are handed out cell by cell in canonical cell order.
    int cell = -1;
    for (int v = 0; v < n; ++v) {
      if (!assigned[v] && (cell < 0 || cell_of[v] < cell)) cell = cell_of[v];
    }
    bool replaced_any = false;
    for (int v = 0; v < n; ++v) {
      if (assigned[v] || cell_of[v] != cell) continue;
      Rel child = rel;
      bool prune = false;
      const std::size_t base = bits.size();
      for (int j = 0; j < k; ++j) {
        const char bit = g.adjacent(old_of_new[j], v) ? 1 : 0;
        if (child == Rel::Equal) {
          const char b = best_bits[base + j];
          if (bit > b) {
            prune = true;
            break;
          }
          if (bit < b) child = Rel::Less;
        }
        bits.push_back(bit);
      }
      if (prune) {
        bits.resize(base);
        continue;
      }
      assigned[v] = 1;
      old_of_new.push_back(v);
      if (extend(k + 1, child)) {
        replaced_any = true;
        rel = Rel::Equal;
      }
      old_of_new.pop_back();
      assigned[v] = 0;
      bits.resize(base);
    }
    return replaced_any;
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  CanonicalSearch search(g);
  search.extend(0, CanonicalSearch::Rel::NoBest);
  std::vector<int> new_of_old(g.order());
  for (int k = 0; k < g.order(); ++k) new_of_old[search.best_old_of_new[k]] = k;
  return new_of_old;
}

Graph relabel(const Graph& g, const std::vector<int>& new_of_old) {
  if (static_cast<int>(new_of_old.size()) != g.order()) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) edges.emplace_back(new_of_old[u], new_of_old[v]);
  return Graph(g.order(), edges);
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

std::string canonical_g6(const Graph& g) { return graph6_encode(canonical_form(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace turan
