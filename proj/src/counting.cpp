#include "turan/counting.hpp"

#include "turan/tree_analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace turan {

namespace {

// Largest batch handled by the set-partition formula; Bell(9) = 21147.
constexpr int kBatchMax = 9;

struct Partition {
  std::vector<std::vector<int>> blocks;
  long long coef;  // prod over blocks of (-1)^(|B|-1) (|B|-1)!
};

// All set partitions of {0..k-1} for k = 0..kBatchMax, built once.
const std::vector<Partition>& partitions_of(int k) {
  static const std::vector<std::vector<Partition>> all = [] {
    std::vector<std::vector<Partition>> out(kBatchMax + 1);
    for (int n = 0; n <= kBatchMax; ++n) {
      std::vector<int> rgs(n, 0);
      auto rec = [&](auto&& self, int i, int maxb) -> void {
        if (i == n) {
          Partition part;
          part.blocks.assign(maxb + 1, {});
          for (int j = 0; j < n; ++j) part.blocks[rgs[j]].push_back(j);
          part.coef = 1;
          for (const auto& blk : part.blocks)
            for (int m = 1; m < static_cast<int>(blk.size()); ++m)
              part.coef *= -m;
          out[n].push_back(std::move(part));
          return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
          rgs[i] = b;
          self(self, i + 1, std::max(maxb, b));
        }
      };
      rec(rec, 0, -1);
    }
    return out;
  }();
  return all.at(k);
}

// Backtracking embedder.  Pattern vertices are assigned one at a time,
// smallest candidate set first among vertices with an assigned neighbour
// (connectivity-respecting); untouched components start at their
// largest-degree vertex.  Once every unassigned pattern vertex has all its
// neighbours assigned, the remaining choices are independent and the count of
// injective completions comes from the set-partition inclusion-exclusion
//   sum over partitions pi of prod_{B in pi} (-1)^{|B|-1}(|B|-1)! |inter C_i|.
struct Embedder {
  const Graph& pat;
  const Graph& host;
  bool existence;

  int words;
  int hn;
  std::vector<int> image;           // pattern -> host, -1 unassigned
  std::vector<std::uint64_t> used;  // host vertices taken
  int assigned = 0;

  BigInt total = 0;
  bool found = false;

  std::vector<std::uint64_t> scratch;

  Embedder(const Graph& p, const Graph& h, bool existence_only)
      : pat(p),
        host(h),
        existence(existence_only),
        words(h.row_words()),
        hn(h.order()),
        image(p.order(), -1),
        used(words, 0),
        scratch(words) {}

  void assign(int v, int w) {
    image[v] = w;
    used[w >> 6] |= std::uint64_t{1} << (w & 63);
    ++assigned;
  }

  void unassign(int v) {
    int w = image[v];
    image[v] = -1;
    used[w >> 6] &= ~(std::uint64_t{1} << (w & 63));
    --assigned;
  }

  // Unused host vertices compatible with the assigned pattern-neighbours of v.
  void fill_candidates(int v, std::uint64_t* out) const {
    for (int w = 0; w < words; ++w) out[w] = ~used[w];
    if (hn % 64) out[words - 1] &= (std::uint64_t{1} << (hn % 64)) - 1;
    for (int u : pat.neighbors(v)) {
      if (image[u] >= 0) {
        const std::uint64_t* row = host.row(image[u]);
        for (int w = 0; w < words; ++w) out[w] &= row[w];
      }
    }
  }

  int popcount(const std::uint64_t* x) const {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(x[w]);
    return c;
  }

  void run() {
    if (assigned == pat.order()) {
      total += 1;
      found = true;
      return;
    }

    std::vector<int> sinks;  // unassigned with every neighbour assigned
    bool all_sinks = true;
    int best_v = -1;
    bool best_frontier = false;
    int best_count = 0;
    for (int v = 0; v < pat.order(); ++v) {
      if (image[v] >= 0) continue;
      bool frontier = false, sink = true;
      for (int u : pat.neighbors(v)) {
        if (image[u] >= 0)
          frontier = true;
        else
          sink = false;
      }
      if (sink)
        sinks.push_back(v);
      else
        all_sinks = false;
      if (frontier && !best_frontier) {
        best_v = v;
        best_frontier = true;
        fill_candidates(v, scratch.data());
        best_count = popcount(scratch.data());
      } else if (frontier) {
        fill_candidates(v, scratch.data());
        int c = popcount(scratch.data());
        if (c < best_count) {
          best_v = v;
          best_count = c;
        }
      } else if (!best_frontier &&
                 (best_v < 0 || pat.degree(v) > pat.degree(best_v))) {
        best_v = v;  // fresh component root: max degree, ties to least index
      }
    }

    if (all_sinks && static_cast<int>(sinks.size()) <= kBatchMax) {
      batch(sinks);
      return;
    }
    if (all_sinks && uniform_sinks(sinks)) return;  // falling factorial done

    fill_candidates(best_v, scratch.data());
    std::vector<std::uint64_t> cand = scratch;  // recursion reuses scratch
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        assign(best_v, w * 64 + b);
        run();
        unassign(best_v);
        if (existence && found) return;
      }
    }
  }

  // When more than kBatchMax sinks remain but they all share one candidate
  // set (typical for isolated pattern vertices), the completion count is the
  // falling factorial m(m-1)...(m-k+1).  Returns false when sets differ, in
  // which case the caller peels vertices one at a time.
  bool uniform_sinks(const std::vector<int>& sinks) {
    std::vector<std::uint64_t> first(words);
    fill_candidates(sinks[0], first.data());
    for (std::size_t i = 1; i < sinks.size(); ++i) {
      fill_candidates(sinks[i], scratch.data());
      if (!std::equal(first.begin(), first.end(), scratch.begin()))
        return false;
    }
    long long m = popcount(first.data());
    BigInt prod = 1;
    for (std::size_t i = 0; i < sinks.size() && prod != 0; ++i)
      prod *= (m - static_cast<long long>(i));
    total += prod;
    if (prod > 0) found = true;
    return true;
  }

  void batch(const std::vector<int>& sinks) {
    const int k = static_cast<int>(sinks.size());
    std::vector<std::vector<std::uint64_t>> cand(
        k, std::vector<std::uint64_t>(words));
    for (int i = 0; i < k; ++i) fill_candidates(sinks[i], cand[i].data());

    // |term| <= k! n^k, and the partial sums stay below Bell(k) k! n^k, which
    // fits __int128 for n <= 1024 and k <= 9 (2^15 * 2^19 * 2^90 < 2^127).
    if (hn <= 1024) {
      __int128 acc = 0;
      for (const Partition& part : partitions_of(k)) {
        __int128 term = part.coef;
        for (const auto& blk : part.blocks) {
          for (int w = 0; w < words; ++w) {
            std::uint64_t x = cand[blk[0]][w];
            for (std::size_t j = 1; j < blk.size(); ++j) x &= cand[blk[j]][w];
            scratch[w] = x;
          }
          int m = popcount(scratch.data());
          if (m == 0) {
            term = 0;
            break;
          }
          term *= m;
        }
        acc += term;
      }
      if (acc < 0) throw ConsistencyError("batch count came out negative");
      BigInt add = static_cast<std::uint64_t>(acc >> 64);
      add <<= 64;
      add += static_cast<std::uint64_t>(acc);
      total += add;
      if (acc > 0) found = true;
      return;
    }

    BigInt acc = 0;
    for (const Partition& part : partitions_of(k)) {
      BigInt term = part.coef;
      for (const auto& blk : part.blocks) {
        for (int w = 0; w < words; ++w) {
          std::uint64_t x = cand[blk[0]][w];
          for (std::size_t j = 1; j < blk.size(); ++j) x &= cand[blk[j]][w];
          scratch[w] = x;
        }
        int m = popcount(scratch.data());
        if (m == 0) {
          term = 0;
          break;
        }
        term *= m;
      }
      acc += term;
    }
    if (acc < 0) throw ConsistencyError("batch count came out negative");
    total += acc;
    if (acc > 0) found = true;
  }
};

// The vertex the serial search starts from: largest degree, least index.
int root_vertex(const Graph& pattern) {
  int r = 0;
  for (int v = 1; v < pattern.order(); ++v)
    if (pattern.degree(v) > pattern.degree(r)) r = v;
  return r;
}

}  // namespace

EmbeddingCount count_embeddings(const Graph& pattern, const Graph& host,
                                bool existence_only, int jobs) {
  const CountMode mode =
      existence_only ? CountMode::kExistence : CountMode::kTotal;
  if (pattern.order() == 0) return {BigInt(1), mode};
  if (pattern.order() > host.order()) return {BigInt(0), mode};

  if (jobs < 1) jobs = 1;
  jobs = std::min({jobs, host.order(), 64});
  // Parallel mode splits on the root's candidate set; pointless below a few
  // branches, and the existence search stays serial for the short-circuit.
  if (jobs <= 1 || existence_only || pattern.edge_count() == 0) {
    Embedder e(pattern, host, existence_only);
    e.run();
    if (existence_only) return {BigInt(e.found ? 1 : 0), mode};
    return {std::move(e.total), mode};
  }

  const int r = root_vertex(pattern);
  const int n = host.order();
  std::vector<BigInt> parts(jobs, 0);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      Embedder e(pattern, host, false);
      for (int w = j; w < n; w += jobs) {
        e.assign(r, w);
        e.run();
        e.unassign(r);
      }
      parts[j] = std::move(e.total);
    });
  }
  for (auto& t : workers) t.join();
  BigInt total = 0;
  for (const BigInt& p : parts) total += p;
  return {std::move(total), mode};
}

bool embeds(const Graph& pattern, const Graph& host) {
  return count_embeddings(pattern, host, true).value != 0;
}

namespace {

// BFS distances inside the pattern from src; unreachable stays -1.
std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.order(), -1);
  dist[src] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

}  // namespace

FixedEmbeddingReport count_embeddings_fixed(const Graph& pattern,
                                            const std::vector<int>& anchors,
                                            const Graph& host,
                                            const std::vector<int>& images,
                                            std::optional<int> t) {
  if (anchors.size() != images.size())
    throw std::invalid_argument("anchors and images differ in length");
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (anchors[i] < 0 || anchors[i] >= pattern.order())
      throw std::invalid_argument("anchor out of range");
    if (images[i] < 0 || images[i] >= host.order())
      throw std::invalid_argument("image out of range");
    for (std::size_t j = i + 1; j < anchors.size(); ++j) {
      if (anchors[i] == anchors[j])
        throw std::invalid_argument("repeated anchor");
      if (images[i] == images[j])
        throw std::invalid_argument("repeated image");
    }
  }

  FixedEmbeddingReport report;
  report.count.mode = CountMode::kFixedAnchors;

  bool consistent = true;
  for (std::size_t i = 0; i < anchors.size() && consistent; ++i)
    for (std::size_t j = i + 1; j < anchors.size() && consistent; ++j)
      if (pattern.adjacent(anchors[i], anchors[j]) &&
          !host.adjacent(images[i], images[j]))
        consistent = false;

  if (consistent) {
    Embedder e(pattern, host, false);
    for (std::size_t i = 0; i < anchors.size(); ++i)
      e.assign(anchors[i], images[i]);
    e.run();
    report.count.value = std::move(e.total);
  } else {
    report.count.value = 0;
  }

  report.anchors_are_leaves = is_tree(pattern);
  for (int a : anchors)
    if (pattern.degree(a) != 1) report.anchors_are_leaves = false;

  report.anchor_distances_ok = true;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    std::vector<int> dist = bfs_distances(pattern, anchors[i]);
    for (std::size_t j = i + 1; j < anchors.size(); ++j) {
      int d = dist[anchors[j]];
      if (d >= 0 && d <= 2) report.anchor_distances_ok = false;
    }
  }

  if (t && report.anchors_are_leaves) {
    double v = pattern.order();
    double l = static_cast<double>(anchors.size());
    report.embedding_bound = std::pow(*t - 1, (v - 1) / 2.0) *
                             std::pow(host.order(), (v - 2 * l + 1) / 2.0);
  }
  return report;
}

BigInt automorphism_count(const Graph& pattern) {
  if (pattern.order() >= 1 && is_tree(pattern))
    return tree_automorphism_count(pattern);
  if (pattern.order() > 12)
    throw std::invalid_argument(
        "automorphism count needs a tree or at most 12 vertices");
  return count_embeddings(pattern, pattern).value;
}

EmbeddingCount count_copies(const Graph& pattern, const Graph& host,
                            int jobs) {
  BigInt aut = automorphism_count(pattern);
  EmbeddingCount emb = count_embeddings(pattern, host, false, jobs);
  if (emb.value % aut != 0)
    throw ConsistencyError("embedding count not divisible by |Aut|");
  return {emb.value / aut, CountMode::kTotal};
}

EmbeddingCount count_k2t(const Graph& host, int t) {
  if (t < 2) throw std::invalid_argument("count_k2t needs t >= 2");
  BigInt sum = 0;
  for (int u = 0; u < host.order(); ++u)
    for (int v = u + 1; v < host.order(); ++v)
      sum += binomial(host.codegree(u, v), t);
  if (t == 2) {
    if (sum % 2 != 0)
      throw ConsistencyError("K_{2,2} pair sum should be even");
    sum /= 2;
  }
  return {std::move(sum), CountMode::kTotal};
}

}  // namespace turan
