#include "turan/oracle.hpp"

#include "turan/counting.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

namespace turan {

namespace {

constexpr int kMaxN = 9;
constexpr int kBoundDepth = 6;   // shallow upper-bound pruning horizon
constexpr int kMemoDepth = 3;    // isomorphism rejection on the first slots

struct State {
  int n = 0;
  std::array<std::uint16_t, kMaxN> adj{};
  void add(int u, int v) {
    adj[u] |= std::uint16_t(1u << v);
    adj[v] |= std::uint16_t(1u << u);
  }
  void remove(int u, int v) {
    adj[u] &= std::uint16_t(~(1u << v));
    adj[v] &= std::uint16_t(~(1u << u));
  }
  bool has(int u, int v) const { return adj[u] >> v & 1u; }
};

Graph to_graph(const State& s) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (s.has(u, v)) edges.push_back({u, v});
  return Graph(s.n, edges);
}

// Anchored matchers: one vertex ordering per (edge, orientation) of f, the
// anchored endpoints first, the rest greedily by placed-neighbour count.
struct FProbes {
  int fn = 0;
  struct Probe {
    std::array<int, kMaxN> order{};
    // per position: mask of earlier positions f-adjacent to it
    std::array<std::uint16_t, kMaxN> placed{};
  };
  std::vector<Probe> probes;
};

FProbes prepare_probes(const Graph& f) {
  FProbes fd;
  fd.fn = f.order();
  std::array<std::uint16_t, kMaxN> fadj{};
  for (auto [a, b] : f.edges()) {
    fadj[a] |= std::uint16_t(1u << b);
    fadj[b] |= std::uint16_t(1u << a);
  }
  auto build = [&](int a, int b) {
    FProbes::Probe pr;
    std::vector<int> pos_of(fd.fn, -1);
    pr.order[0] = a;
    pr.order[1] = b;
    pos_of[a] = 0;
    pos_of[b] = 1;
    for (int k = 2; k < fd.fn; ++k) {
      int pick = -1, pick_links = -1;
      for (int w = 0; w < fd.fn; ++w) {
        if (pos_of[w] >= 0) continue;
        int links = 0;
        for (int j = 0; j < k; ++j) links += fadj[w] >> pr.order[j] & 1u;
        if (links > pick_links) pick = w, pick_links = links;
      }
      pr.order[k] = pick;
      pos_of[pick] = k;
    }
    for (int k = 0; k < fd.fn; ++k)
      for (int j = 0; j < k; ++j)
        if (fadj[pr.order[k]] >> pr.order[j] & 1u) pr.placed[k] |= std::uint16_t(1u << j);
    fd.probes.push_back(pr);
  };
  for (auto [a, b] : f.edges()) {
    build(a, b);
    build(b, a);
  }
  return fd;
}

bool probe_try(const FProbes::Probe& pr, const State& g, int fn, int pos,
               std::array<int, kMaxN>& img, std::uint16_t used) {
  if (pos == fn) return true;
  std::uint16_t cand = std::uint16_t((1u << g.n) - 1) & std::uint16_t(~used);
  std::uint16_t pl = pr.placed[pos];
  while (pl) {
    int j = std::countr_zero(pl);
    pl &= std::uint16_t(pl - 1);
    cand &= g.adj[img[j]];
  }
  while (cand) {
    int w = std::countr_zero(cand);
    cand &= std::uint16_t(cand - 1);
    img[pos] = w;
    if (probe_try(pr, g, fn, pos + 1, img, std::uint16_t(used | (1u << w)))) return true;
  }
  return false;
}

// Does g (which already contains uv) hold a copy of f through the edge uv?
bool creates_f(const FProbes& fd, const State& g, int u, int v) {
  if (fd.fn > g.n) return false;
  std::array<int, kMaxN> img{};
  for (const auto& pr : fd.probes) {
    img[0] = u;
    img[1] = v;
    if (probe_try(pr, g, fd.fn, 2, img, std::uint16_t((1u << u) | (1u << v)))) return true;
  }
  return false;
}

// Orbit representative of an include/exclude assignment to the first d slots
// under vertex permutations that keep the decided slot set in place.  Equal
// keys mean the two partial searches have isomorphic futures.
std::uint32_t prefix_key(int n, const std::vector<std::pair<int, int>>& slots,
                         const int idx[kMaxN][kMaxN], int d, std::uint32_t mask) {
  std::array<int, kMaxN> p{};
  std::iota(p.begin(), p.begin() + n, 0);
  std::uint32_t best = mask;
  do {
    std::uint32_t pm = 0;
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      int pu = p[slots[i].first], pv = p[slots[i].second];
      if (pu > pv) std::swap(pu, pv);
      int j = idx[pu][pv];
      ok = j >= 0 && j < d;
      if (ok && (mask >> i & 1u)) pm |= 1u << j;
    }
    if (ok && pm < best) best = pm;
  } while (std::next_permutation(p.begin(), p.begin() + n));
  return best;
}

struct SearchCtx {
  int n = 0;
  const std::vector<std::pair<int, int>>* slots = nullptr;
  const FProbes* fd = nullptr;
  const Graph* h = nullptr;
  const std::function<void(const Graph&)>* yield = nullptr;

  long long nodes = 0;
  long long maximal = 0;
  long long best = -1;
  std::string best_g6;
  bool truncated = false;

  std::atomic<long long>* shared_best = nullptr;
  std::atomic<bool>* stop = nullptr;
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;
};

void raise_shared(std::atomic<long long>& shared, long long val) {
  long long cur = shared.load(std::memory_order_relaxed);
  while (val > cur && !shared.compare_exchange_weak(cur, val)) {
  }
}

void visit_leaf(SearchCtx& c, State& g) {
  // value is read only at edge-maximal leaves: adding an edge never destroys
  // an existing copy, so some maximal completion dominates this leaf
  for (auto [u, v] : *c.slots) {
    if (g.has(u, v)) continue;
    g.add(u, v);
    bool blocked = creates_f(*c.fd, g, u, v);
    g.remove(u, v);
    if (!blocked) return;
  }
  ++c.maximal;
  Graph gg = to_graph(g);
  if (c.yield) (*c.yield)(gg);
  if (!c.h) return;
  long long val = count_copies(*c.h, gg).value.convert_to<long long>();
  if (val > c.best) {
    c.best = val;
    c.best_g6 = canonical_g6(gg);
    if (c.shared_best) raise_shared(*c.shared_best, val);
  } else if (val == c.best) {
    std::string s = canonical_g6(gg);
    if (c.best_g6.empty() || s < c.best_g6) c.best_g6 = s;
  }
}

void dfs(SearchCtx& c, State& g, std::size_t si) {
  if (c.stop && c.stop->load(std::memory_order_relaxed)) {
    c.truncated = true;
    return;
  }
  ++c.nodes;
  if (c.has_deadline && (c.nodes & 0xFFF) == 0 &&
      std::chrono::steady_clock::now() > c.deadline) {
    if (c.stop) c.stop->store(true, std::memory_order_relaxed);
    c.truncated = true;
    return;
  }
  if (si == c.slots->size()) {
    visit_leaf(c, g);
    return;
  }
  if (c.h && c.shared_best && si <= kBoundDepth) {
    long long cur = c.shared_best->load(std::memory_order_relaxed);
    if (cur > 0) {
      State gmax = g;
      for (std::size_t j = si; j < c.slots->size(); ++j)
        gmax.add((*c.slots)[j].first, (*c.slots)[j].second);
      long long ub = count_copies(*c.h, to_graph(gmax)).value.convert_to<long long>();
      // strict: tied subtrees stay alive so the lex-least witness survives
      if (ub < cur) return;
    }
  }
  auto [u, v] = (*c.slots)[si];
  g.add(u, v);
  if (!creates_f(*c.fd, g, u, v)) dfs(c, g, si + 1);
  g.remove(u, v);
  dfs(c, g, si + 1);
}

struct TopState {
  std::uint32_t mask = 0;
  State g;
};

// Expand the first kMemoDepth slots breadth-first, rejecting assignments that
// are isomorphic (as decided-slot colourings) to one already kept.
std::vector<TopState> top_states(int n, const std::vector<std::pair<int, int>>& slots,
                                 const FProbes& fd, int depth, long long& nodes) {
  int idx[kMaxN][kMaxN];
  for (auto& row : idx) std::fill(std::begin(row), std::end(row), -1);
  for (std::size_t i = 0; i < slots.size(); ++i) idx[slots[i].first][slots[i].second] = static_cast<int>(i);

  std::vector<TopState> layer;
  State empty;
  empty.n = n;
  layer.push_back({0, empty});
  for (int d = 0; d < depth; ++d) {
    auto [u, v] = slots[d];
    std::vector<TopState> next;
    std::set<std::uint32_t> seen;
    auto push = [&](TopState st) {
      ++nodes;
      std::uint32_t key = prefix_key(n, slots, idx, d + 1, st.mask);
      if (seen.insert(key).second) next.push_back(std::move(st));
    };
    for (const auto& st : layer) {
      TopState inc = st;
      inc.g.add(u, v);
      if (!creates_f(fd, inc.g, u, v)) {
        inc.mask |= 1u << d;
        push(std::move(inc));
      }
      push(st);
    }
    layer = std::move(next);
  }
  return layer;
}

struct SearchOutcome {
  long long best = -1;
  std::string witness_g6;
  long long nodes = 0;
  long long maximal = 0;
  bool truncated = false;
};

SearchOutcome run_search(int n, const Graph* h, const FProbes& fd,
                         const std::function<void(const Graph&)>* yield, int jobs,
                         double timeout_seconds) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});

  SearchOutcome out;
  const int depth = std::min<int>(kMemoDepth, static_cast<int>(slots.size()));
  std::vector<TopState> tops = top_states(n, slots, fd, depth, out.nodes);

  std::atomic<long long> shared_best{-1};
  std::atomic<bool> stop{false};
  const bool has_deadline = timeout_seconds > 0;
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(timeout_seconds));

  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tops.size())));
  std::vector<SearchCtx> ctxs(jobs);
  auto worker = [&](int w) {
    SearchCtx& c = ctxs[w];
    c.n = n;
    c.slots = &slots;
    c.fd = &fd;
    c.h = h;
    c.yield = yield;
    c.shared_best = &shared_best;
    c.stop = &stop;
    c.deadline = deadline;
    c.has_deadline = has_deadline;
    for (std::size_t i = w; i < tops.size(); i += jobs) {
      State g = tops[i].g;
      dfs(c, g, depth);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  for (const SearchCtx& c : ctxs) {
    out.nodes += c.nodes;
    out.maximal += c.maximal;
    out.truncated = out.truncated || c.truncated;
    if (c.best > out.best) {
      out.best = c.best;
      out.witness_g6 = c.best_g6;
    } else if (c.best == out.best && !c.best_g6.empty() &&
               (out.witness_g6.empty() || c.best_g6 < out.witness_g6)) {
      out.witness_g6 = c.best_g6;
    }
  }
  return out;
}

void check_forbidden(const Graph& f) {
  if (f.order() <= 1)
    throw std::invalid_argument("oracle: forbidden graph with at most one vertex excludes everything");
  if (f.edge_count() == 0)
    throw std::invalid_argument("oracle: edgeless forbidden graph excludes every host");
}

std::string hexify(const std::string& s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * s.size());
  for (unsigned char c : s) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::filesystem::path cache_file(const std::string& dir, int n, const std::string& h_g6,
                                 const std::string& f_g6) {
  return std::filesystem::path(dir) /
         ("ex_n" + std::to_string(n) + "_" + hexify(h_g6) + "_" + hexify(f_g6) + ".json");
}

std::string resolve_cache_dir(const OracleOptions& options) {
  if (!options.cache_dir.empty()) return options.cache_dir;
  if (const char* env = std::getenv("TURAN_CACHE_DIR"); env && *env) return env;
  return "./.turan-cache";
}

// A cached entry is trusted only after the witness re-verifies with the
// generic counter; anything malformed falls through to a fresh search.
std::optional<ExtremalResult> load_cache(const std::filesystem::path& path, int n,
                                         const Graph& h, const Graph& f,
                                         const std::string& h_g6, const std::string& f_g6) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("n").get<int>() != n) return std::nullopt;
    if (j.at("h_g6").get<std::string>() != h_g6) return std::nullopt;
    if (j.at("f_g6").get<std::string>() != f_g6) return std::nullopt;
    if (!j.at("complete").get<bool>()) return std::nullopt;
    ExtremalResult r;
    r.n = n;
    r.h_g6 = h_g6;
    r.f_g6 = f_g6;
    r.value = BigInt(j.at("value").get<std::string>());
    r.witness_g6 = j.at("witness_g6").get<std::string>();
    r.stats.nodes = j.at("nodes").get<long long>();
    r.stats.maximal = j.at("maximal").get<long long>();
    r.stats.seconds = j.at("seconds").get<double>();
    r.stats.from_cache = true;
    r.complete = true;
    Graph w = graph6_decode(r.witness_g6);
    if (w.order() != n) return std::nullopt;
    if (embeds(f, w)) return std::nullopt;
    if (count_copies(h, w).value != r.value) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cache(const std::filesystem::path& path, const ExtremalResult& r) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) return;  // cache is best-effort
  nlohmann::json j;
  j["n"] = r.n;
  j["h_g6"] = r.h_g6;
  j["f_g6"] = r.f_g6;
  j["value"] = r.value.str();
  j["witness_g6"] = r.witness_g6;
  j["nodes"] = r.stats.nodes;
  j["maximal"] = r.stats.maximal;
  j["seconds"] = r.stats.seconds;
  j["complete"] = r.complete;
  std::ofstream out(path);
  out << j.dump(1) << "\n";
}

}  // namespace

ExtremalResult exact_ex(int n, const Graph& h, const Graph& f, const OracleOptions& options) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("exact_ex: n must be in 1..9");
  if (h.order() < 1) throw std::invalid_argument("exact_ex: empty pattern");
  check_forbidden(f);

  ExtremalResult result;
  result.n = n;
  result.h_g6 = canonical_g6(h);
  result.f_g6 = canonical_g6(f);

  const std::string dir = resolve_cache_dir(options);
  const std::filesystem::path path = cache_file(dir, n, result.h_g6, result.f_g6);
  if (options.use_cache)
    if (auto cached = load_cache(path, n, h, f, result.h_g6, result.f_g6)) return *cached;

  const auto start = std::chrono::steady_clock::now();
  FProbes fd = prepare_probes(f);
  SearchOutcome out = run_search(n, &h, fd, nullptr, options.jobs, options.timeout_seconds);
  result.stats.nodes = out.nodes;
  result.stats.maximal = out.maximal;
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.complete = !out.truncated;

  if (out.best < 0) {
    // timed out before any maximal leaf: fall back to the empty graph bound
    Graph empty(n, {});
    result.value = count_copies(h, empty).value;
    result.witness_g6 = canonical_g6(empty);
  } else {
    result.value = out.best;
    result.witness_g6 = out.witness_g6;
  }

  Graph w = graph6_decode(result.witness_g6);
  if (embeds(f, w) || count_copies(h, w).value != result.value)
    throw ConsistencyError("exact_ex: witness failed independent re-verification");

  if (options.use_cache && result.complete) store_cache(path, result);
  return result;
}

void enumerate_maximal_free(int n, const Graph& f,
                            const std::function<void(const Graph&)>& yield) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("enumerate_maximal_free: n must be in 1..9");
  check_forbidden(f);
  FProbes fd = prepare_probes(f);
  run_search(n, nullptr, fd, &yield, 1, 0.0);
}

}  // namespace turan
