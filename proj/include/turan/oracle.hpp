#pragma once

#include "turan/graph.hpp"

#include <functional>
#include <string>

namespace turan {

struct OracleOptions {
  int jobs = 1;
  double timeout_seconds = 0.0;  // 0 = no limit
  bool use_cache = true;
  std::string cache_dir;  // empty: $TURAN_CACHE_DIR, else ./.turan-cache
};

struct OracleStats {
  long long nodes = 0;    // search tree nodes visited
  long long maximal = 0;  // edge-maximal leaves evaluated
  double seconds = 0.0;
  bool from_cache = false;
};

struct ExtremalResult {
  int n = 0;
  std::string h_g6;  // canonical graph6 of the counted pattern
  std::string f_g6;  // canonical graph6 of the forbidden graph
  BigInt value;
  std::string witness_g6;  // canonical, lexicographically least among ties
  OracleStats stats;
  bool complete = false;  // false when the timeout truncated the search
};

// Exact maximum number of h-copies over all f-free graphs on n vertices,
// n <= 9.  Exhaustive branch over edge slots; values are read off only at
// edge-maximal leaves (adding edges never destroys a copy).  Results are
// cached on disk keyed by (n, canonical h, canonical f) and re-verified on
// load.  A timeout yields the best value found with complete = false.
ExtremalResult exact_ex(int n, const Graph& h, const Graph& f,
                        const OracleOptions& options = {});

// Every edge-maximal f-free graph on n labeled vertices, once per branch
// surviving the shallow isomorphism rejection.  Every f-free graph is a
// subgraph of some maximal one, so their subgraph closures cover the whole
// f-free family.
void enumerate_maximal_free(int n, const Graph& f,
                            const std::function<void(const Graph&)>& yield);

}  // namespace turan
