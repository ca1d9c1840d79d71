#pragma once

#include "turan/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace turan {

// Simple undirected graph, immutable after construction.  Adjacency lives in
// dense bit rows (ceil(order/64) words per vertex) alongside sorted neighbour
// lists; codegree and embedding inner loops run on the bit rows.
class Graph {
 public:
  Graph() = default;

  // Validates endpoints, rejects loops, deduplicates parallel edges.
  Graph(int order, const std::vector<std::pair<int, int>>& edge_list);

  int order() const { return order_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Normalized (u < v), sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;

  int row_words() const { return words_; }
  const std::uint64_t* row(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  // Number of common neighbours of two distinct vertices.
  int codegree(int u, int v) const;

  // Labeled equality: same order and same edge set.
  bool operator==(const Graph& other) const {
    return order_ == other.order_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v, const char* role) const;

  int order_ = 0;
  int words_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::uint64_t> bits_;
};

// graph6 codec for orders 0..62 (single-byte header only).  Bit k of the body
// is the upper-triangle entry x(u,v) in column-major order: (0,1), (0,2),
// (1,2), (0,3), ...  Decode errors carry the byte offset.
Graph graph6_decode(const std::string& text);
std::string graph6_encode(const Graph& g);

// Plain-text edge list: one "u v" pair per line, zero-based.  Lines starting
// with '#' are comments; an optional "# n=<order>" comment pins the order
// (needed to keep trailing isolated vertices).
Graph edge_list_decode(const std::string& text);
std::string edge_list_encode(const Graph& g);

Graph complete_multipartite(const std::vector<int>& parts);
Graph disjoint_union(const Graph& a, const Graph& b);

Graph make_path(int order);
Graph make_cycle(int order);
// Star with `leaves` leaves, order leaves+1, centre 0.
Graph make_star(int leaves);
Graph make_clique(int order);
Graph make_petersen();

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

// Exact chromatic number: greedy clique lower bound + DSATUR-ordered branch
// and bound.
int chromatic_number(const Graph& g);

// Least p such that g embeds in K_{p,q} for some q; nullopt when g is not
// bipartite.  The second side is unconstrained, so each component
// independently contributes the smaller of its two colour classes.
std::optional<int> bipartite_beta(const Graph& g);

// Deterministic canonical relabeling: equitable refinement first, then a
// branch-and-bound over cell-respecting permutations minimizing the
// upper-triangle bit vector.  Isomorphic graphs map to equal canonical forms.
std::vector<int> canonical_labeling(const Graph& g);
Graph relabel(const Graph& g, const std::vector<int>& new_of_old);
Graph canonical_form(const Graph& g);
std::string canonical_g6(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace turan
