#pragma once

#include "turan/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace turan {

// Exact half-integer exponents (denominator 1 or 2).
struct HalfInt {
  int twice = 0;

  friend HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
  auto operator<=>(const HalfInt&) const = default;
  double value() const { return twice / 2.0; }
  std::string str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

inline HalfInt whole(int n) { return {2 * n}; }
inline HalfInt half(int n) { return {n}; }

// A/B split of a tree plus the derived structure.
//
// A starts as the degree-2 vertices; then any non-leaf B-vertex with at most
// two B-neighbours moves to A, rescanned in ascending index order until the
// fixpoint.  B is the complement.  Q' = B minus the leaves; the Q_i are the
// components of the subgraph induced on Q'; the T_j are the components of
// T - Q' containing at least one A-vertex, each with ell_j = number of
// Q'-vertices adjacent to it.  A tree on >= 3 vertices is "nice" when every
// B-vertex is a leaf.
struct TreeDecomposition {
  int order = 0;
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> add_order;          // non-degree-2 vertices, in move order
  std::vector<int> leaves;
  std::vector<int> leaves_adj_qprime;  // leaves with a neighbour in Q'
  std::vector<int> q_prime;
  std::vector<std::vector<int>> q_components;

  struct TComponent {
    std::vector<int> vertices;
    int ell = 0;
    std::vector<int> attachments;  // the Q'-vertices adjacent to this component
  };
  std::vector<TComponent> t_components;

  int s = 0;
  bool nice = false;
};

// A/B split only (leaves the derived fields empty).  Rejects non-trees and
// trees with fewer than 2 vertices.
TreeDecomposition partition_ab(const Graph& tree);

// Full decomposition.
TreeDecomposition decompose_tree(const Graph& tree);

// |L| + (|A| + s)/2, the exponent exactly as the statement reads; rejects
// nice trees (not applicable there).
HalfInt literal_exponent(const TreeDecomposition& d);

// |L_adj| + sum_j (|V(T_j)| - ell_j + 1)/2; equals (|V|+1)/2 on nice trees.
// The two-vertex tree falls outside the decomposition machinery and reports
// (|V|+1)/2 = 3/2 directly.
HalfInt proof_exponent(const TreeDecomposition& d);

// (|V(T)|+1)/2.
HalfInt furedi_exponent(const Graph& tree);

struct ExponentReport {
  HalfInt furedi_exp;
  std::optional<HalfInt> literal_exp;  // absent for nice trees
  HalfInt proof_exp;
  bool agreement = true;               // literal == proof (vacuously true when nice)
};

ExponentReport exponent_report(const Graph& tree);

// Center of the tree (1 or 2 vertices, found by stripping leaf layers).
std::vector<int> tree_center(const Graph& tree);

// Canonical form string of a free tree (center-rooted, children sorted);
// equal strings iff isomorphic.
std::string tree_canonical_string(const Graph& tree);

// |Aut| for a free tree on up to 64 vertices, from the product of
// multiplicities of isomorphic child subtrees along the canonical rooting.
BigInt tree_automorphism_count(const Graph& tree);

// All free trees on `order` vertices (canonical representatives), built by
// leaf attachment with canonical-string deduplication.
std::vector<Graph> enumerate_trees(int order);

}  // namespace turan
