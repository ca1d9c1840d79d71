#pragma once

#include "turan/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace turan {

// K_{2,r} with two non-adjacent hubs u, v, r common degree-2 neighbours, and
// p (resp. q) pendant vertices on u (resp. v).  Order p+q+r+2.  Layout:
// u = 0, v = 1, middles 2..r+1, then u-pendants, then v-pendants.
Graph build_k2rpq(int p, int q, int r);

// floor(n/m) disjoint copies of K_m; the n mod m leftover vertices form one
// smaller clique by default, or stay isolated when include_leftover = false.
Graph clique_blocks(int n, int m, bool include_leftover = true);

// Closed-form K_{2,t} count in the complete multipartite graph:
//   sum_i C(n_i,2) C(n-n_i, t) + sum_{i<j} n_i n_j C(n-n_i-n_j, t),
// halved when t = 2 (hub pairs are unordered there).
BigInt multipartite_k2t(const std::vector<int>& parts, int t);

struct MultipartiteProfile {
  std::vector<int> parts;  // non-increasing
  int t = 0;
  BigInt count;
};

// Exhaustive scan over partitions of n into at most k parts, maximizing
// multipartite_k2t; ties go to the lexicographically largest part list.
MultipartiteProfile optimize_multipartite(int n, int k, int t);

struct FractionProfile {
  std::vector<double> fractions;  // non-increasing, sums to 1
  double objective = 0.0;
  double resolution = 0.0;
};

// Continuous relaxation: maximize the leading coefficient
//   sum_i (x_i^2/2)(1-x_i)^t + sum_{i<j} x_i x_j (1-x_i-x_j)^t
// (halved for t = 2) over the k-simplex by grid search plus deterministic
// pairwise-transfer refinement.
FractionProfile asymptotic_profile(int k, int t, double resolution);

struct G0Info {
  long long pendants_per_vertex = 0;  // the n' of the construction
  long long q = 0;                    // block field size, 0 when no blocks
  int blocks = 0;
  long long block_order = 0;
  std::vector<std::vector<int>> anchors;  // block-local anchor ids per piece
};

// The lower-bound host for a non-nice tree: a copy of Q', n' pendants on
// each Q'-vertex that touches a leaf, and one K_{2,t}-free block per T_j
// glued by identifying ell_j independent block vertices with the piece's
// attachment vertices.  Anchors are picked from 200 sampled independent
// tuples maximizing the anchored embedding count of the piece.  The result
// is checked K_{2,t}-free before returning.
Graph construct_g0(const Graph& tree, long long n, int t,
                   G0Info* info = nullptr, std::uint64_t seed = 20260815);

enum class ForbiddenCase {
  kZero,            // f fits inside K_{2,t}: no copies at all survive
  kCliqueBlocks,    // f = K_{2,r}^{p,q}, r <= t < p+q+r: disjoint cliques
  kFurediQuadratic, // f = K_{2,r}^{p,q}, r > t: quadratic via the F(n,r) host
  kBipartiteOther,  // any other bipartite f, reported with beta(f)
  kChromatic        // non-bipartite f, reported with chi(f)
};

struct K2rpqShape {
  int p = 0, q = 0, r = 0;  // normalized p >= q
};

struct Classification {
  ForbiddenCase kind = ForbiddenCase::kZero;
  std::optional<K2rpqShape> shape;
  std::optional<int> beta;
  bool beta_at_most_t = false;
  int chi = 0;
};

// The forbidden-graph case split driving the extremal growth order.
Classification classify_forbidden(const Graph& f, int t);

Graph spider(int legs, int len);
Graph double_star(int p, int q);

// Builtin pattern names for the CLI and tests: path_k, star_k (k leaves),
// cycle_k, clique_k, k2t_t, k2rpq_p_q_r, spider_legs_len, doublestar_p_q,
// multipartite_a_b[_c...], cliqueblocks_n_m, furedi_q_t, petersen.
Graph graph_from_name(const std::string& name);

}  // namespace turan
