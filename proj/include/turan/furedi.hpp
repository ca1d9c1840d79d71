#pragma once

#include "turan/galois.hpp"
#include "turan/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace turan {

struct SelectQ {
  long long q = 0;
  // sqrt(n t) - n^(1/3); the guarantee q exceeds this only kicks in for
  // large n, so the value is reported, never asserted.
  double gap_value = 0.0;
};

// Largest prime power q with (t-1) | (q-1) and (q^2-1)/(t-1) <= n, by
// descending scan from floor(sqrt(n(t-1)+1)).
SelectQ select_q(long long n, int t);

// Smallest vertex count any valid q yields for this t; the infeasibility
// threshold select_q names in its error.
long long smallest_feasible_order(int t);

// The K_{2,t}-free graph on (q^2-1)/(t-1) vertices: nonzero pairs over GF(q)
// modulo scaling by the order-(t-1) subgroup S = <h>, an edge when the dot
// product lands in S.  Classes whose pair satisfies a*a + b*b in S would
// carry a loop; the loop is dropped and the vertex recorded as special.
struct FurediGraph {
  Graph graph;
  long long q = 0;
  int t = 0;
  GaloisField::Elem h_code = 0;
  // Canonical representative per vertex: the lexicographically least
  // (code(a), code(b)) in its class.
  std::vector<std::pair<GaloisField::Elem, GaloisField::Elem>> reps;
  std::vector<int> special;  // ascending
};

FurediGraph build_furedi(long long q, int t);

struct FurediReport {
  bool vertex_count_ok = false;
  std::map<int, long long> degree_histogram;
  bool degree_dichotomy_ok = false;  // special: q-1, non-special: q
  int max_codegree = 0;
  bool max_codegree_ok = false;  // <= t-1
  long long pairs_at_t_minus_1 = 0;
  bool k2t_free = false;  // independent count through the counting module
  bool representatives_ok = false;  // adjacency survives re-representation
  // Codegree histograms split by pair kind; the paper's claims about exact
  // values are reported here rather than asserted (deviations in notes).
  std::map<int, long long> nonadjacent_codegree_histogram;
  std::map<int, long long> adjacent_nonspecial_codegree_histogram;
  std::map<int, long long> adjacent_special_codegree_histogram;
  bool adjacent_special_at_most_t_minus_2 = false;
  std::vector<std::string> notes;
  bool all_ok = false;  // the hard checks only
};

// Structural audit: vertex count, degree dichotomy, codegree cap, K_{2,t}
// count, and 20 rounds of random alternative class representatives that must
// reproduce the same edge set.
FurediReport verify_furedi(const FurediGraph& fg,
                           std::uint64_t seed = 20260815);

}  // namespace turan
