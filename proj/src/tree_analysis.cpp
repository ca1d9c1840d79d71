#include "turan/tree_analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turan {

namespace {

void require_tree(const Graph& g, int min_order) {
  if (!is_tree(g)) throw std::invalid_argument("input is not a tree");
  if (g.order() < min_order)
    throw std::invalid_argument("tree has too few vertices");
}

}  // namespace

TreeDecomposition partition_ab(const Graph& tree) {
  require_tree(tree, 2);
  const int n = tree.order();
  TreeDecomposition d;
  d.order = n;

  std::vector<char> in_a(n, 0);
  for (int v = 0; v < n; ++v) in_a[v] = tree.degree(v) == 2;

  // Closure of a monotone rule, so the fixpoint set is scan-order
  // independent; ascending index keeps add_order deterministic.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (in_a[v] || tree.degree(v) <= 1) continue;
      int b_neighbors = 0;
      for (int u : tree.neighbors(v)) b_neighbors += !in_a[u];
      if (b_neighbors <= 2) {
        in_a[v] = 1;
        d.add_order.push_back(v);
        changed = true;
      }
    }
  }
  for (int v = 0; v < n; ++v) (in_a[v] ? d.a : d.b).push_back(v);
  return d;
}

TreeDecomposition decompose_tree(const Graph& tree) {
  TreeDecomposition d = partition_ab(tree);
  const int n = tree.order();

  std::vector<char> in_a(n, 0), is_leaf(n, 0), in_qp(n, 0);
  for (int v : d.a) in_a[v] = 1;
  for (int v = 0; v < n; ++v) {
    if (tree.degree(v) == 1) {
      is_leaf[v] = 1;
      d.leaves.push_back(v);
    }
  }
  for (int v : d.b) {
    if (!is_leaf[v]) {
      in_qp[v] = 1;
      d.q_prime.push_back(v);
    }
  }
  for (int v : d.leaves) {
    for (int u : tree.neighbors(v)) {
      if (in_qp[u]) {
        d.leaves_adj_qprime.push_back(v);
        break;
      }
    }
  }

  std::vector<char> seen(n, 0);
  for (int v : d.q_prime) {
    if (seen[v]) continue;
    std::vector<int> comp, stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int u : tree.neighbors(x)) {
        if (in_qp[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    d.q_components.push_back(std::move(comp));
  }

  // Components of T - Q'; only those holding an A-vertex become T_j.  With
  // Q' empty the whole tree is one component and the split is vacuous: no
  // T_j, s = 0.
  std::fill(seen.begin(), seen.end(), 0);
  for (int v = 0; v < n && !d.q_prime.empty(); ++v) {
    if (in_qp[v] || seen[v]) continue;
    std::vector<int> comp, stack{v};
    seen[v] = 1;
    bool has_a = false;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      has_a = has_a || in_a[x];
      for (int u : tree.neighbors(x)) {
        if (!in_qp[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    if (!has_a) continue;
    std::sort(comp.begin(), comp.end());
    std::set<int> attach;
    for (int x : comp)
      for (int u : tree.neighbors(x))
        if (in_qp[u]) attach.insert(u);
    TreeDecomposition::TComponent tc;
    tc.vertices = std::move(comp);
    tc.attachments.assign(attach.begin(), attach.end());
    tc.ell = static_cast<int>(tc.attachments.size());
    d.t_components.push_back(std::move(tc));
  }

  d.s = static_cast<int>(d.t_components.size());
  d.nice = d.q_prime.empty() && n >= 3;
  return d;
}

HalfInt literal_exponent(const TreeDecomposition& d) {
  if (d.nice)
    throw std::invalid_argument(
        "literal exponent is stated for non-nice trees only; nice trees use "
        "the (|V|+1)/2 exponent");
  return whole(static_cast<int>(d.leaves.size())) +
         half(static_cast<int>(d.a.size()) + d.s);
}

HalfInt proof_exponent(const TreeDecomposition& d) {
  // Empty Q' (nice trees, plus the single edge) leaves one unsplit piece and
  // no anchored leaves, and the per-piece bound collapses to (|V|+1)/2.
  if (d.q_prime.empty()) return half(d.order + 1);
  HalfInt e = whole(static_cast<int>(d.leaves_adj_qprime.size()));
  for (const auto& tc : d.t_components)
    e = e + half(static_cast<int>(tc.vertices.size()) - tc.ell + 1);
  return e;
}

HalfInt furedi_exponent(const Graph& tree) {
  require_tree(tree, 2);
  return half(tree.order() + 1);
}

ExponentReport exponent_report(const Graph& tree) {
  TreeDecomposition d = decompose_tree(tree);
  ExponentReport r;
  r.furedi_exp = furedi_exponent(tree);
  r.proof_exp = proof_exponent(d);
  if (d.nice) {
    r.agreement = true;
  } else {
    r.literal_exp = literal_exponent(d);
    r.agreement = *r.literal_exp == r.proof_exp;
  }
  return r;
}

std::vector<int> tree_center(const Graph& tree) {
  require_tree(tree, 1);
  const int n = tree.order();
  if (n <= 2) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      deg[v] = 0;
      for (int u : tree.neighbors(v))
        if (deg[u] > 0 && --deg[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

// Canonical rooted form and rooted automorphism count in one pass: children
// are sorted by form; equal consecutive forms multiply in their counts and a
// factorial of the multiplicity.
std::pair<std::string, BigInt> rooted_form(const Graph& t, int v, int parent) {
  std::vector<std::pair<std::string, BigInt>> kids;
  for (int u : t.neighbors(v))
    if (u != parent) kids.push_back(rooted_form(t, u, v));
  std::sort(kids.begin(), kids.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::string s = "(";
  BigInt aut = 1;
  std::size_t i = 0;
  while (i < kids.size()) {
    std::size_t j = i;
    while (j < kids.size() && kids[j].first == kids[i].first) {
      aut *= kids[j].second;
      s += kids[j].first;
      ++j;
    }
    for (std::size_t m = 2; m <= j - i; ++m) aut *= m;
    i = j;
  }
  s += ")";
  return {std::move(s), std::move(aut)};
}

std::pair<std::string, BigInt> free_tree_form(const Graph& tree) {
  std::vector<int> centers = tree_center(tree);
  if (centers.size() == 1) return rooted_form(tree, centers[0], -1);
  auto f1 = rooted_form(tree, centers[0], centers[1]);
  auto f2 = rooted_form(tree, centers[1], centers[0]);
  if (f2.first < f1.first) std::swap(f1, f2);
  BigInt aut = f1.second * f2.second;
  if (f1.first == f2.first) aut *= 2;
  // Leading '2' keeps bicentral forms disjoint from the rooted '(' forms.
  return {"2" + f1.first + f2.first, std::move(aut)};
}

}  // namespace

std::string tree_canonical_string(const Graph& tree) {
  return free_tree_form(tree).first;
}

BigInt tree_automorphism_count(const Graph& tree) {
  require_tree(tree, 1);
  if (tree.order() > 64)
    throw std::invalid_argument("tree automorphism count capped at 64 vertices");
  return free_tree_form(tree).second;
}

std::vector<Graph> enumerate_trees(int order) {
  if (order < 1) throw std::invalid_argument("tree order must be positive");
  std::vector<Graph> current{Graph(1, {})};
  for (int n = 2; n <= order; ++n) {
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const Graph& t : current) {
      for (int v = 0; v < t.order(); ++v) {
        std::vector<std::pair<int, int>> edges = t.edges();
        edges.emplace_back(v, t.order());
        Graph bigger(t.order() + 1, edges);
        if (seen.insert(tree_canonical_string(bigger)).second)
          next.push_back(std::move(bigger));
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace turan
