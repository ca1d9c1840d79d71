#pragma once

#include "turan/graph.hpp"

#include <optional>
#include <vector>

namespace turan {

enum class CountMode { kTotal, kFixedAnchors, kExistence };

struct EmbeddingCount {
  BigInt value;
  CountMode mode = CountMode::kTotal;
};

// Number of injective maps pattern -> host sending edges to edges (host may
// have extra edges between image vertices).  With existence_only the search
// stops at the first embedding and the value is 0 or 1.  `jobs` > 1 splits
// the root candidate range across threads; the total is identical to the
// serial run.
EmbeddingCount count_embeddings(const Graph& pattern, const Graph& host,
                                bool existence_only = false, int jobs = 1);

// Existence shorthand.
bool embeds(const Graph& pattern, const Graph& host);

struct FixedEmbeddingReport {
  EmbeddingCount count;             // mode kFixedAnchors
  bool anchors_are_leaves = false;  // pattern is a tree, every anchor degree 1
  bool anchor_distances_ok = false; // anchors pairwise at pattern distance > 2
  std::optional<double> embedding_bound;  // (t-1)^((v-1)/2) n^((v-2l+1)/2)
};

// Embeddings with anchors[i] pinned to images[i].  Anchors must be distinct
// pattern vertices, images distinct host vertices.  The bound field is filled
// when t is supplied and the anchors are tree leaves.
FixedEmbeddingReport count_embeddings_fixed(
    const Graph& pattern, const std::vector<int>& anchors, const Graph& host,
    const std::vector<int>& images, std::optional<int> t = std::nullopt);

// |Aut(pattern)|.  Trees up to 64 vertices go through the canonical-rooting
// product; anything else up to 12 vertices is counted as self-embeddings.
BigInt automorphism_count(const Graph& pattern);

// Unlabelled copies: embeddings / |Aut|, checked to divide exactly.
EmbeddingCount count_copies(const Graph& pattern, const Graph& host,
                            int jobs = 1);

// Copies of the complete bipartite K_{2,t} in the host: sum over vertex pairs
// {u,v} of C(codegree(u,v), t), halved when t = 2 since both sides of K_{2,2}
// then play the hub role.
EmbeddingCount count_k2t(const Graph& host, int t);

}  // namespace turan
