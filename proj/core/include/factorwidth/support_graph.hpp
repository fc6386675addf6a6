#pragma once

#include <utility>
#include <vector>

#include "factorwidth/sym_matrix.hpp"

namespace fw {

/// Simple undirected graph on vertices 0..n-1, kept as a sorted edge list
/// plus an adjacency matrix for O(1) queries. No self-loops, no duplicates.
class SupportGraph {
  public:
    SupportGraph() = default;
    SupportGraph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const noexcept { return n_; }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    long edge_count() const noexcept { return static_cast<long>(edges_.size()); }

    bool has_edge(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j]; }

    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    /// Graph with vertices relabeled: vertex v becomes position t where
    /// perm[t] = v (matches SymMatrix::permuted).
    SupportGraph permuted(std::span<const int> perm) const;

    static SupportGraph complete(int n);

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<char> adj_;
};

/// Edge {i,j} present iff |a(i,j)| exceeds tol_zero relative to the largest
/// entry magnitude.
SupportGraph support_graph(const SymMatrix& a, const ToleranceConfig& cfg = {});

/// `order` is the candidate perfect elimination ordering (reverse of the
/// maximum-cardinality-search visit order); `perfect` records whether each
/// vertex's later neighbors form a clique, which holds iff the graph is
/// chordal.
struct EliminationOrdering {
    std::vector<int> order;
    bool perfect = false;
};

EliminationOrdering is_chordal(const SupportGraph& g);

/// Clique number of a chordal graph, read off a perfect elimination
/// ordering. Throws NotChordal when peo.perfect is false.
int clique_number_chordal(const SupportGraph& g, const EliminationOrdering& peo);

struct BandwidthPermutation {
    std::vector<int> perm;  // permuted(i,j) = a(perm[i], perm[j])
    int band = 0;
    bool optimal = true;
};

/// Exhaustive bandwidth minimization over all n! orderings; ties resolved
/// toward the lexicographically smallest permutation. Throws TooLarge when
/// n exceeds n_limit.
BandwidthPermutation min_bandwidth_permutation(const SymMatrix& a, int n_limit = 8,
                                               const ToleranceConfig& cfg = {});

/// Cuthill-McKee style greedy ordering for instances past the exhaustive
/// limit; the result is flagged non-optimal.
BandwidthPermutation greedy_bandwidth_permutation(const SymMatrix& a,
                                                  const ToleranceConfig& cfg = {});

}  // namespace fw
