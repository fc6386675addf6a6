#pragma once

#include <cstdint>
#include <vector>

#include "factorwidth/support_graph.hpp"

namespace fw {

/// Family of k-element subsets of {0..n-1} covering every 2-subset.
struct CoveringDesign {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> blocks;

    bool covers_all_pairs() const;
};

/// Family of k-element vertex subsets covering every edge of a graph. The
/// subsets may contain non-edges; only the edges of the graph must each lie
/// inside some subset.
struct CliqueCover {
    int k = 0;
    std::vector<std::vector<int>> cliques;

    bool covers(const SupportGraph& g) const;
};

/// ceil(n/k * ceil((n-1)/(k-1))), the classical covering-number lower bound.
/// Throws BadArgs unless 2 <= k <= n.
long schonheim_bound(int n, int k);

struct CoverResult {
    long value = 0;
    bool certified = false;
    CoveringDesign design;
    std::uint64_t nodes_expanded = 0;
};

/// Exact minimum size of an (n,k,2)-covering design by branch-and-bound over
/// the lexicographically least uncovered pair, pruned by pair-count and
/// degree bounds. Past `budget` nodes the greedy incumbent is returned with
/// certified = false; the returned design always covers all pairs.
CoverResult covering_number(int n, int k, std::uint64_t budget = 10'000'000);

struct CliqueCoverResult {
    long value = 0;
    bool certified = false;
    CliqueCover cover;
    std::uint64_t nodes_expanded = 0;
};

/// Exact k-clique covering number of a graph by the same search over its
/// edge set. An edgeless graph has value 0. Throws BadArgs unless
/// 2 <= k <= n.
CliqueCoverResult clique_cover_number(const SupportGraph& g, int k,
                                      std::uint64_t budget = 10'000'000);

}  // namespace fw
