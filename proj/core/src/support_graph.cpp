#include "factorwidth/support_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "factorwidth/matrix_ops.hpp"

namespace fw {

SupportGraph::SupportGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) raise(ErrorCode::BadArgs, "negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    for (auto& [i, j] : edges) {
        if (i == j) raise(ErrorCode::BadArgs, "self-loop");
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n) raise(ErrorCode::BadArgs, "edge endpoint out of range");
        if (adj_[static_cast<std::size_t>(i) * n + j]) raise(ErrorCode::BadArgs, "duplicate edge");
        adj_[static_cast<std::size_t>(i) * n + j] = 1;
        adj_[static_cast<std::size_t>(j) * n + i] = 1;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

std::vector<int> SupportGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(v, u)) out.push_back(u);
    return out;
}

int SupportGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(v, u)) ++d;
    return d;
}

SupportGraph SupportGraph::permuted(std::span<const int> perm) const {
    std::vector<int> pos(n_);
    for (int t = 0; t < n_; ++t) pos[perm[t]] = t;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edges_.size());
    for (auto [i, j] : edges_) edges.emplace_back(pos[i], pos[j]);
    return SupportGraph(n_, std::move(edges));
}

SupportGraph SupportGraph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return SupportGraph(n, std::move(edges));
}

SupportGraph support_graph(const SymMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const double thr = cfg.tol_zero * a.max_abs();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (std::fabs(a(i, j)) > thr) edges.emplace_back(i, j);
    return SupportGraph(a.dim(), std::move(edges));
}

EliminationOrdering is_chordal(const SupportGraph& g) {
    const int n = g.vertex_count();
    EliminationOrdering out;
    out.order.reserve(n);

    // Maximum cardinality search: repeatedly visit the vertex with the most
    // already-visited neighbors (ties to the smallest index). The reverse
    // visit order is a perfect elimination ordering iff the graph is chordal.
    std::vector<int> weight(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<int> visit_order;
    visit_order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
        visited[best] = 1;
        visit_order.push_back(best);
        for (int u = 0; u < n; ++u)
            if (!visited[u] && g.has_edge(best, u)) ++weight[u];
    }
    out.order.assign(visit_order.rbegin(), visit_order.rend());

    std::vector<int> pos(n);
    for (int t = 0; t < n; ++t) pos[out.order[t]] = t;
    out.perfect = true;
    for (int t = 0; t < n && out.perfect; ++t) {
        std::vector<int> later;
        for (int u : g.neighbors(out.order[t]))
            if (pos[u] > t) later.push_back(u);
        for (std::size_t x = 0; x < later.size() && out.perfect; ++x)
            for (std::size_t y = x + 1; y < later.size(); ++y)
                if (!g.has_edge(later[x], later[y])) {
                    out.perfect = false;
                    break;
                }
    }
    return out;
}

int clique_number_chordal(const SupportGraph& g, const EliminationOrdering& peo) {
    if (!peo.perfect)
        raise(ErrorCode::NotChordal, "clique number shortcut needs a perfect elimination ordering");
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int t = 0; t < n; ++t) pos[peo.order[t]] = t;
    int omega = n > 0 ? 1 : 0;
    for (int t = 0; t < n; ++t) {
        int later = 0;
        for (int u : g.neighbors(peo.order[t]))
            if (pos[u] > t) ++later;
        omega = std::max(omega, later + 1);
    }
    return omega;
}

namespace {

int band_of_permutation(const SymMatrix& a, const std::vector<int>& perm, double thr) {
    int band = 1;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + band; j < n; ++j)  // only widths that would improve
            if (std::fabs(a(perm[i], perm[j])) > thr) band = j - i + 1;
    return band;
}

}  // namespace

BandwidthPermutation min_bandwidth_permutation(const SymMatrix& a, int n_limit,
                                               const ToleranceConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    if (n > n_limit)
        raise(ErrorCode::TooLarge, "exhaustive bandwidth search capped at n_limit");
    const double thr = cfg.tol_zero * a.max_abs();

    BandwidthPermutation best;
    best.perm.resize(n);
    std::iota(best.perm.begin(), best.perm.end(), 0);
    best.band = band_of_permutation(a, best.perm, thr);

    std::vector<int> perm = best.perm;
    while (std::next_permutation(perm.begin(), perm.end())) {
        const int band = band_of_permutation(a, perm, thr);
        if (band < best.band) {
            best.band = band;
            best.perm = perm;
        }
        if (best.band == 1) break;  // cannot improve
    }
    return best;
}

BandwidthPermutation greedy_bandwidth_permutation(const SymMatrix& a,
                                                  const ToleranceConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    const SupportGraph g = support_graph(a, cfg);

    // Cuthill-McKee: BFS from a minimum-degree vertex in each component,
    // neighbors enqueued by increasing degree.
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    while (static_cast<int>(order.size()) < n) {
        int start = -1;
        for (int v = 0; v < n; ++v)
            if (!seen[v] && (start == -1 || g.degree(v) < g.degree(start))) start = v;
        std::vector<int> queue{start};
        seen[start] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            order.push_back(v);
            auto nbrs = g.neighbors(v);
            std::stable_sort(nbrs.begin(), nbrs.end(),
                             [&](int x, int y) { return g.degree(x) < g.degree(y); });
            for (int u : nbrs)
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        }
    }

    BandwidthPermutation out;
    out.perm = std::move(order);
    out.band = band_of_permutation(a, out.perm, cfg.tol_zero * a.max_abs());
    out.optimal = false;
    return out;
}

}  // namespace fw
