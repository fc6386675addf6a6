#include "factorwidth/covering.hpp"

#include <algorithm>
#include <numeric>

#include "factorwidth/errors.hpp"

namespace fw {

bool CoveringDesign::covers_all_pairs() const {
    for (const auto& block : blocks)
        if (static_cast<int>(block.size()) != k) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool covered = false;
            for (const auto& block : blocks) {
                if (std::find(block.begin(), block.end(), i) != block.end() &&
                    std::find(block.begin(), block.end(), j) != block.end()) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
    return true;
}

bool CliqueCover::covers(const SupportGraph& g) const {
    for (const auto& clique : cliques)
        if (static_cast<int>(clique.size()) != k) return false;
    for (const auto& [i, j] : g.edges()) {
        bool covered = false;
        for (const auto& clique : cliques) {
            if (std::find(clique.begin(), clique.end(), i) != clique.end() &&
                std::find(clique.begin(), clique.end(), j) != clique.end()) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

long schonheim_bound(int n, int k) {
    if (k < 2 || k > n) raise(ErrorCode::BadArgs, "need 2 <= k <= n");
    const long inner = (static_cast<long>(n) - 1 + (k - 2)) / (k - 1);  // ceil((n-1)/(k-1))
    return (static_cast<long>(n) * inner + k - 1) / k;                  // ceil(n*inner/k)
}

namespace {

/// Shared search over "cover every target pair with k-subsets of [n]".
/// Deterministic: branches on the lexicographically least uncovered pair and
/// orders candidate blocks by fresh coverage, ties broken lexicographically.
class CoverSearch {
  public:
    CoverSearch(int n, int k, std::vector<std::pair<int, int>> targets, std::uint64_t budget)
        : n_(n), k_(k), targets_(std::move(targets)), budget_(budget) {
        std::sort(targets_.begin(), targets_.end());
        pair_id_.assign(static_cast<std::size_t>(n) * n, -1);
        for (std::size_t t = 0; t < targets_.size(); ++t) {
            const auto [i, j] = targets_[t];
            pair_id_[static_cast<std::size_t>(i) * n + j] = static_cast<int>(t);
            pair_id_[static_cast<std::size_t>(j) * n + i] = static_cast<int>(t);
        }
        complete_ = targets_.size() == static_cast<std::size_t>(n) * (n - 1) / 2;
        max_per_block_ = complete_ ? pairs_per_block() : densest_block();
    }

    struct Outcome {
        std::vector<std::vector<int>> blocks;
        bool certified = false;
        std::uint64_t nodes = 0;
    };

    Outcome run() {
        Outcome out;
        if (targets_.empty()) {
            out.certified = true;
            return out;
        }
        best_blocks_ = greedy();
        best_size_ = static_cast<long>(best_blocks_.size());

        uncovered_.assign(targets_.size(), 1);
        current_.clear();
        aborted_ = false;
        const long root_lb = lower_bound(static_cast<long>(targets_.size()));
        if (best_size_ > root_lb) dfs(static_cast<long>(targets_.size()));

        out.blocks = best_blocks_;
        out.certified = !aborted_;
        out.nodes = nodes_;
        return out;
    }

  private:
    long pairs_per_block() const { return static_cast<long>(k_) * (k_ - 1) / 2; }

    /// Max number of targets inside any k-subset; exact by enumeration at
    /// desk scale, otherwise the trivial k-choose-2.
    long densest_block() {
        double subsets = 1.0;
        for (int t = 0; t < k_; ++t) subsets *= static_cast<double>(n_ - t) / (t + 1);
        if (subsets > 2e5) return pairs_per_block();

        long best = 1;
        std::vector<int> cur(k_);
        std::iota(cur.begin(), cur.end(), 0);
        while (true) {
            long inside = 0;
            for (int x = 0; x < k_; ++x)
                for (int y = x + 1; y < k_; ++y)
                    if (pair_id_[static_cast<std::size_t>(cur[x]) * n_ + cur[y]] >= 0) ++inside;
            best = std::max(best, inside);
            int t = k_ - 1;
            while (t >= 0 && cur[t] == n_ - k_ + t) --t;
            if (t < 0) break;
            ++cur[t];
            for (int s = t + 1; s < k_; ++s) cur[s] = cur[s - 1] + 1;
        }
        return std::max(best, 1L);
    }

    long lower_bound(long uncovered_count) const {
        long bound = (uncovered_count + max_per_block_ - 1) / max_per_block_;
        // Each block through v retires at most k-1 of v's uncovered pairs,
        // and each block meets only k vertices.
        long incidences = 0;
        for (int v = 0; v < n_; ++v) {
            long deg = 0;
            for (std::size_t t = 0; t < targets_.size(); ++t)
                if (uncovered_[t] && (targets_[t].first == v || targets_[t].second == v)) ++deg;
            incidences += (deg + k_ - 2) / (k_ - 1);
        }
        bound = std::max(bound, (incidences + k_ - 1) / k_);
        return bound;
    }

    std::vector<std::vector<int>> greedy() const {
        std::vector<char> uncovered(targets_.size(), 1);
        long remaining = static_cast<long>(targets_.size());
        std::vector<std::vector<int>> blocks;
        while (remaining > 0) {
            int first = 0;
            while (!uncovered[first]) ++first;
            std::vector<int> block{targets_[first].first, targets_[first].second};
            while (static_cast<int>(block.size()) < k_) {
                int best_v = -1;
                long best_gain = -1;
                for (int v = 0; v < n_; ++v) {
                    if (std::find(block.begin(), block.end(), v) != block.end()) continue;
                    long gain = 0;
                    for (int u : block) {
                        const int id = pair_id_[static_cast<std::size_t>(u) * n_ + v];
                        if (id >= 0 && uncovered[id]) ++gain;
                    }
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_v = v;
                    }
                }
                block.push_back(best_v);
            }
            std::sort(block.begin(), block.end());
            for (int x = 0; x < k_; ++x)
                for (int y = x + 1; y < k_; ++y) {
                    const int id = pair_id_[static_cast<std::size_t>(block[x]) * n_ + block[y]];
                    if (id >= 0 && uncovered[id]) {
                        uncovered[id] = 0;
                        --remaining;
                    }
                }
            blocks.push_back(std::move(block));
        }
        return blocks;
    }

    void dfs(long uncovered_count) {
        if (aborted_) return;
        if (uncovered_count == 0) {
            if (static_cast<long>(current_.size()) < best_size_) {
                best_size_ = static_cast<long>(current_.size());
                best_blocks_ = current_;
            }
            return;
        }
        if (static_cast<long>(current_.size()) + lower_bound(uncovered_count) >= best_size_)
            return;

        int branch = 0;
        while (!uncovered_[branch]) ++branch;
        const auto [bi, bj] = targets_[branch];

        std::vector<std::vector<int>> candidates;
        if (complete_ && current_.empty()) {
            // All completions of the first block are isomorphic.
            std::vector<int> block(k_);
            std::iota(block.begin(), block.end(), 0);
            candidates.push_back(std::move(block));
        } else {
            std::vector<int> others;
            for (int v = 0; v < n_; ++v)
                if (v != bi && v != bj) others.push_back(v);
            std::vector<int> pick(k_ - 2);
            std::iota(pick.begin(), pick.end(), 0);
            const int m = static_cast<int>(others.size());
            if (k_ - 2 <= m) {
                while (true) {
                    std::vector<int> block{bi, bj};
                    for (int t : pick) block.push_back(others[t]);
                    std::sort(block.begin(), block.end());
                    candidates.push_back(std::move(block));
                    int t = k_ - 3;
                    while (t >= 0 && pick[t] == m - (k_ - 2) + t) --t;
                    if (t < 0) break;
                    ++pick[t];
                    for (int s = t + 1; s < k_ - 2; ++s) pick[s] = pick[s - 1] + 1;
                }
            }
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](const std::vector<int>& x, const std::vector<int>& y) {
                                 return fresh_coverage(x) > fresh_coverage(y);
                             });
        }

        for (const auto& block : candidates) {
            if (++nodes_ > budget_) {
                aborted_ = true;
                return;
            }
            std::vector<int> retired;
            for (int x = 0; x < k_; ++x)
                for (int y = x + 1; y < k_; ++y) {
                    const int id = pair_id_[static_cast<std::size_t>(block[x]) * n_ + block[y]];
                    if (id >= 0 && uncovered_[id]) {
                        uncovered_[id] = 0;
                        retired.push_back(id);
                    }
                }
            current_.push_back(block);
            dfs(uncovered_count - static_cast<long>(retired.size()));
            current_.pop_back();
            for (int id : retired) uncovered_[id] = 1;
            if (aborted_) return;
        }
    }

    long fresh_coverage(const std::vector<int>& block) const {
        long gain = 0;
        for (int x = 0; x < k_; ++x)
            for (int y = x + 1; y < k_; ++y) {
                const int id = pair_id_[static_cast<std::size_t>(block[x]) * n_ + block[y]];
                if (id >= 0 && uncovered_[id]) ++gain;
            }
        return gain;
    }

    int n_;
    int k_;
    std::vector<std::pair<int, int>> targets_;
    std::uint64_t budget_;
    std::vector<int> pair_id_;
    bool complete_ = false;
    long max_per_block_ = 1;

    std::vector<char> uncovered_;
    std::vector<std::vector<int>> current_;
    std::vector<std::vector<int>> best_blocks_;
    long best_size_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

CoverResult covering_number(int n, int k, std::uint64_t budget) {
    if (k < 2 || k > n) raise(ErrorCode::BadArgs, "need 2 <= k <= n");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    CoverSearch search(n, k, std::move(pairs), budget);
    auto outcome = search.run();

    CoverResult res;
    res.value = static_cast<long>(outcome.blocks.size());
    res.certified = outcome.certified;
    res.nodes_expanded = outcome.nodes;
    res.design = CoveringDesign{n, k, std::move(outcome.blocks)};
    return res;
}

CliqueCoverResult clique_cover_number(const SupportGraph& g, int k, std::uint64_t budget) {
    const int n = g.vertex_count();
    if (k < 2 || k > n) raise(ErrorCode::BadArgs, "need 2 <= k <= vertex count");

    CoverSearch search(n, k, g.edges(), budget);
    auto outcome = search.run();

    CliqueCoverResult res;
    res.value = static_cast<long>(outcome.blocks.size());
    res.certified = outcome.certified;
    res.nodes_expanded = outcome.nodes;
    res.cover = CliqueCover{k, std::move(outcome.blocks)};
    return res;
}

}  // namespace fw
