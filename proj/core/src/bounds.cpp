#include "factorwidth/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "factorwidth/covering.hpp"
#include "factorwidth/decompose.hpp"
#include "factorwidth/matrix_ops.hpp"
#include "factorwidth/membership.hpp"
#include "factorwidth/support_graph.hpp"

namespace fw {

namespace {

std::optional<long> binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long result = 1;
    const int pick = std::min(k, n - k);
    for (int t = 1; t <= pick; ++t) {
        long next = 0;
        if (__builtin_mul_overflow(result, static_cast<long>(n - pick + t), &next))
            return std::nullopt;
        result = next / t;
    }
    return result;
}

bool all_entries_nonzero(const SymMatrix& a, const ToleranceConfig& cfg) {
    const double thr = cfg.tol_zero * a.max_abs();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j)
            if (std::fabs(a(i, j)) <= thr) return false;
    return true;
}

bool all_offdiag_nonzero(const SymMatrix& a, const ToleranceConfig& cfg) {
    const double thr = cfg.tol_zero * a.max_abs();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (std::fabs(a(i, j)) <= thr) return false;
    return true;
}

/// Maximal all-nonzero diagonal blocks chained with single-index overlaps,
/// scanning in the current ordering. Empty when the matrix does not have
/// that shape.
std::optional<std::vector<int>> detect_overlap_cuts(const SymMatrix& a,
                                                    const ToleranceConfig& cfg) {
    const int n = a.dim();
    if (n < 3) return std::nullopt;
    const double thr = cfg.tol_zero * a.max_abs();
    auto block_ok = [&](int lo, int hi) {
        for (int i = lo; i <= hi; ++i) {
            if (a(i, i) <= thr) return false;
            for (int j = i + 1; j <= hi; ++j)
                if (std::fabs(a(i, j)) <= thr) return false;
        }
        return true;
    };
    std::vector<int> cuts;
    int lo = 0;
    while (lo < n - 1) {
        int hi = lo + 1;
        if (!block_ok(lo, hi)) return std::nullopt;
        while (hi + 1 < n && block_ok(lo, hi + 1)) ++hi;
        if (hi == n - 1) break;
        cuts.push_back(hi);
        lo = hi;
    }
    if (cuts.empty()) return std::nullopt;  // single block: not the overlap shape
    return cuts;
}

}  // namespace

std::vector<BoundEntry> fran_lower_bounds(const SymMatrix& a, int k, const ToleranceConfig& cfg,
                                          std::uint64_t budget) {
    cfg.validate();
    const int n = a.dim();
    if (k < 1 || k > std::max(n, 1)) raise(ErrorCode::BadK, "k must lie in 1..n");
    const CholeskyResult chol = is_psd(a, cfg);
    if (!chol.success) raise(ErrorCode::NotPsd, "input is not PSD");

    std::vector<BoundEntry> lower;
    lower.push_back({chol.rank, "rank"});

    const long nnzu = nnz_stats(a, cfg).nnzu;
    if (k >= 2) {
        const long denom = static_cast<long>(k) * (k - 1);
        lower.push_back({(2 * nnzu + denom - 1) / denom, "nnzu"});
    } else {
        lower.push_back({nnzu, "nnzu"});
    }

    if (k >= 2 && all_entries_nonzero(a, cfg)) {
        const CoverResult cover = covering_number(n, k, budget);
        if (cover.certified)
            lower.push_back({cover.value, "covering"});
        else
            lower.push_back({schonheim_bound(n, k), "schonheim"});
    }

    if (k >= 2) {
        const SupportGraph g = support_graph(a, cfg);
        if (g.edge_count() == 0) {
            lower.push_back({0, "cliquecover"});
        } else {
            const CliqueCoverResult cc = clique_cover_number(g, k, budget);
            if (cc.certified) lower.push_back({cc.value, "cliquecover"});
        }
    }
    return lower;
}

std::vector<BoundEntry> fran_upper_bounds(const SymMatrix& a, int k, const ToleranceConfig& cfg,
                                          std::uint64_t budget) {
    cfg.validate();
    const int n = a.dim();
    if (k < 1 || k > std::max(n, 1)) raise(ErrorCode::BadK, "k must lie in 1..n");
    if (!is_psd(a, cfg).success) raise(ErrorCode::NotPsd, "input is not PSD");
    (void)budget;

    std::vector<BoundEntry> upper;
    if (const auto cnk = binom(n, k)) {
        long blocks = 0;
        if (!__builtin_mul_overflow(static_cast<long>(k), *cnk, &blocks))
            upper.push_back({blocks, "kblocks"});
    }
    upper.push_back({static_cast<long>(n) * (n + 1) / 2, "caratheodory"});

    auto try_push = [&](const char* tag, auto&& op) {
        try {
            const FWDecomposition dec = op();
            upper.push_back({dec.term_count(), tag});
        } catch (const Error&) {
        }
    };
    if (bandwidth(a, cfg) <= k) try_push("banded", [&] { return decompose_banded(a, k, cfg); });
    if (k >= 2) {
        try_push("arrowhead", [&] { return decompose_arrowhead(a, cfg); });
        try_push("ddequality", [&] { return decompose_dd_equality(a, cfg); });
        try_push("fw2optimal", [&] { return decompose_fw2_optimal(a, cfg); });
        if (const auto cuts = detect_overlap_cuts(a, cfg))
            try_push("blockoverlap", [&] { return decompose_block_overlap(a, *cuts, cfg); });
    }

    const MembershipVerdict verdict = membership(a, k, cfg);
    if (verdict.status == Membership::Member)
        upper.push_back({verdict.certificate->term_count(), "membership"});

    return upper;
}

BoundsReport bounds_report(const SymMatrix& a, int k, const ToleranceConfig& cfg,
                           std::uint64_t budget) {
    BoundsReport report;
    report.k = k;
    report.lower = fran_lower_bounds(a, k, cfg, budget);
    report.upper = fran_upper_bounds(a, k, cfg, budget);

    // Greedy clique-cover values are not certified, so they are not lower
    // bounds on the term count; surface them as notes only.
    if (k >= 2) {
        const SupportGraph g = support_graph(a, cfg);
        if (g.edge_count() > 0) {
            const CliqueCoverResult cc = clique_cover_number(g, k, budget);
            if (!cc.certified)
                report.notes.push_back("clique cover search exceeded budget; greedy cover size " +
                                       std::to_string(cc.value));
        }
    }

    long best_lower = 0, best_upper = 0;
    for (const auto& e : report.lower) best_lower = std::max(best_lower, e.value);
    best_upper = report.upper.empty() ? 0 : report.upper.front().value;
    for (const auto& e : report.upper) best_upper = std::min(best_upper, e.value);
    if (!report.lower.empty() && !report.upper.empty() && best_lower == best_upper)
        report.exact = best_lower;
    return report;
}

namespace {

bool is_arrowhead_pattern(const SymMatrix& a, const ToleranceConfig& cfg) {
    const double thr = cfg.tol_zero * a.max_abs();
    for (int i = 1; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (std::fabs(a(i, j)) > thr) return false;
    return true;
}

/// fran_2 of a component of size <= 3 (the closed small-matrix rules).
long small_component_fran2(const SymMatrix& a, const ToleranceConfig& cfg,
                           std::vector<std::string>& trace) {
    const int n = a.dim();
    const long rank = is_psd(a, cfg).rank;
    if (n <= 2) return rank;
    if (all_offdiag_nonzero(a, cfg)) {
        trace.push_back("component:all-nonzero-3x3");
        return 3;
    }
    return rank;
}

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool matches_overlap_pattern(const SymMatrix& a, const ToleranceConfig& cfg,
                             std::vector<int>& cuts_out) {
    const int n = a.dim();
    const double thr = cfg.tol_zero * a.max_abs();
    for (const auto& perm : permutations_of(n)) {
        const SymMatrix b = a.permuted(perm);
        const auto cuts = detect_overlap_cuts(b, cfg);
        if (!cuts) continue;
        // detect_overlap_cuts only scans greedily; confirm the full shape.
        bool valid = true;
        std::vector<std::pair<int, int>> ranges;
        int lo = 0;
        for (int c : *cuts) {
            ranges.emplace_back(lo, c);
            lo = c;
        }
        ranges.emplace_back(lo, n - 1);
        for (std::size_t t = 0; valid && t + 1 < ranges.size(); ++t)
            if (t > 0 && ranges[t].second - ranges[t].first < 2) valid = false;
        if (ranges.size() >= 2 && ranges[0].second - ranges[0].first == 1 &&
            ranges[1].second - ranges[1].first == 1)
            valid = false;
        auto inside = [&](int i, int j) {
            for (const auto& [l, h] : ranges)
                if (i >= l && j <= h) return true;
            return false;
        };
        for (int i = 0; i < n && valid; ++i)
            for (int j = i + 1; j < n; ++j) {
                const bool nz = std::fabs(b(i, j)) > thr;
                if (nz != inside(i, j)) {
                    valid = false;
                    break;
                }
            }
        if (valid) {
            cuts_out = *cuts;
            return true;
        }
    }
    return false;
}

bool matches_arrowhead_pattern(const SymMatrix& a, const ToleranceConfig& cfg) {
    for (const auto& perm : permutations_of(a.dim()))
        if (is_arrowhead_pattern(a.permuted(perm), cfg)) return true;
    return false;
}

}  // namespace

SmallFranResult fran_exact_small(const SymMatrix& a, const ToleranceConfig& cfg,
                                 std::uint64_t budget) {
    cfg.validate();
    const int n = a.dim();
    if (n > 4) raise(ErrorCode::TooLarge, "the exact case analysis covers n <= 4 only");

    SmallFranResult res;
    const CholeskyResult chol = is_psd(a, cfg);
    if (!chol.success) raise(ErrorCode::NotPsd, "input is not PSD");
    const long rank = chol.rank;

    const FactorWidthResult width = factor_width(a, cfg);
    res.k = width.width;
    res.trace.push_back("width=" + std::to_string(width.width) +
                        (width.exactness == Exactness::Exact ? ":exact" : ":numeric"));
    if (!width.determined()) {
        res.trace.push_back("rule:width-undetermined");
        const BoundsReport rep = bounds_report(a, width.bracket_hi, cfg, budget);
        res.exact = false;
        res.lo = 0;
        for (const auto& e : rep.lower) res.lo = std::max(res.lo, e.value);
        res.hi = rep.upper.front().value;
        for (const auto& e : rep.upper) res.hi = std::min(res.hi, e.value);
        return res;
    }
    const int k = width.width;

    auto exact = [&](long v, const std::string& rule) {
        res.exact = true;
        res.lo = res.hi = v;
        res.trace.push_back("rule:" + rule);
        return res;
    };
    auto range_from_bounds = [&](const std::string& rule) {
        const BoundsReport rep = bounds_report(a, k, cfg, budget);
        res.exact = false;
        res.lo = 0;
        for (const auto& e : rep.lower) res.lo = std::max(res.lo, e.value);
        res.hi = rep.upper.front().value;
        for (const auto& e : rep.upper) res.hi = std::min(res.hi, e.value);
        res.trace.push_back("rule:" + rule);
        if (res.lo == res.hi) {
            res.exact = true;
            res.trace.push_back("rule:bounds-met");
        }
        return res;
    };

    if (n <= 2) return exact(rank, "n<=2:rank");

    if (k == 1 || k == n) return exact(rank, "extreme-width:rank");

    if (n == 3) {
        // k == 2 here.
        if (all_offdiag_nonzero(a, cfg)) return exact(3, "all-nonzero:pair-count");
        const BandwidthPermutation bp = min_bandwidth_permutation(a, 8, cfg);
        res.trace.push_back("band=" + std::to_string(bp.band));
        return exact(rank, "permute-tridiagonal:rank");
    }

    // n == 4, k in {2, 3}.
    if (k == 3) {
        if (all_offdiag_nonzero(a, cfg)) return range_from_bounds("width3-all-nonzero:open");
        const BandwidthPermutation bp = min_bandwidth_permutation(a, 8, cfg);
        res.trace.push_back("band=" + std::to_string(bp.band));
        return exact(rank, "bandwidth3-permutation:rank");
    }

    // k == 2, n == 4: the five residual patterns plus the closed ones.
    if (all_offdiag_nonzero(a, cfg)) return exact(6, "all-nonzero:pair-count");

    const BandwidthPermutation bp = min_bandwidth_permutation(a, 8, cfg);
    if (bp.band <= 2) {
        res.trace.push_back("band=2");
        return exact(rank, "permute-tridiagonal:rank");
    }

    std::vector<int> cuts;
    if (matches_overlap_pattern(a, cfg, cuts)) {
        const long nnzu = nnz_stats(a, cfg).nnzu;
        return exact(nnzu, "block-overlap:nnzu");
    }

    if (matches_arrowhead_pattern(a, cfg)) return exact(rank, "arrowhead:rank");

    const SupportGraph g = support_graph(a, cfg);
    std::vector<int> component(n, -1);
    int comp_count = 0;
    for (int v = 0; v < n; ++v) {
        if (component[v] != -1) continue;
        std::vector<int> stack{v};
        component[v] = comp_count;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (component[w] == -1) {
                    component[w] = comp_count;
                    stack.push_back(w);
                }
        }
        ++comp_count;
    }
    if (comp_count > 1) {
        long total = 0;
        for (int comp = 0; comp < comp_count; ++comp) {
            std::vector<int> verts;
            for (int v = 0; v < n; ++v)
                if (component[v] == comp) verts.push_back(v);
            total += small_component_fran2(a.principal_submatrix(verts), cfg, res.trace);
        }
        return exact(total, "block-diagonal:sum");
    }

    // Connected, width 2, not covered by a closed rule: the pentadiagonal
    // (one zero pair) and cyclic (two disjoint zero pairs) patterns.
    long zero_pairs = 6 - nnz_stats(a, cfg).nnzu;
    return range_from_bounds(zero_pairs == 1 ? "pentadiagonal:open" : "cyclic:open");
}

}  // namespace fw
