#include "factorwidth/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "factorwidth/matrix_ops.hpp"
#include "factorwidth/membership.hpp"
#include "factorwidth/support_graph.hpp"

namespace fw {

namespace {

SparseVector pair_vector(int dim, int i, double vi, int j, double vj) {
    SparseVector v;
    v.dim = dim;
    if (i > j) {
        std::swap(i, j);
        std::swap(vi, vj);
    }
    if (vi != 0.0) {
        v.support.push_back(i);
        v.values.push_back(vi);
    }
    if (vj != 0.0) {
        v.support.push_back(j);
        v.values.push_back(vj);
    }
    return v;
}

SparseVector singleton(int dim, int i, double value) {
    SparseVector v;
    v.dim = dim;
    v.support.push_back(i);
    v.values.push_back(value);
    return v;
}

}  // namespace

FWDecomposition decompose_banded(const SymMatrix& a, int k, const ToleranceConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    if (k < 1 || k > std::max(n, 1)) raise(ErrorCode::BadK, "band parameter out of range");
    if (bandwidth(a, cfg) > k)
        raise(ErrorCode::BandTooWide, "matrix bandwidth exceeds the requested k");

    const double pivot_thr = cfg.tol_psd * std::max(a.max_diag(), 0.0);

    // Pivotless Cholesky restricted to the band. A zero pivot is legal for a
    // semidefinite input but forces the rest of its column to vanish.
    std::vector<double> factor(static_cast<std::size_t>(n) * n, 0.0);
    auto lentry = [&](int i, int j) -> double& {
        return factor[static_cast<std::size_t>(i) * n + j];
    };
    std::vector<char> positive(n, 0);
    for (int j = 0; j < n; ++j) {
        double d = a(j, j);
        for (int m = std::max(0, j - k + 1); m < j; ++m) d -= lentry(j, m) * lentry(j, m);
        if (d < -pivot_thr)
            raise(ErrorCode::NotPsd, "negative pivot in band Cholesky");
        if (d <= pivot_thr) {
            for (int i = j + 1; i < std::min(n, j + k); ++i) {
                double num = a(i, j);
                for (int m = std::max(0, i - k + 1); m < j; ++m)
                    num -= lentry(i, m) * lentry(j, m);
                if (std::fabs(num) > 4.0 * pivot_thr)
                    raise(ErrorCode::NotPsd, "zero pivot with nonzero column");
            }
            continue;
        }
        positive[j] = 1;
        lentry(j, j) = std::sqrt(d);
        for (int i = j + 1; i < std::min(n, j + k); ++i) {
            double num = a(i, j);
            for (int m = std::max(0, i - k + 1); m < j; ++m)
                num -= lentry(i, m) * lentry(j, m);
            lentry(i, j) = num / lentry(j, j);
        }
    }

    FWDecomposition dec;
    dec.k = k;
    for (int j = 0; j < n; ++j) {
        if (!positive[j]) continue;
        SparseVector v;
        v.dim = n;
        for (int i = j; i < std::min(n, j + k); ++i)
            if (lentry(i, j) != 0.0) {
                v.support.push_back(i);
                v.values.push_back(lentry(i, j));
            }
        dec.vectors.push_back(std::move(v));
    }
    dec.measure_residual(a);
    return dec;
}

FWDecomposition decompose_tridiagonal(const SymMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    if (bandwidth(a, cfg) > 2)
        raise(ErrorCode::NotTridiagonal, "matrix is not tridiagonal");

    const double scale = std::max(a.max_diag(), 0.0);
    const double zero_thr = cfg.tol_zero * scale;
    const double neg_thr = cfg.tol_psd * scale;
    const double b_thr = cfg.tol_zero * a.max_abs();

    FWDecomposition dec;
    dec.k = 2;
    double pivot = n > 0 ? a(0, 0) : 0.0;
    for (int j = 0; j < n; ++j) {
        if (pivot < -neg_thr)
            raise(ErrorCode::NotPsd, "negative Schur complement in tridiagonal recurrence");
        const double b = j + 1 < n ? a(j, j + 1) : 0.0;
        const bool has_b = std::fabs(b) > b_thr;
        if (pivot <= zero_thr) {
            if (has_b)
                raise(ErrorCode::InconsistentZeroPivot,
                      "vanishing pivot next to a nonzero off-diagonal: input is not PSD");
            if (j + 1 < n) pivot = a(j + 1, j + 1);  // independent block starts
            continue;
        }
        const double root = std::sqrt(pivot);
        if (has_b) {
            dec.vectors.push_back(pair_vector(n, j, root, j + 1, b / root));
            pivot = a(j + 1, j + 1) - b * b / pivot;
        } else {
            dec.vectors.push_back(singleton(n, j, root));
            if (j + 1 < n) pivot = a(j + 1, j + 1);
        }
    }
    dec.measure_residual(a);
    return dec;
}

FWDecomposition decompose_arrowhead(const SymMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    const double zero_thr = cfg.tol_zero * a.max_abs();

    std::vector<int> kept;
    for (int i = 0; i < n; ++i) {
        if (a(i, i) > zero_thr) {
            kept.push_back(i);
        } else {
            for (int j = 0; j < n; ++j)
                if (j != i && std::fabs(a(i, j)) > zero_thr)
                    raise(ErrorCode::NotPsd, "vanishing diagonal entry with nonzero row");
        }
    }

    const int m = static_cast<int>(kept.size());
    const SymMatrix s = a.principal_submatrix(kept);
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (std::fabs(s(i, j)) > zero_thr)
                raise(ErrorCode::NotArrowhead, "nonzero entry outside the first row and diagonal");

    FWDecomposition dec;
    dec.k = 2;
    double consumed = 0.0;
    for (int i = 1; i < m; ++i) {
        const double diag = s(i, i);
        const double spoke = s(0, i);
        if (std::fabs(spoke) > zero_thr) {
            consumed += spoke * spoke / diag;
            dec.vectors.push_back(
                pair_vector(n, kept[0], spoke / std::sqrt(diag), kept[i], std::sqrt(diag)));
        } else {
            dec.vectors.push_back(singleton(n, kept[i], std::sqrt(diag)));
        }
    }
    if (m > 0) {
        const double surplus = s(0, 0) - consumed;
        if (surplus < -cfg.tol_psd * std::max(a.max_diag(), 0.0))
            raise(ErrorCode::NotPsd, "arrowhead corner deficit: input is not PSD");
        if (surplus > cfg.tol_zero * std::max(a.max_diag(), 0.0))
            dec.vectors.push_back(singleton(n, kept[0], std::sqrt(surplus)));
    }
    dec.measure_residual(a);
    return dec;
}

FWDecomposition decompose_dd_equality(const SymMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    const double scale = a.max_abs();
    const double zero_thr = cfg.tol_zero * scale;

    for (int j = 0; j < n; ++j) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            if (i != j) off += std::fabs(a(i, j));
        if (std::fabs(a(j, j) - off) > cfg.tol_recon * std::max(scale, 1e-300))
            raise(ErrorCode::NotDdEquality,
                  "row diagonal does not equal its off-diagonal absolute sum");
    }

    FWDecomposition dec;
    dec.k = 2;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double entry = a(i, j);
            if (std::fabs(entry) <= zero_thr) continue;
            const double root = std::sqrt(std::fabs(entry));
            const double sign = entry > 0 ? 1.0 : -1.0;
            dec.vectors.push_back(pair_vector(n, i, sign * root, j, root));
        }
    dec.measure_residual(a);
    return dec;
}

namespace {

struct AdjustState {
    double a, b, c;
    double x2, y2, z2;  // squared seed parameters

    double z_sq(double xi2) const { return z2 + b * b * (1.0 / x2 - 1.0 / xi2); }
    double y_sq(double xi2) const { return y2 + c * c * (1.0 / z2 - 1.0 / z_sq(xi2)); }
    double leading(double xi2) const { return xi2 + a * a / y_sq(xi2); }

    PairTriple triple(double xi2) const {
        const double zz = z_sq(xi2);
        const double yy = y_sq(xi2);
        const double xi = std::sqrt(xi2);
        PairTriple t;
        t.u = pair_vector(3, 0, a / std::sqrt(yy), 1, std::sqrt(yy));
        t.v = pair_vector(3, 0, xi, 2, b / xi);
        t.w = pair_vector(3, 1, c / std::sqrt(zz), 2, std::sqrt(zz));
        return t;
    }
};

}  // namespace

PairTriple adjust_3x3_diagonal(double a, double b, double c, double x, double y, double z,
                               double target, const ToleranceConfig& cfg) {
    cfg.validate();
    if (a == 0.0 || b == 0.0 || c == 0.0)
        raise(ErrorCode::BadSeed, "off-diagonal entries must be nonzero");
    if (x == 0.0 || y == 0.0 || z == 0.0)
        raise(ErrorCode::BadSeed, "seed parameters must be nonzero");

    AdjustState st{a, b, c, x * x, y * y, z * z};

    // The seed triple must reconstruct the unit-diagonal matrix.
    const double d0 = st.x2 + a * a / st.y2;
    const double d1 = st.y2 + c * c / st.z2;
    const double d2 = st.z2 + b * b / st.x2;
    if (std::fabs(d0 - 1.0) > cfg.tol_recon || std::fabs(d1 - 1.0) > cfg.tol_recon ||
        std::fabs(d2 - 1.0) > cfg.tol_recon)
        raise(ErrorCode::BadSeed, "seed triple does not reconstruct a unit diagonal");

    if (!(target > 1.0))
        raise(ErrorCode::TargetNotAboveOne, "reachable leading entries are exactly (1, inf)");

    // Bracket on the realized leading entry, then bisect. leading(x^2) = 1
    // and leading grows unboundedly, so a bracket always exists.
    double lo = st.x2;
    double hi = std::max(2.0 * st.x2, st.x2 + 1.0);
    while (st.leading(hi) < target) {
        hi *= 2.0;
        if (!std::isfinite(hi)) raise(ErrorCode::BadArgs, "target out of floating range");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (st.leading(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return st.triple(hi);
}

namespace {

bool sdd_feasible(const SymMatrix& m, const ToleranceConfig& cfg) {
    for (int i = 0; i < m.dim(); ++i)
        if (m(i, i) < 0) return false;
    return is_psd(comparison_matrix(m), cfg).success;
}

/// Positive vector d making diag(d) * a * diag(d) diagonally dominant,
/// computed per connected component as the Perron direction of the
/// normalized off-diagonal magnitude matrix. Exists whenever the comparison
/// matrix of `a` is PSD.
std::vector<double> sdd_scaling(const SymMatrix& a, const ToleranceConfig& cfg) {
    const int n = a.dim();
    std::vector<double> d(n, 1.0);
    if (diagonally_dominant(a)) return d;

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
            for (int w = 0; w < n; ++w)
                if (w != u && g.has_edge(u, w) && component[w] == -1) {
                    component[w] = comp_count;
                    stack.push_back(w);
                }
        }
        ++comp_count;
    }

    for (int comp = 0; comp < comp_count; ++comp) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (component[v] == comp) verts.push_back(v);
        const int m = static_cast<int>(verts.size());
        if (m == 1) continue;

        // Averaged power iteration x <- (x + Bx)/2 on B(p,q) = |a_pq| / a_pp;
        // the shift keeps bipartite supports from oscillating.
        std::vector<double> x(m, 1.0), next(m);
        const long cap = 10 * cfg.max_iter;
        for (long it = 0; it < cap; ++it) {
            double norm = 0.0;
            for (int p = 0; p < m; ++p) {
                double acc = 0.0;
                for (int q = 0; q < m; ++q)
                    if (q != p) acc += std::fabs(a(verts[p], verts[q])) * x[q];
                next[p] = 0.5 * (x[p] + acc / a(verts[p], verts[p]));
                norm = std::max(norm, next[p]);
            }
            double delta = 0.0;
            for (int p = 0; p < m; ++p) {
                next[p] /= norm;
                delta = std::max(delta, std::fabs(next[p] - x[p]));
            }
            x.swap(next);
            if (delta < 1e-15) break;
        }
        for (int p = 0; p < m; ++p) d[verts[p]] = x[p];
    }
    return d;
}

struct PairPool {
    int n = 0;
    std::map<std::pair<int, int>, SparseVector> by_pair;
};

/// Sum of the three pair vectors restricted to (p, r, s) coordinates.
SymMatrix triple_sum(const PairPool& pool, int p, int r, int s) {
    const int coords[3] = {p, r, s};
    SymMatrix t(3);
    const std::pair<int, int> pairs[3] = {{std::min(p, r), std::max(p, r)},
                                          {std::min(p, s), std::max(p, s)},
                                          {std::min(r, s), std::max(r, s)}};
    for (const auto& key : pairs) {
        const SparseVector& v = pool.by_pair.at(key);
        double dense[3] = {0, 0, 0};
        for (std::size_t t2 = 0; t2 < v.support.size(); ++t2)
            for (int c = 0; c < 3; ++c)
                if (v.support[t2] == coords[c]) dense[c] = v.values[t2];
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) t.add(i, j, dense[i] * dense[j]);
    }
    return t;
}

double value_at(const SparseVector& v, int index) {
    for (std::size_t t = 0; t < v.support.size(); ++t)
        if (v.support[t] == index) return v.values[t];
    return 0.0;
}

}  // namespace

FWDecomposition decompose_fw2_optimal(const SymMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    if (!factor_width_le_2(a, cfg))
        raise(ErrorCode::NotFactorWidth2, "matrix does not have factor width at most 2");

    const DiagonalNormalization norm = diagonal_normalize(a, cfg);
    const int m = static_cast<int>(norm.kept.size());
    const SymMatrix& unit = norm.normalized;
    const double zero_thr = cfg.tol_zero * std::max(unit.max_abs(), 1.0);

    // Every diagonal index must sit inside an all-nonzero 3x3 principal
    // submatrix for the surplus absorption to have somewhere to go.
    auto triple_ok = [&](int i, int j, int l) {
        return std::fabs(unit(i, j)) > zero_thr && std::fabs(unit(i, l)) > zero_thr &&
               std::fabs(unit(j, l)) > zero_thr;
    };
    for (int p = 0; p < m; ++p) {
        bool found = false;
        for (int i = 0; i < m && !found; ++i)
            for (int j = i + 1; j < m && !found; ++j)
                for (int l = j + 1; l < m; ++l)
                    if ((i == p || j == p || l == p) && triple_ok(i, j, l)) {
                        found = true;
                        break;
                    }
        if (!found)
            raise(ErrorCode::HypothesisFailed,
                  "some diagonal index lies in no all-nonzero 3x3 principal submatrix");
    }

    const std::vector<double> d = sdd_scaling(unit, cfg);
    SymMatrix scaled(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) scaled.set(i, j, d[i] * d[j] * unit(i, j));

    // Split off the diagonal surplus above the dominance equality level.
    std::vector<double> surplus(m);
    for (int p = 0; p < m; ++p) {
        double off = 0.0;
        for (int q = 0; q < m; ++q)
            if (q != p) off += std::fabs(scaled(p, q));
        surplus[p] = scaled(p, p) - off;
        if (surplus[p] < -0.1 * cfg.tol_recon * scaled(p, p))
            raise(ErrorCode::NotFactorWidth2, "scaled diagonal dominance certificate failed");
        surplus[p] = std::max(surplus[p], 0.0);
    }

    PairPool pool;
    pool.n = m;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const double entry = scaled(i, j);
            if (std::fabs(entry) <= zero_thr * d[i] * d[j]) continue;
            const double root = std::sqrt(std::fabs(entry));
            const double sign = entry > 0 ? 1.0 : -1.0;
            pool.by_pair[{i, j}] = pair_vector(m, i, sign * root, j, root);
        }

    const double absorb_thr = cfg.tol_zero * std::max(scaled.max_diag(), 0.0);
    for (int p = 0; p < m; ++p) {
        if (surplus[p] <= absorb_thr) continue;
        int ti = -1, tj = -1, tl = -1;
        for (int i = 0; i < m && ti < 0; ++i)
            for (int j = i + 1; j < m && ti < 0; ++j)
                for (int l = j + 1; l < m; ++l)
                    if ((i == p || j == p || l == p) && triple_ok(i, j, l)) {
                        ti = i;
                        tj = j;
                        tl = l;
                        break;
                    }
        // Order the triple with the surplus index first.
        int r = ti == p ? tj : ti;
        int s = tl == p ? tj : tl;
        if (r > s) std::swap(r, s);

        const SymMatrix t = triple_sum(pool, p, r, s);
        const double n0 = std::sqrt(t(0, 0)), n1 = std::sqrt(t(1, 1)), n2 = std::sqrt(t(2, 2));
        const SparseVector& u_old = pool.by_pair.at({std::min(p, r), std::max(p, r)});
        const SparseVector& v_old = pool.by_pair.at({std::min(p, s), std::max(p, s)});
        const SparseVector& w_old = pool.by_pair.at({std::min(r, s), std::max(r, s)});

        const PairTriple adj = adjust_3x3_diagonal(
            t(0, 1) / (n0 * n1), t(0, 2) / (n0 * n2), t(1, 2) / (n1 * n2),
            value_at(v_old, p) / n0, value_at(u_old, r) / n1, value_at(w_old, s) / n2,
            (t(0, 0) + surplus[p]) / t(0, 0), cfg);

        pool.by_pair[{std::min(p, r), std::max(p, r)}] =
            pair_vector(m, p, value_at(adj.u, 0) * n0, r, value_at(adj.u, 1) * n1);
        pool.by_pair[{std::min(p, s), std::max(p, s)}] =
            pair_vector(m, p, value_at(adj.v, 0) * n0, s, value_at(adj.v, 2) * n2);
        pool.by_pair[{std::min(r, s), std::max(r, s)}] =
            pair_vector(m, r, value_at(adj.w, 1) * n1, s, value_at(adj.w, 2) * n2);
    }

    // Undo both scalings and re-embed into the original index set.
    std::vector<double> unscale(m);
    for (int p = 0; p < m; ++p) unscale[p] = 1.0 / (norm.scale[p] * d[p]);

    FWDecomposition dec;
    dec.k = 2;
    for (const auto& [key, vec] : pool.by_pair) {
        SparseVector v = vec.scaled(unscale);
        dec.vectors.push_back(v.embedded(a.dim(), norm.kept));
    }
    dec.measure_residual(a);
    return dec;
}

FWDecomposition decompose_block_overlap(const SymMatrix& a, const std::vector<int>& cut_indices,
                                        const ToleranceConfig& cfg) {
    cfg.validate();
    if (cut_indices.empty()) return decompose_fw2_optimal(a, cfg);

    const int n = a.dim();
    if (n < 3) raise(ErrorCode::BadBlockStructure, "overlapping blocks need n >= 3");
    std::vector<int> cuts = cut_indices;
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t t = 0; t < cuts.size(); ++t) {
        if (cuts[t] < 1 || cuts[t] > n - 2)
            raise(ErrorCode::BadBlockStructure, "cut index out of range");
        if (t > 0 && cuts[t] - cuts[t - 1] < 2)
            raise(ErrorCode::BadBlockStructure,
                  "cuts must be separated by at least one interior index");
    }

    // Block ranges [lo, hi], consecutive blocks sharing exactly the cut.
    std::vector<std::pair<int, int>> ranges;
    int lo = 0;
    for (int c : cuts) {
        ranges.emplace_back(lo, c);
        lo = c;
    }
    ranges.emplace_back(lo, n - 1);
    if (ranges.size() >= 2 && ranges[0].second - ranges[0].first == 1 &&
        ranges[1].second - ranges[1].first == 1)
        raise(ErrorCode::BadBlockStructure,
              "two adjacent 2x2 blocks form a tridiagonal matrix; the minimal term count "
              "is its rank, not nnzu");

    const double zero_thr = cfg.tol_zero * a.max_abs();
    auto in_common_block = [&](int i, int j) {
        for (const auto& [blo, bhi] : ranges)
            if (i >= blo && j <= bhi) return true;
        return false;
    };
    for (int i = 0; i < n; ++i) {
        if (a(i, i) <= zero_thr)
            raise(ErrorCode::BadBlockStructure, "blocks must have positive diagonals");
        for (int j = i + 1; j < n; ++j) {
            const bool inside = in_common_block(i, j);
            const bool nonzero = std::fabs(a(i, j)) > zero_thr;
            if (inside && !nonzero)
                raise(ErrorCode::BadBlockStructure, "zero entry inside a block");
            if (!inside && nonzero)
                raise(ErrorCode::BadBlockStructure, "nonzero entry between blocks");
        }
    }

    if (!factor_width_le_2(a, cfg))
        raise(ErrorCode::NotFactorWidth2, "matrix does not have factor width at most 2");

    FWDecomposition dec;
    dec.k = 2;
    double carry = 0.0;
    for (std::size_t t = 0; t < ranges.size(); ++t) {
        const auto [blo, bhi] = ranges[t];
        const int size = bhi - blo + 1;
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), blo);
        SymMatrix block = a.principal_submatrix(idx);
        block.add(0, 0, -carry);

        const bool last = t + 1 == ranges.size();
        if (!last) {
            const int corner = size - 1;  // cut position inside the block
            const double avail = block(corner, corner);
            double share;
            const bool next_is_final_2x2 = t + 2 == ranges.size() && cuts.back() == n - 2;
            if (next_is_final_2x2) {
                // Leave the trailing 2x2 block exactly its rank-1 amount.
                share = avail - a(n - 2, n - 1) * a(n - 2, n - 1) / a(n - 1, n - 1);
            } else if (size == 2) {
                share = block(0, 1) * block(0, 1) / block(0, 0);
            } else {
                // Smallest feasible corner share by bisection; feasibility is
                // an upward-closed interval in the share.
                SymMatrix probe = block;
                probe.set(corner, corner, avail);
                if (!sdd_feasible(probe, cfg))
                    raise(ErrorCode::NotFactorWidth2, "block is not factor width 2 at full corner");
                double g_lo = 0.0, g_hi = avail;
                for (int it = 0; it < 100; ++it) {
                    const double mid = 0.5 * (g_lo + g_hi);
                    probe.set(corner, corner, mid);
                    if (sdd_feasible(probe, cfg))
                        g_hi = mid;
                    else
                        g_lo = mid;
                }
                share = g_hi;
            }
            block.set(corner, corner, share);
            carry = share;
        }

        FWDecomposition part;
        if (size == 2) {
            part.k = 2;
            const double alpha = block(0, 0);
            if (alpha <= 0)
                raise(ErrorCode::NotFactorWidth2, "block corner exhausted");
            part.vectors.push_back(
                pair_vector(2, 0, std::sqrt(alpha), 1, block(0, 1) / std::sqrt(alpha)));
            const double leftover = block(1, 1) - block(0, 1) * block(0, 1) / alpha;
            if (leftover > cfg.tol_recon * std::max(block.max_diag(), 0.0))
                part.vectors.push_back(singleton(2, 1, std::sqrt(leftover)));
        } else {
            part = decompose_fw2_optimal(block, cfg);
        }
        for (const auto& v : part.vectors) dec.vectors.push_back(v.embedded(n, idx));
    }
    dec.measure_residual(a);
    return dec;
}

}  // namespace fw
