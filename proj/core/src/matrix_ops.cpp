#include "factorwidth/matrix_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fw {

SymMatrix CholeskyResult::reconstruct() const {
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double sum = 0.0;
            for (int c = 0; c < rank; ++c)
                sum += factor[static_cast<std::size_t>(i) * n + c] *
                       factor[static_cast<std::size_t>(j) * n + c];
            a.set(i, j, sum);
        }
    return a;
}

CholeskyResult is_psd(const SymMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    CholeskyResult res;
    res.n = n;
    res.factor.assign(static_cast<std::size_t>(n) * n, 0.0);
    if (n == 0) {
        res.success = true;
        return res;
    }

    std::vector<double> work = a.to_dense();
    auto w = [&](int i, int j) -> double& { return work[static_cast<std::size_t>(i) * n + j]; };

    const double thr = cfg.tol_psd * std::max(a.max_diag(), 0.0);
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 0);

    res.min_pivot = w(0, 0);
    int step = 0;
    while (!remaining.empty()) {
        int best = remaining[0];
        for (int r : remaining)
            if (w(r, r) > w(best, best)) best = r;
        const double pivot = w(best, best);
        if (pivot <= thr) break;
        res.min_pivot = std::min(res.min_pivot, pivot);

        const double root = std::sqrt(pivot);
        for (int r : remaining)
            res.factor[static_cast<std::size_t>(r) * n + step] = w(r, best) / root;
        remaining.erase(std::find(remaining.begin(), remaining.end(), best));
        for (int r : remaining)
            for (int s : remaining)
                w(r, s) -= w(r, best) * w(s, best) / pivot;
        ++step;
    }
    res.rank = step;

    // Whatever is left must be negligible for a PSD input: the residual
    // diagonal may not dip below -thr and the residual off-diagonal is
    // bounded by the residual diagonal.
    res.success = true;
    for (int r : remaining) {
        res.min_pivot = std::min(res.min_pivot, w(r, r));
        if (w(r, r) < -thr) res.success = false;
    }
    if (res.success) {
        for (std::size_t i = 0; i < remaining.size() && res.success; ++i)
            for (std::size_t j = i + 1; j < remaining.size(); ++j)
                if (std::fabs(w(remaining[i], remaining[j])) > 4.0 * thr) {
                    res.success = false;
                    break;
                }
    }
    if (!res.success)
        res.factor.assign(static_cast<std::size_t>(n) * n, 0.0);
    return res;
}

DiagonalNormalization diagonal_normalize(const SymMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    const double zero_thr = cfg.tol_zero * std::max({a.max_abs(), 0.0});

    DiagonalNormalization out;
    for (int i = 0; i < n; ++i) {
        if (a(i, i) > zero_thr) {
            out.kept.push_back(i);
        } else {
            for (int j = 0; j < n; ++j)
                if (j != i && std::fabs(a(i, j)) > zero_thr)
                    raise(ErrorCode::ZeroDiagonalNonzeroRow,
                          "zero diagonal entry with nonzero row: input is not PSD");
        }
    }
    const int m = static_cast<int>(out.kept.size());
    out.scale.resize(m);
    out.normalized = SymMatrix(m);
    for (int t = 0; t < m; ++t) out.scale[t] = 1.0 / std::sqrt(a(out.kept[t], out.kept[t]));
    for (int s = 0; s < m; ++s)
        for (int t = s; t < m; ++t)
            out.normalized.set(s, t, out.scale[s] * out.scale[t] * a(out.kept[s], out.kept[t]));
    return out;
}

int bandwidth(const SymMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const double thr = cfg.tol_zero * a.max_abs();
    int band = 1;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (std::fabs(a(i, j)) > thr) band = std::max(band, j - i + 1);
    return band;
}

NnzStats nnz_stats(const SymMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const double thr = cfg.tol_zero * a.max_abs();
    NnzStats st;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (std::fabs(a(i, j)) > thr) ++st.nnzu;
    st.nnz = 2 * st.nnzu;
    return st;
}

SymMatrix comparison_matrix(const SymMatrix& a) {
    SymMatrix m(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        m.set(i, i, std::fabs(a(i, i)));
        for (int j = i + 1; j < a.dim(); ++j) m.set(i, j, -std::fabs(a(i, j)));
    }
    return m;
}

bool diagonally_dominant(const SymMatrix& a) {
    for (int i = 0; i < a.dim(); ++i) {
        double off = 0.0;
        for (int j = 0; j < a.dim(); ++j)
            if (j != i) off += std::fabs(a(i, j));
        if (a(i, i) < off) return false;
    }
    return true;
}

SymMatrix hadamard_product(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim())
        raise(ErrorCode::DimensionMismatch, "Hadamard product needs equal dimensions");
    SymMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) out.set(i, j, a(i, j) * b(i, j));
    return out;
}

SymMatrix hadamard_power(const SymMatrix& a, double s, const ToleranceConfig& cfg) {
    cfg.validate();
    if (!(s > 0)) raise(ErrorCode::BadArgs, "Hadamard power requires s > 0");
    const bool integral = (s == std::floor(s));
    const double slack = cfg.tol_zero * a.max_abs();
    if (!integral && !a.entrywise_nonneg(slack))
        raise(ErrorCode::NegativeEntryNonIntegerPower,
              "non-integer Hadamard power of a matrix with negative entries");
    SymMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) {
            double v = a(i, j);
            if (!integral && v < 0) v = 0.0;  // within slack of zero
            out.set(i, j, std::pow(v, s));
        }
    return out;
}

}  // namespace fw
