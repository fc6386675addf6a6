#include "factorwidth/sparse_vector.hpp"

#include <algorithm>
#include <cmath>

namespace fw {

SparseVector SparseVector::from_dense(std::span<const double> dense, double cull) {
    SparseVector v;
    v.dim = static_cast<int>(dense.size());
    for (int i = 0; i < v.dim; ++i)
        if (std::fabs(dense[i]) > cull) {
            v.support.push_back(i);
            v.values.push_back(dense[i]);
        }
    return v;
}

std::vector<double> SparseVector::to_dense() const {
    std::vector<double> out(dim, 0.0);
    for (std::size_t t = 0; t < support.size(); ++t) out[support[t]] = values[t];
    return out;
}

SparseVector SparseVector::embedded(int new_dim, std::span<const int> positions) const {
    if (static_cast<int>(positions.size()) != dim)
        raise(ErrorCode::DimensionMismatch, "embedding map must cover the source dimension");
    SparseVector v;
    v.dim = new_dim;
    for (std::size_t t = 0; t < support.size(); ++t) {
        const int p = positions[support[t]];
        if (p < 0 || p >= new_dim) raise(ErrorCode::BadArgs, "embedding position out of range");
        v.support.push_back(p);
        v.values.push_back(values[t]);
    }
    // Positions are required to be increasing on the support for the
    // invariant to survive; sort defensively for arbitrary maps.
    std::vector<std::size_t> idx(v.support.size());
    for (std::size_t t = 0; t < idx.size(); ++t) idx[t] = t;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t x, std::size_t y) { return v.support[x] < v.support[y]; });
    SparseVector sorted;
    sorted.dim = new_dim;
    for (std::size_t t : idx) {
        sorted.support.push_back(v.support[t]);
        sorted.values.push_back(v.values[t]);
    }
    return sorted;
}

SparseVector SparseVector::scaled(std::span<const double> factors) const {
    if (static_cast<int>(factors.size()) != dim)
        raise(ErrorCode::DimensionMismatch, "scale factor count mismatch");
    SparseVector v = *this;
    for (std::size_t t = 0; t < v.support.size(); ++t) v.values[t] *= factors[v.support[t]];
    return v;
}

int FWDecomposition::max_support() const {
    int m = 0;
    for (const auto& v : vectors) m = std::max(m, v.support_size());
    return m;
}

SymMatrix FWDecomposition::reconstruct(int n) const {
    SymMatrix sum(n);
    for (const auto& v : vectors)
        for (std::size_t s = 0; s < v.support.size(); ++s)
            for (std::size_t t = s; t < v.support.size(); ++t)
                sum.add(v.support[s], v.support[t], v.values[s] * v.values[t]);
    return sum;
}

double FWDecomposition::measure_residual(const SymMatrix& a) {
    const double norm = a.frobenius_norm();
    const double dist = reconstruct(a.dim()).frobenius_distance(a);
    residual = norm > 0 ? dist / norm : dist;
    return residual;
}

}  // namespace fw
