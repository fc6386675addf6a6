#pragma once

#include <span>
#include <vector>

#include "factorwidth/sym_matrix.hpp"

namespace fw {

/// Vector with bounded support: strictly increasing 0-based indices paired
/// with nonzero values.
struct SparseVector {
    int dim = 0;
    std::vector<int> support;
    std::vector<double> values;

    /// Builds from a dense vector, culling entries with magnitude <= cull.
    static SparseVector from_dense(std::span<const double> dense, double cull = 0.0);

    int support_size() const noexcept { return static_cast<int>(support.size()); }
    std::vector<double> to_dense() const;

    /// Same vector embedded in a larger space: support index t becomes
    /// positions[t].
    SparseVector embedded(int new_dim, std::span<const int> positions) const;

    /// Entrywise scaling by a per-coordinate factor (full-length array).
    SparseVector scaled(std::span<const double> factors) const;
};

/// Sum-of-outer-products decomposition with a support bound of k per term.
/// `residual` is the relative Frobenius reconstruction error against the
/// matrix the decomposition was computed from.
struct FWDecomposition {
    int k = 0;
    std::vector<SparseVector> vectors;
    double residual = 0.0;

    int term_count() const noexcept { return static_cast<int>(vectors.size()); }
    int max_support() const;

    /// Sum of v v^T over all terms, in dimension n.
    SymMatrix reconstruct(int n) const;

    /// Recomputes `residual` against `a` and returns it.
    double measure_residual(const SymMatrix& a);
};

}  // namespace fw
