#pragma once

#include <vector>

#include "factorwidth/sym_matrix.hpp"

namespace fw {

/// Outcome of the pivoted Cholesky semidefiniteness test.
///
/// On success, factor (row-major n*n, one column per accepted pivot, in
/// original row indexing) reconstructs the input: factor * factor^T = A
/// within tol_recon * ||A||_F. Columns beyond `rank` are zero. min_pivot is
/// the most negative value seen on the working diagonal, so it is negative
/// exactly when the test failed.
struct CholeskyResult {
    bool success = false;
    int n = 0;
    int rank = 0;
    double min_pivot = 0.0;
    std::vector<double> factor;

    SymMatrix reconstruct() const;
};

/// Diagonally-pivoted Cholesky. Total: never throws.
///
/// success is true iff the factorization completes with every working
/// diagonal value >= -tol_psd * max_diag; rank counts the pivots
/// > tol_psd * max_diag. Zero rows/columns of a semidefinite input are
/// skipped rather than treated as failures.
CholeskyResult is_psd(const SymMatrix& a, const ToleranceConfig& cfg = {});

/// Result of unit-diagonal rescaling. `kept` lists the indices that survive
/// (0-based, ascending); `scale[t] = 1/sqrt(a(kept[t],kept[t]))`;
/// `normalized` is scale-conjugated A restricted to `kept`, so it has unit
/// diagonal. Indices with a vanishing diagonal entry are dropped; for a PSD
/// input their whole row must vanish too, which is enforced.
struct DiagonalNormalization {
    std::vector<int> kept;
    std::vector<double> scale;
    SymMatrix normalized;
};

/// Throws ZeroDiagonalNonzeroRow when a vanishing diagonal entry has a
/// non-vanishing row (the input cannot be PSD then).
DiagonalNormalization diagonal_normalize(const SymMatrix& a, const ToleranceConfig& cfg = {});

/// Smallest k >= 1 with a(i,j) = 0 whenever |i-j| >= k, zeros classified at
/// tol_zero relative to the largest entry magnitude. Diagonal matrices give 1.
int bandwidth(const SymMatrix& a, const ToleranceConfig& cfg = {});

struct NnzStats {
    long nnzu = 0;  // strictly-upper nonzero count
    long nnz = 0;   // total off-diagonal nonzeros, == 2 * nnzu
};

NnzStats nnz_stats(const SymMatrix& a, const ToleranceConfig& cfg = {});

/// Comparison matrix: |a(i,i)| on the diagonal, -|a(i,j)| off it. Its
/// positive semidefiniteness certifies scaled diagonal dominance.
SymMatrix comparison_matrix(const SymMatrix& a);

/// True when a(i,i) >= sum_{j != i} |a(i,j)| for every row.
bool diagonally_dominant(const SymMatrix& a);

SymMatrix hadamard_product(const SymMatrix& a, const SymMatrix& b);

/// Entrywise s-th power, s > 0. Non-integer s requires entrywise-nonnegative
/// input (entries within -tol_zero of zero are clamped to zero first).
SymMatrix hadamard_power(const SymMatrix& a, double s, const ToleranceConfig& cfg = {});

}  // namespace fw
