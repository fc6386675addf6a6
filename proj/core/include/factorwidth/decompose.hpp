#pragma once

#include <vector>

#include "factorwidth/sparse_vector.hpp"
#include "factorwidth/sym_matrix.hpp"

namespace fw {

/// Band Cholesky without pivoting, safe for semidefinite inputs: a vanishing
/// pivot yields a zero column (its below-diagonal entries must vanish too,
/// otherwise the input was not PSD). The nonzero columns of the factor are
/// the terms, so term_count equals rank(A) and every support fits inside the
/// band. Throws NotPsd and BandTooWide.
FWDecomposition decompose_banded(const SymMatrix& a, int k, const ToleranceConfig& cfg = {});

/// Tridiagonal decomposition via the Schur-complement recurrence
/// s_1 = a_1, s_j = a_j - b_{j-1}^2 / s_{j-1}: one 2-support term per
/// nonzero off-diagonal entry and one singleton per leftover positive pivot.
/// A vanishing s_j forces b_j = 0 for a PSD input (InconsistentZeroPivot
/// otherwise) and simply splits the matrix into independent blocks.
FWDecomposition decompose_tridiagonal(const SymMatrix& a, const ToleranceConfig& cfg = {});

/// Arrowhead decomposition: for each spoke i >= 2 a 2-support term with
/// entries (a(0,i)/sqrt(a(i,i)), sqrt(a(i,i))), plus a corner singleton when
/// a(0,0) exceeds the consumed mass. term_count equals rank(A).
/// Throws NotArrowhead and NotPsd (negative corner surplus).
FWDecomposition decompose_arrowhead(const SymMatrix& a, const ToleranceConfig& cfg = {});

/// Decomposition of a diagonally-dominant-with-equality matrix: one term
/// sqrt(|a(i,j)|) (sgn(a(i,j)) e_i + e_j) per nonzero strictly-upper entry,
/// so term_count equals nnzu(A). Throws NotDdEquality when some row's
/// diagonal is not its off-diagonal absolute sum.
FWDecomposition decompose_dd_equality(const SymMatrix& a, const ToleranceConfig& cfg = {});

/// Three 2-support vectors in dimension 3 reconstructing a unit-diagonal
/// matrix with off-diagonals (a, b, c); the exact shape the 3x3 adjustment
/// consumes and produces.
struct PairTriple {
    SparseVector u;  // support {0,1}
    SparseVector v;  // support {0,2}
    SparseVector w;  // support {1,2}
};

/// Raises the (0,0) entry of the matrix reconstructed by the seed triple
/// u = (a/y, y, 0), v = (x, 0, b/x), w = (0, c/z, z) from 1 to `target`
/// while keeping every other entry fixed, still using three 2-support
/// vectors. The new leading entries are located by bisection on the realized
/// (0,0) value of the reconstructed sum, bracketed by growing the trial
/// parameter geometrically; no symbolic formula is trusted.
/// Throws BadSeed (seed does not reconstruct) and TargetNotAboveOne.
PairTriple adjust_3x3_diagonal(double a, double b, double c, double x, double y, double z,
                               double target, const ToleranceConfig& cfg = {});

/// Width-2 decomposition with the minimal number of terms, nnzu(A), for
/// matrices in which every diagonal index lies in some all-nonzero 3x3
/// principal submatrix. Pipeline: rescale to diagonal dominance via the
/// comparison-matrix Perron vector, split off the diagonal surplus, emit the
/// equality part pairwise, then absorb each surplus into the first eligible
/// 3x3 submatrix through adjust_3x3_diagonal.
/// Throws NotFactorWidth2 and HypothesisFailed.
FWDecomposition decompose_fw2_optimal(const SymMatrix& a, const ToleranceConfig& cfg = {});

/// Width-2 decomposition of a chain of all-nonzero diagonal blocks that
/// overlap in single entries at `cut_indices` (0-based). Each cut corner is
/// split between its two blocks by bisecting for the smallest feasible
/// share, then each adjusted block decomposes to its own nnzu terms, so the
/// total is nnzu(A). Throws BadBlockStructure and NotFactorWidth2.
FWDecomposition decompose_block_overlap(const SymMatrix& a, const std::vector<int>& cut_indices,
                                        const ToleranceConfig& cfg = {});

}  // namespace fw
