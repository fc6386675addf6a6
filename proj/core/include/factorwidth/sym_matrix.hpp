#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "factorwidth/errors.hpp"

namespace fw {

/// Tolerances shared across the numeric decision procedures.
///
/// tol_psd   relative pivot acceptance threshold for semidefiniteness tests;
/// tol_recon relative Frobenius residual accepted for reconstructions;
/// tol_zero  relative magnitude below which an entry counts as a structural
///           zero (kept separate from tol_psd so that sparsity decisions do
///           not inherit numerical slack);
/// max_iter  iteration cap for the block-coordinate solver and the scaling
///           searches.
struct ToleranceConfig {
    double tol_psd = 1e-9;
    double tol_recon = 1e-8;
    double tol_zero = 1e-12;
    long max_iter = 50000;

    void validate() const {
        if (!(tol_psd > 0) || !(tol_recon > 0) || !(tol_zero > 0))
            raise(ErrorCode::BadArgs, "tolerances must be strictly positive");
        if (max_iter < 1) raise(ErrorCode::BadArgs, "max_iter must be >= 1");
    }
};

/// Dense real symmetric matrix with packed upper-triangle storage.
///
/// Only the n(n+1)/2 entries with i <= j are stored, so a(i,j) and a(j,i)
/// read the same memory and symmetry is exact by construction. Indices are
/// 0-based throughout the C++ API; the text file formats are 1-based.
class SymMatrix {
  public:
    SymMatrix() = default;

    explicit SymMatrix(int n) : n_(n), data_(packed_size(n), 0.0) {
        if (n < 0) raise(ErrorCode::BadArgs, "dimension must be nonnegative");
    }

    /// Builds from full row-major storage, symmetrizing by averaging the
    /// (i,j) / (j,i) pair. Deviations are the parser's concern, not this
    /// constructor's.
    static SymMatrix from_dense(int n, std::span<const double> row_major);

    /// Convenience for literals in tests and examples; rows must agree with
    /// their transpose to 1e-12 relative.
    static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    static SymMatrix identity(int n);

    int dim() const noexcept { return n_; }

    double operator()(int i, int j) const { return data_[index(i, j)]; }

    void set(int i, int j, double v) { data_[index(i, j)] = v; }

    void add(int i, int j, double v) { data_[index(i, j)] += v; }

    std::span<const double> packed() const noexcept { return data_; }

    double trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    double max_diag() const;  // max over diagonal entries (not magnitudes)

    /// True when every entry is >= -slack.
    bool entrywise_nonneg(double slack) const;

    std::vector<double> to_dense() const;  // row-major n*n

    SymMatrix principal_submatrix(std::span<const int> indices) const;

    /// Returns B with B(i,j) = (*this)(perm[i], perm[j]).
    SymMatrix permuted(std::span<const int> perm) const;

    /// Frobenius norm of (*this - other); dimensions must match.
    double frobenius_distance(const SymMatrix& other) const;

    static std::size_t packed_size(int n) {
        return static_cast<std::size_t>(n) * (n + 1) / 2;
    }

  private:
    std::size_t index(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + j;
    }

    int n_ = 0;
    std::vector<double> data_;
};

}  // namespace fw
