#include "factorwidth/sym_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace fw {

SymMatrix SymMatrix::from_dense(int n, std::span<const double> row_major) {
    if (static_cast<std::size_t>(n) * n != row_major.size())
        raise(ErrorCode::DimensionMismatch, "dense buffer does not match dimension");
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double x = row_major[static_cast<std::size_t>(i) * n + j];
            const double y = row_major[static_cast<std::size_t>(j) * n + i];
            a.set(i, j, 0.5 * (x + y));
        }
    return a;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<double> dense;
    dense.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            raise(ErrorCode::DimensionMismatch, "rows must form a square matrix");
        dense.insert(dense.end(), row.begin(), row.end());
    }
    double scale = 0.0;
    for (double v : dense) scale = std::max(scale, std::fabs(v));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = std::fabs(dense[static_cast<std::size_t>(i) * n + j] -
                                       dense[static_cast<std::size_t>(j) * n + i]);
            if (d > 1e-12 * std::max(scale, 1.0))
                raise(ErrorCode::BadArgs, "matrix literal is not symmetric");
        }
    return from_dense(n, dense);
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix a(n);
    for (int i = 0; i < n; ++i) a.set(i, i, 1.0);
    return a;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            const double v = (*this)(i, j);
            sum += (i == j ? 1.0 : 2.0) * v * v;
        }
    return std::sqrt(sum);
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
}

double SymMatrix::max_diag() const {
    double m = n_ > 0 ? (*this)(0, 0) : 0.0;
    for (int i = 1; i < n_; ++i) m = std::max(m, (*this)(i, i));
    return m;
}

bool SymMatrix::entrywise_nonneg(double slack) const {
    for (double v : data_)
        if (v < -slack) return false;
    return true;
}

std::vector<double> SymMatrix::to_dense() const {
    std::vector<double> out(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out[static_cast<std::size_t>(i) * n_ + j] = (*this)(i, j);
    return out;
}

SymMatrix SymMatrix::principal_submatrix(std::span<const int> indices) const {
    const int m = static_cast<int>(indices.size());
    SymMatrix sub(m);
    for (int i = 0; i < m; ++i) {
        if (indices[i] < 0 || indices[i] >= n_)
            raise(ErrorCode::BadArgs, "submatrix index out of range");
        for (int j = i; j < m; ++j) sub.set(i, j, (*this)(indices[i], indices[j]));
    }
    return sub;
}

SymMatrix SymMatrix::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        raise(ErrorCode::DimensionMismatch, "permutation length mismatch");
    SymMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) out.set(i, j, (*this)(perm[i], perm[j]));
    return out;
}

double SymMatrix::frobenius_distance(const SymMatrix& other) const {
    if (other.dim() != n_)
        raise(ErrorCode::DimensionMismatch, "dimension mismatch in distance");
    double sum = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            const double v = (*this)(i, j) - other(i, j);
            sum += (i == j ? 1.0 : 2.0) * v * v;
        }
    return std::sqrt(sum);
}

}  // namespace fw
