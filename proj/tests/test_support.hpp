#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "factorwidth/sym_matrix.hpp"

namespace fwtest {

/// Gram matrix G G^T of an n x m standard-normal factor: PSD with rank
/// min(n, m) almost surely.
inline fw::SymMatrix random_psd(int n, int factor_cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> g(static_cast<std::size_t>(n) * factor_cols);
    for (auto& x : g) x = gauss(rng);
    fw::SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double sum = 0.0;
            for (int c = 0; c < factor_cols; ++c)
                sum += g[static_cast<std::size_t>(i) * factor_cols + c] *
                       g[static_cast<std::size_t>(j) * factor_cols + c];
            a.set(i, j, sum);
        }
    return a;
}

/// Diagonally dominant PSD matrix with every entry nonzero: random signs off
/// the diagonal, diagonals lifted to the absolute row sums plus a margin.
inline fw::SymMatrix random_dd_all_nonzero(int n, std::mt19937_64& rng, double margin = 0.0) {
    std::uniform_real_distribution<double> unif(0.2, 1.0);
    std::bernoulli_distribution coin(0.5);
    fw::SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a.set(i, j, (coin(rng) ? 1.0 : -1.0) * unif(rng));
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) off += std::fabs(a(i, j));
        a.set(i, i, off + margin);
    }
    return a;
}

/// Positive diagonal congruence D a D with entries of D in [0.25, 4].
inline fw::SymMatrix random_diagonal_scaling(const fw::SymMatrix& a, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.25, 4.0);
    std::vector<double> d(a.dim());
    for (auto& x : d) x = unif(rng);
    fw::SymMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) out.set(i, j, d[i] * d[j] * a(i, j));
    return out;
}

inline double frob_rel_error(const fw::SymMatrix& a, const fw::SymMatrix& b) {
    const double norm = a.frobenius_norm();
    return norm > 0 ? a.frobenius_distance(b) / norm : a.frobenius_distance(b);
}

}  // namespace fwtest
