#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "factorwidth/matrix_ops.hpp"
#include "factorwidth/sym_matrix.hpp"
#include "test_support.hpp"

using namespace fw;
using fwtest::frob_rel_error;
using fwtest::random_psd;

namespace {

// Leading-minor recurrence for tridiagonal matrices:
// d_1 = a_1, d_k = a_k d_{k-1} - b_{k-1}^2 d_{k-2}.
std::vector<double> tridiag_leading_minors(const SymMatrix& a) {
    std::vector<double> d(a.dim());
    for (int k = 0; k < a.dim(); ++k) {
        const double prev = k >= 1 ? d[k - 1] : 1.0;
        const double prev2 = k >= 2 ? d[k - 2] : 1.0;
        d[k] = a(k, k) * prev;
        if (k >= 1) d[k] -= a(k - 1, k) * a(k - 1, k) * prev2;
    }
    return d;
}

}  // namespace

TEST_CASE("packed storage is symmetric bit for bit") {
    SymMatrix a(4);
    a.set(1, 3, 0.1 + 0.2);  // not representable exactly
    CHECK(a(1, 3) == a(3, 1));
    a.set(3, 1, -7.25);
    CHECK(a(1, 3) == -7.25);
}

TEST_CASE("is_psd accepts the identity with full rank") {
    const auto res = is_psd(SymMatrix::identity(3));
    CHECK(res.success);
    CHECK(res.rank == 3);
    CHECK(frob_rel_error(SymMatrix::identity(3), res.reconstruct()) < 1e-14);
}

TEST_CASE("is_psd rejects an indefinite matrix") {
    const auto a = SymMatrix::from_rows({{1, 2}, {2, 1}});
    const auto res = is_psd(a);
    CHECK_FALSE(res.success);
    CHECK(res.min_pivot < 0);
}

TEST_CASE("is_psd accepts the tridiagonal example with rank 3") {
    const auto a = SymMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
    // Oracle: the leading minors 2, 3, 4 from the determinant recurrence are
    // all positive, so the matrix is PD with rank 3.
    const auto minors = tridiag_leading_minors(a);
    REQUIRE(minors == std::vector<double>{2, 3, 4});
    const auto res = is_psd(a);
    CHECK(res.success);
    CHECK(res.rank == 3);
}

TEST_CASE("is_psd handles semidefinite rank deficiency") {
    const auto a = SymMatrix::from_rows({{1, 1}, {1, 1}});
    const auto res = is_psd(a);
    CHECK(res.success);
    CHECK(res.rank == 1);
    CHECK(frob_rel_error(a, res.reconstruct()) < 1e-12);
}

TEST_CASE("is_psd rejects a hollow indefinite matrix") {
    const auto res = is_psd(SymMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK_FALSE(res.success);
}

TEST_CASE("is_psd is invariant under permutation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const SymMatrix a = random_psd(n, 2 + static_cast<int>(rng() % n), rng);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto base = is_psd(a);
        const auto permuted = is_psd(a.permuted(perm));
        CHECK(base.success == permuted.success);
        CHECK(base.rank == permuted.rank);
        CHECK(frob_rel_error(a, base.reconstruct()) < 1e-10);
    }
}

TEST_CASE("diagonal_normalize rescales to unit diagonal") {
    const auto a = SymMatrix::from_rows({{4, 2}, {2, 4}});
    const auto norm = diagonal_normalize(a);
    REQUIRE(norm.kept == std::vector<int>{0, 1});
    CHECK(norm.scale[0] == doctest::Approx(0.5));
    CHECK(norm.scale[1] == doctest::Approx(0.5));
    CHECK(norm.normalized(0, 0) == doctest::Approx(1.0));
    CHECK(norm.normalized(0, 1) == doctest::Approx(0.5));
}

TEST_CASE("diagonal_normalize drops a vanished row") {
    const auto norm = diagonal_normalize(SymMatrix::from_rows({{1, 0}, {0, 0}}));
    REQUIRE(norm.kept == std::vector<int>{0});
    CHECK(norm.normalized.dim() == 1);
    CHECK(norm.normalized(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("diagonal_normalize rejects a zero diagonal with nonzero row") {
    CHECK_THROWS_WITH_AS(diagonal_normalize(SymMatrix::from_rows({{0, 1}, {1, 1}})),
                         doctest::Contains("ZeroDiagonalNonzeroRow"), Error);
}

TEST_CASE("diagonal_normalize round-trips through the inverse scaling") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const SymMatrix a = random_psd(n, n + 1, rng);
        const auto norm = diagonal_normalize(a);
        REQUIRE(static_cast<int>(norm.kept.size()) == n);
        for (int i = 0; i < n; ++i)
            CHECK(norm.normalized(i, i) == doctest::Approx(1.0).epsilon(1e-12));
        SymMatrix back(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                back.set(i, j, norm.normalized(i, j) / (norm.scale[i] * norm.scale[j]));
        CHECK(frob_rel_error(a, back) < 1e-12);
    }
}

TEST_CASE("bandwidth classifies diagonal, tridiagonal, and full matrices") {
    SymMatrix d(3);
    d.set(0, 0, 1);
    d.set(1, 1, 2);
    d.set(2, 2, 3);
    CHECK(bandwidth(d) == 1);
    CHECK(bandwidth(SymMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}})) == 2);
    SymMatrix ones(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) ones.set(i, j, 1.0);
    CHECK(bandwidth(ones) == 4);
}

TEST_CASE("nnz_stats counts strictly-upper nonzeros") {
    SymMatrix ones(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) ones.set(i, j, 1.0);
    CHECK(nnz_stats(ones).nnzu == 6);
    CHECK(nnz_stats(ones).nnz == 12);
    CHECK(nnz_stats(SymMatrix::identity(3)).nnzu == 0);
    CHECK(nnz_stats(SymMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}})).nnzu == 2);
}

TEST_CASE("comparison_matrix flips off-diagonal signs") {
    const auto already = SymMatrix::from_rows({{2, -1}, {-1, 2}});
    CHECK(frob_rel_error(already, comparison_matrix(already)) == 0.0);
    const auto flipped = comparison_matrix(SymMatrix::from_rows({{2, 1}, {1, 2}}));
    CHECK(flipped(0, 1) == -1.0);
    CHECK(flipped(0, 0) == 2.0);
    const auto j3 = comparison_matrix(SymMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(j3(i, j) == (i == j ? 1.0 : -1.0));
}

TEST_CASE("hadamard_product masks against the identity") {
    const auto a = SymMatrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    const auto masked = hadamard_product(a, SymMatrix::identity(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(masked(i, j) == (i == j ? a(i, i) : 0.0));
}

TEST_CASE("hadamard_product dimension mismatch") {
    CHECK_THROWS_WITH_AS(hadamard_product(SymMatrix::identity(2), SymMatrix::identity(3)),
                         doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("fixed 5x5 pair: ranks 2, 2, and 4 for the product") {
    const auto a = SymMatrix::from_rows({{2, 1, 2, 1, 0},
                                         {1, 1, 1, 1, 0},
                                         {2, 1, 2, 1, 0},
                                         {1, 1, 1, 1, 0},
                                         {0, 0, 0, 0, 0}});
    const auto b = SymMatrix::from_rows({{2, 0, 1, -1, 0},
                                         {0, 2, 1, 1, 0},
                                         {1, 1, 1, 0, 0},
                                         {-1, 1, 0, 1, 0},
                                         {0, 0, 0, 0, 0}});
    CHECK(is_psd(a).rank == 2);
    CHECK(is_psd(b).rank == 2);
    const auto prod = hadamard_product(a, b);
    const auto res = is_psd(prod);
    CHECK(res.success);
    CHECK(res.rank == 4);
}

TEST_CASE("hadamard_power takes entrywise roots") {
    const auto root = hadamard_power(SymMatrix::from_rows({{4, 2}, {2, 4}}), 0.5);
    CHECK(root(0, 0) == doctest::Approx(2.0));
    CHECK(root(0, 1) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("hadamard_power rejects non-integer powers of signed matrices") {
    const auto a = SymMatrix::from_rows({{2, -1}, {-1, 2}});
    CHECK_THROWS_WITH_AS(hadamard_power(a, 0.5),
                         doctest::Contains("NegativeEntryNonIntegerPower"), Error);
    CHECK_NOTHROW(hadamard_power(a, 2.0));  // integer powers are fine
}

TEST_CASE("scaling identity (D a D)^s = D^s a^s D^s for nonnegative a") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(0.1, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        SymMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a.set(i, j, unif(rng));
        std::vector<double> d(n);
        for (auto& x : d) x = unif(rng);
        for (double s : {0.5, 1.0, 2.5}) {
            SymMatrix dad(n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) dad.set(i, j, d[i] * d[j] * a(i, j));
            const SymMatrix left = hadamard_power(dad, s);
            const SymMatrix pow_a = hadamard_power(a, s);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    const double right = std::pow(d[i], s) * std::pow(d[j], s) * pow_a(i, j);
                    CHECK(left(i, j) == doctest::Approx(right).epsilon(1e-12));
                }
        }
    }
}

TEST_CASE("Schur product of PSD matrices stays PSD") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const SymMatrix a = random_psd(n, n, rng);
        const SymMatrix b = random_psd(n, n, rng);
        CHECK(is_psd(hadamard_product(a, b)).success);
    }
}
