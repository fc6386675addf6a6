#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "factorwidth/hadamard.hpp"
#include "factorwidth/matrix_ops.hpp"
#include "test_support.hpp"

using namespace fw;

namespace {

SymMatrix all_ones(int n) {
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a.set(i, j, 1.0);
    return a;
}

SymMatrix nonneg_fw2(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a.set(i, j, unif(rng));
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) off += a(i, j);
        a.set(i, i, off + unif(rng));
    }
    return a;
}

}  // namespace

TEST_CASE("product bound arithmetic") {
    CHECK(fran_product_bound(2, 2) == 4);
    CHECK(fran_product_bound(1, 7) == 7);
    CHECK(fran_product_bound(3, 5) == 15);
    CHECK_THROWS_WITH_AS(fran_product_bound(0, 3), doctest::Contains("BadArgs"), Error);
    CHECK_THROWS_WITH_AS(fran_product_bound(1L << 40, 1L << 40),
                         doctest::Contains("Overflow"), Error);
}

TEST_CASE("power bound binomials") {
    CHECK(fran_power_bound(5, 1) == 5);
    CHECK(fran_power_bound(2, 3) == 4);  // C(4,3)
    CHECK(fran_power_bound(3, 2) == 6);  // C(4,2)
    CHECK_THROWS_WITH_AS(fran_power_bound(0, 1), doctest::Contains("BadArgs"), Error);
    CHECK_THROWS_WITH_AS(fran_power_bound(1000000, 12), doctest::Contains("Overflow"), Error);
}

TEST_CASE("power bound grows polynomially, not exponentially") {
    for (long r = 1; r <= 4; ++r)
        for (long s = 1; s <= 6; ++s)
            CHECK(fran_power_bound(r, s) <= static_cast<long>(std::pow(r, s) + 0.5));
}

TEST_CASE("power rule table") {
    std::mt19937_64 rng(79);
    const SymMatrix fw2 = nonneg_fw2(4, rng);
    CHECK(power_preserves_width(fw2, 2, 1.5).verdict == PowerVerdict::Guaranteed);
    CHECK(power_preserves_width(fw2, 2, 1.5).rule == "fw2-power");

    const SymMatrix psd = fwtest::random_psd(4, 4, rng);
    CHECK(power_preserves_width(psd, 3, 2.0).rule == "integer-power");

    const SymMatrix big = nonneg_fw2(6, rng);
    const auto converse = power_preserves_width(big, 4, 1.5);
    CHECK(converse.verdict == PowerVerdict::CounterexampleClass);
    CHECK(converse.rule == "below-threshold");

    CHECK(power_preserves_width(SymMatrix::identity(3), 1, 0.7).rule == "diagonal");
    CHECK(power_preserves_width(nonneg_fw2(5, rng), 5, 3.5).rule == "fitzgerald-horn");
    CHECK(power_preserves_width(nonneg_fw2(5, rng), 3, 2.5).verdict ==
          PowerVerdict::NotGuaranteed);

    const SymMatrix signed_m = SymMatrix::from_rows({{2, -1}, {-1, 2}});
    CHECK_THROWS_WITH_AS(power_preserves_width(signed_m, 2, 1.5),
                         doctest::Contains("NegativeEntryNonIntegerPower"), Error);
}

TEST_CASE("minimal power: strongly coupled 3x3 eventually reaches width 2") {
    const auto a = SymMatrix::from_rows(
        {{1, 0.9, 0.9}, {0.9, 1, 0.9}, {0.9, 0.9, 1}});
    REQUIRE(is_psd(a).success);
    const auto res = minimal_power_to_fw2(a);
    CHECK(res.first_success >= 2);  // 0.9 coupling is too strong at m = 1
    CHECK(res.first_success <= 10000);
    CHECK(res.verified_through >= res.first_success);
    // Cross-check the boundary against the width test itself.
    CHECK(factor_width_le_2(hadamard_power(a, static_cast<double>(res.first_success))));
    CHECK_FALSE(
        factor_width_le_2(hadamard_power(a, static_cast<double>(res.first_success - 1))));
}

TEST_CASE("minimal power: already width 2 means m = 1") {
    const auto a = SymMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
    const auto res = minimal_power_to_fw2(a);
    CHECK(res.first_success == 1);
}

TEST_CASE("minimal power rejects singular 2x2 submatrices") {
    CHECK_THROWS_WITH_AS(minimal_power_to_fw2(all_ones(3)),
                         doctest::Contains("DegenerateSubmatrix"), Error);
}

TEST_CASE("minimal power respects the cap") {
    const auto a = SymMatrix::from_rows(
        {{1, 0.9, 0.9}, {0.9, 1, 0.9}, {0.9, 0.9, 1}});
    CHECK_THROWS_WITH_AS(minimal_power_to_fw2(a, 1), doctest::Contains("CapExceeded"), Error);
}

TEST_CASE("width-2 powers stay width 2 empirically") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 8; ++trial) {
        const SymMatrix a = nonneg_fw2(3 + static_cast<int>(rng() % 3), rng);
        REQUIRE(factor_width_le_2(a));
        for (double s : {1.0, 1.5, 2.0, 2.7})
            CHECK(factor_width_le_2(hadamard_power(a, s)));
    }
}

TEST_CASE("width-2 closure under products") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const SymMatrix a = nonneg_fw2(n, rng);
        const SymMatrix b = fwtest::random_dd_all_nonzero(n, rng, 0.2);
        REQUIRE(factor_width_le_2(a));
        REQUIRE(factor_width_le_2(b));
        CHECK(factor_width_le_2(hadamard_product(a, b)));
    }
}

TEST_CASE("conjecture search returns clean trials in the open regime") {
    const auto res = conjecture_search(4, 3, 2.5, 100, 12345);
    CHECK(res.tested == 100);
    CHECK(res.counterexamples.empty());
    REQUIRE(res.trials.size() == 100);
    for (const auto& t : res.trials) CHECK_FALSE(t.counterexample);
}

TEST_CASE("conjecture search covers the Fitzgerald-Horn regime") {
    const auto res = conjecture_search(5, 5, 3.5, 10, 7);
    CHECK(res.counterexamples.empty());
}

TEST_CASE("conjecture search is reproducible and order independent") {
    const auto a = conjecture_search(4, 3, 2.5, 10, 99);
    const auto b = conjecture_search(4, 3, 2.5, 10, 99);
    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t t = 0; t < a.trials.size(); ++t) {
        CHECK(a.trials[t].seed == b.trials[t].seed);
        CHECK(a.trials[t].verdict == b.trials[t].verdict);
    }
}

TEST_CASE("conjecture search rejects closed regimes") {
    CHECK_THROWS_WITH_AS(conjecture_search(5, 3, 1.5, 10, 0), doctest::Contains("BadRegime"),
                         Error);
    CHECK_THROWS_WITH_AS(conjecture_search(5, 3, 2.0, 10, 0), doctest::Contains("BadRegime"),
                         Error);
}
