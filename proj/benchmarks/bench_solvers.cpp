#include <benchmark/benchmark.h>

#include <random>

#include "factorwidth/covering.hpp"
#include "factorwidth/decompose.hpp"
#include "factorwidth/matrix_ops.hpp"
#include "factorwidth/membership.hpp"

namespace {

using namespace fw;

SymMatrix random_dd(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.2, 1.0);
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a.set(i, j, unif(rng));
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) off += a(i, j);
        a.set(i, i, off + 0.3);
    }
    return a;
}

SymMatrix random_gram(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> g(static_cast<std::size_t>(n) * n);
    for (auto& x : g) x = gauss(rng);
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double sum = 0.0;
            for (int c = 0; c < n; ++c)
                sum += g[static_cast<std::size_t>(i) * n + c] *
                       g[static_cast<std::size_t>(j) * n + c];
            a.set(i, j, sum);
        }
    return a;
}

SupportGraph cube_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 8; ++u)
        for (int bit : {1, 2, 4}) {
            const int v = u ^ bit;
            if (u < v) edges.emplace_back(u, v);
        }
    return SupportGraph(8, std::move(edges));
}

void BM_pivoted_cholesky(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const SymMatrix a = random_gram(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(is_psd(a));
}
BENCHMARK(BM_pivoted_cholesky)->Arg(5)->Arg(8)->Arg(12);

void BM_sdd_test(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const SymMatrix a = random_dd(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(factor_width_le_2(a));
}
BENCHMARK(BM_sdd_test)->Arg(5)->Arg(8);

void BM_membership_accept(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const SymMatrix a = random_dd(5, rng);
    for (auto _ : state) benchmark::DoNotOptimize(membership(a, 2));
}
BENCHMARK(BM_membership_accept);

void BM_membership_reject(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const SymMatrix a = random_gram(5, rng);  // generically not width 2
    for (auto _ : state) benchmark::DoNotOptimize(membership(a, 2));
}
BENCHMARK(BM_membership_reject);

void BM_fw2_optimal(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const SymMatrix a = random_dd(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(decompose_fw2_optimal(a));
}
BENCHMARK(BM_fw2_optimal)->Arg(4)->Arg(6);

void BM_covering_number(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(covering_number(n, 3));
}
BENCHMARK(BM_covering_number)->Arg(7)->Arg(8)->Arg(9);

void BM_clique_cover_cube(benchmark::State& state) {
    const SupportGraph g = cube_graph();
    for (auto _ : state) benchmark::DoNotOptimize(clique_cover_number(g, 3));
}
BENCHMARK(BM_clique_cover_cube);

}  // namespace

BENCHMARK_MAIN();
