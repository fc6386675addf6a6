#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "factorwidth/covering.hpp"

using namespace fw;

namespace {

SupportGraph cube_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 8; ++u)
        for (int bit : {1, 2, 4}) {
            const int v = u ^ bit;
            if (u < v) edges.emplace_back(u, v);
        }
    return SupportGraph(8, std::move(edges));
}

SupportGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return SupportGraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("schonheim_bound evaluations") {
    CHECK(schonheim_bound(7, 3) == 7);   // ceil(7/3 * ceil(6/2)) = ceil(7)
    CHECK(schonheim_bound(4, 2) == 6);   // all pairs
    CHECK(schonheim_bound(5, 5) == 1);
    CHECK(schonheim_bound(9, 3) == 12);
    CHECK_THROWS_WITH_AS(schonheim_bound(3, 1), doctest::Contains("BadArgs"), Error);
    CHECK_THROWS_WITH_AS(schonheim_bound(3, 4), doctest::Contains("BadArgs"), Error);
}

TEST_CASE("covering_number certified values") {
    const auto c73 = covering_number(7, 3);
    CHECK(c73.value == 7);
    CHECK(c73.certified);
    CHECK(c73.design.covers_all_pairs());

    const auto c44 = covering_number(4, 4);
    CHECK(c44.value == 1);
    CHECK(c44.certified);

    const auto c93 = covering_number(9, 3);
    CHECK(c93.value == 12);
    CHECK(c93.certified);
    CHECK(c93.design.covers_all_pairs());
}

TEST_CASE("covering_number dominates the Schonheim bound and certifies k = 3") {
    for (int n = 3; n <= 8; ++n)
        for (int k = 2; k <= n; ++k) {
            const auto res = covering_number(n, k);
            CHECK(res.value >= schonheim_bound(n, k));
            CHECK(res.design.covers_all_pairs());
            if (k == 3) {
                CHECK(res.certified);
                CHECK(res.value == schonheim_bound(n, 3));
            }
        }
}

TEST_CASE("covering_number is non-increasing in k") {
    for (int n = 3; n <= 8; ++n) {
        long prev = -1;
        for (int k = n; k >= 2; --k) {
            const auto res = covering_number(n, k);
            REQUIRE(res.certified);
            if (prev >= 0) CHECK(res.value >= prev);
            prev = res.value;
        }
    }
}

TEST_CASE("an exhausted budget degrades to an uncertified cover") {
    const auto res = covering_number(9, 4, 5);
    CHECK_FALSE(res.certified);
    CHECK(res.design.covers_all_pairs());
    CHECK(res.value >= schonheim_bound(9, 4));
}

TEST_CASE("clique cover of the cube graph needs six triangles") {
    const auto res = clique_cover_number(cube_graph(), 3);
    CHECK(res.value == 6);
    CHECK(res.certified);
    CHECK(res.cover.covers(cube_graph()));
}

TEST_CASE("clique covers of complete graphs match covering designs") {
    for (int n = 4; n <= 7; ++n)
        for (int k = 2; k <= std::min(n, 4); ++k) {
            const auto cc = clique_cover_number(SupportGraph::complete(n), k);
            const auto cover = covering_number(n, k);
            REQUIRE(cc.certified);
            REQUIRE(cover.certified);
            CHECK(cc.value == cover.value);
        }
}

TEST_CASE("pair cliques cover exactly the edges") {
    const auto res = clique_cover_number(path_graph(4), 2);
    CHECK(res.value == 3);
    CHECK(res.certified);
}

TEST_CASE("edgeless graphs need no cliques") {
    const auto res = clique_cover_number(SupportGraph(4, {}), 3);
    CHECK(res.value == 0);
    CHECK(res.certified);
}

TEST_CASE("triangle-free graphs need at least |E|/2 triangles") {
    const auto cube = clique_cover_number(cube_graph(), 3);
    CHECK(cube.value >= 6);  // 12 edges, two per triangle at most

    const auto c5 = clique_cover_number(
        SupportGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), 3);
    CHECK(c5.value >= 3);
    CHECK(c5.certified);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_WITH_AS(covering_number(3, 1), doctest::Contains("BadArgs"), Error);
    CHECK_THROWS_WITH_AS(clique_cover_number(path_graph(3), 4), doctest::Contains("BadArgs"),
                         Error);
}
