#include <doctest.h>

#include "excol/gen.hpp"
#include "excol/oracle.hpp"

using namespace excol;

namespace {

Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

}  // namespace

TEST_CASE("brute colorability basics") {
    CHECK_FALSE(brute_k_colorable(complete(3), 2));
    CHECK(brute_k_colorable(complete(3), 3));
    CHECK(brute_k_colorable(path(4), 2));
    CHECK(brute_k_colorable(Graph(0), 0));
    CHECK_FALSE(brute_k_colorable(Graph(1), 0));
}

TEST_CASE("brute cover count hand values") {
    CHECK(brute_cover_count(complete(3), 3, {}, VertexSet::range(3)) == 6);
    CHECK(brute_cover_count(complete(3), 2, {}, VertexSet::range(3)) == 0);
    // empty ground: exactly the all-empty tuple
    CHECK(brute_cover_count(complete(3), 2, {}, VertexSet()) == 1);
}

TEST_CASE("brute cover count with required hits (the P3 h example)") {
    Graph p3 = path(3);
    VertexSet ground = VertexSet::of({1, 2});
    CHECK(brute_cover_count(p3, 2, {}, ground) == 2);
    CHECK(brute_cover_count(p3, 2, {VertexSet::single(1)}, ground) == 0);
}

TEST_CASE("brute list colorable mirrors tiny instances") {
    ListInstance inst;
    inst.g = Graph(1);
    inst.lists.universe_size = 8;
    inst.lists.lists = {{7}};
    CHECK(brute_list_colorable(inst));

    ListInstance clash;
    clash.g = Graph(2, {{0, 1}});
    clash.lists.universe_size = 1;
    clash.lists.lists = {{0}, {0}};
    CHECK_FALSE(brute_list_colorable(clash));
}

TEST_CASE("brute removal best on hand families") {
    SetFamily disjoint;
    disjoint.universe_size = 3;
    disjoint.delta = 1;
    disjoint.members = {{0}, {1}, {2}};
    CHECK(brute_removal_best(disjoint, Rational(1)) == 3);

    // m copies of {0}: keep one, or delete the point and keep all
    for (int m = 2; m <= 6; ++m) {
        SetFamily copies;
        copies.universe_size = 1;
        copies.delta = 1;
        copies.members.assign(static_cast<std::size_t>(m), {0});
        CHECK(brute_removal_best(copies, Rational(1)) == std::max(1, m - 1));
    }

    CHECK(brute_removal_best(hard_instance(1, 2, 1), Rational(1)) == 1);
}

TEST_CASE("budgets refuse oversized inputs") {
    OracleBudget tiny;
    tiny.max_assignments = 10;
    CHECK_THROWS_AS(brute_k_colorable(complete(5), 3, tiny), ResourceError);
    OracleBudget small_v;
    small_v.max_vertices = 4;
    CHECK_THROWS_AS(brute_cover_count(complete(5), 2, {}, VertexSet::range(5), small_v),
                    ResourceError);
    SetFamily big;
    big.universe_size = 13;
    big.delta = 1;
    big.members = {{0}};
    CHECK_THROWS_AS(brute_removal_best(big, Rational(1)), ResourceError);
}

TEST_CASE("bfs distances") {
    std::vector<int> d = bfs_distances(path(4), 0);
    CHECK(d == std::vector<int>{0, 1, 2, 3});
    GraphBuilder b(3);
    b.add_edge(0, 1);
    std::vector<int> d2 = bfs_distances(b.build(), 0);
    CHECK(d2 == std::vector<int>{0, 1, -1});
}
