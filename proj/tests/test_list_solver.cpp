#include <doctest.h>

#include <algorithm>

#include "excol/gen.hpp"
#include "excol/list_solver.hpp"
#include "excol/oracle.hpp"
#include "excol/rng.hpp"

using namespace excol;

namespace {

Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

ListInstance random_instance(int n, double p, int universe, int max_list, std::uint64_t seed) {
    ListInstance inst;
    inst.g = gen_gnp(n, p, seed);
    inst.lists.universe_size = universe;
    inst.lists.lists.resize(static_cast<std::size_t>(n));
    CounterRng rng(seed ^ 0xabcdef);
    for (auto& l : inst.lists.lists) {
        int size = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_list)));
        while (static_cast<int>(l.size()) < size) {
            int c = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(universe)));
            if (std::find(l.begin(), l.end(), c) == l.end()) l.push_back(c);
        }
        std::sort(l.begin(), l.end());
    }
    return inst;
}

}  // namespace

TEST_CASE("single vertex takes its only color") {
    ListInstance inst;
    inst.g = Graph(1);
    inst.lists.universe_size = 8;
    inst.lists.lists = {{7}};
    auto c = solve_list_backtracking(inst);
    REQUIRE(c.has_value());
    CHECK(c->color(0) == 7);
}

TEST_CASE("an edge with clashing singletons has no coloring") {
    ListInstance inst;
    inst.g = Graph(2, {{0, 1}});
    inst.lists.universe_size = 1;
    inst.lists.lists = {{0}, {0}};
    CHECK_FALSE(solve_list_backtracking(inst).has_value());
}

TEST_CASE("backtracking agrees with product enumeration") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        ListInstance inst = random_instance(8, 0.35, 5, 4, seed);
        auto got = solve_list_backtracking(inst);
        CHECK(got.has_value() == brute_list_colorable(inst));
        if (got.has_value()) {
            CHECK(got->proper_total(inst.g));
            for (int v = 0; v < 8; ++v) {
                const auto& l = inst.lists.lists[static_cast<std::size_t>(v)];
                CHECK(std::find(l.begin(), l.end(), got->color(v)) != l.end());
            }
        }
    }
}

TEST_CASE("backtracking is deterministic") {
    ListInstance inst = random_instance(9, 0.4, 6, 3, 99);
    auto a = solve_list_backtracking(inst);
    auto b = solve_list_backtracking(inst);
    REQUIRE(a.has_value() == b.has_value());
    if (a.has_value()) CHECK(a->color_of == b->color_of);
}

TEST_CASE("augmentation route on triangles") {
    ListInstance same;
    same.g = complete(3);
    same.lists.universe_size = 2;
    same.lists.lists = {{0, 1}, {0, 1}, {0, 1}};
    CHECK_FALSE(solve_list_via_augmentation(same, 2));

    ListInstance spread;
    spread.g = complete(3);
    spread.lists.universe_size = 3;
    spread.lists.lists = {{0, 1}, {1, 2}, {0, 2}};
    CHECK(solve_list_via_augmentation(spread, 2));
}

TEST_CASE("K33 with the classic 2-lists is not choosable") {
    GraphBuilder b(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) b.add_edge(u, v);
    ListInstance inst;
    inst.g = b.build();
    inst.lists.universe_size = 3;
    inst.lists.lists = {{0, 1}, {0, 2}, {1, 2}, {0, 1}, {0, 2}, {1, 2}};
    CHECK_FALSE(brute_list_colorable(inst));
    CHECK_FALSE(solve_list_backtracking(inst).has_value());
    CHECK_FALSE(solve_list_via_augmentation(inst, 4));
}

TEST_CASE("augmentation agrees with backtracking on random instances") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        ListInstance inst = random_instance(7, 0.4, 5, 3, seed * 31);
        CHECK(solve_list_via_augmentation(inst, 3) ==
              solve_list_backtracking(inst).has_value());
    }
}
